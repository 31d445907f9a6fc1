use bcdmod::partitions::{enumerate_box, Bounds, Partition};
use bcdmod::Error;
use proptest::prelude::*;
use std::collections::HashMap;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

// standard Young tableaux counted by peeling corners
fn syt(l: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
    if l.is_empty() {
        return 1;
    }
    if let Some(v) = memo.get(l) {
        return *v;
    }
    let v = l.remove_cells().into_iter().map(|(m, _)| syt(&m, memo)).sum();
    memo.insert(l.clone(), v);
    v
}

#[test]
fn parsing_and_display() {
    for s in ["3,1", "(3,1)", "[3,1]", " 3, 1 "] {
        assert_eq!(s.parse::<Partition>().unwrap(), p(&[3, 1]));
    }
    assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    assert_eq!(Partition::empty().to_string(), "∅");
    assert!(Partition::new(vec![1, 2]).is_err());
    assert_eq!(p(&[2, 1, 0]), p(&[2, 1]));
}

#[test]
fn basic_statistics() {
    let l = p(&[4, 2, 1]);
    assert_eq!(l.size(), 7);
    assert_eq!(l.transpose(), p(&[3, 2, 1, 1]));
    assert_eq!(l[1], 4);
    assert_eq!(l[5], 0);
    assert_eq!(l.col(2), 2);
    assert_eq!(l.hook_length(1, 1).unwrap(), 6);
    assert_eq!(l.hook_length(2, 2).unwrap(), 1);
    assert_eq!(l.content_sum(), 0 + 1 + 2 + 3 - 1 + 0 - 2);
    assert_eq!(l.hook_length(3, 2), Err(Error::OutOfDiagram(3, 2)));
    assert!(l.d_stat(4, 1).is_err());
    assert_eq!(Partition::rectangle(2, 3), p(&[3, 3]));
    assert_eq!(Partition::column(3), p(&[1, 1, 1]));
}

#[test]
fn hook_length_formula_counts_tableaux() {
    let mut memo = HashMap::new();
    let b = Bounds { row1: Some(6), col1: Some(6), ..Bounds::default() };
    for l in enumerate_box(&b).unwrap().into_iter().filter(|l| l.size() <= 12) {
        let hooks: u128 = l.cells().map(|(i, j)| l.hook_length(i, j).unwrap() as u128).product();
        let fact: u128 = (1..=l.size() as u128).product();
        assert_eq!(fact / hooks, syt(&l, &mut memo), "{l}");
    }
}

#[test]
fn add_and_remove_are_inverse() {
    let l = p(&[3, 1, 1]);
    for (m, (i, j)) in l.add_cells() {
        assert_eq!(m.size(), l.size() + 1);
        assert!(m.contains(i, j) && !l.contains(i, j));
        assert!(m.remove_cells().iter().any(|(q, c)| *q == l && *c == (i, j)));
    }
    assert_eq!(l.add_cells().len(), 3);
    assert_eq!(l.remove_cells().len(), 2);
}

#[test]
fn box_enumeration() {
    for n in 1..=6 {
        for k in 1..=6 {
            let b = Bounds { row1: Some(k), col1: Some(n), ..Bounds::default() };
            let v = enumerate_box(&b).unwrap();
            assert_eq!(v.len(), binom(n + k, n));
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(enumerate_box(&b.transpose()).unwrap().len(), v.len());
        }
    }
    assert!(enumerate_box(&Bounds { row1: Some(3), ..Bounds::default() }).is_err());
}

#[test]
fn rectangle_content_sum() {
    for n in 1..=8usize {
        for k in 1..=8usize {
            let direct: i64 = (1..=n).flat_map(|i| (1..=k).map(move |j| j as i64 - i as i64)).sum();
            assert_eq!(Partition::rectangle(n, k).content_sum(), direct);
            assert_eq!(2 * direct, (n * k) as i64 * (k as i64 - n as i64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn transpose_is_an_involution(mut v in prop::collection::vec(0usize..12, 0..12)) {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(v).unwrap();
        let t = l.transpose();
        prop_assert_eq!(t.transpose(), l.clone());
        prop_assert_eq!(t.size(), l.size());
        prop_assert_eq!(t.len(), l[1]);
        prop_assert_eq!(t.content_sum(), -l.content_sum());
        // Σ cn = Σ C(λ_i, 2) - Σ C(λ^∨_j, 2)
        let c2 = |x: usize| (x * x.saturating_sub(1) / 2) as i64;
        let rhs: i64 = l.parts().iter().map(|&x| c2(x)).sum::<i64>() - t.parts().iter().map(|&x| c2(x)).sum::<i64>();
        prop_assert_eq!(l.content_sum(), rhs);
        for (i, j) in l.cells() {
            prop_assert_eq!(l.hook_length(i, j).unwrap(), t.hook_length(j, i).unwrap());
        }
    }
}
