use bcdmod::catdata;
use bcdmod::modularize::{self, Elem, Generator, Label, MChoices};
use bcdmod::partitions::Partition;
use bcdmod::series::{make_spec, Series};
use bcdmod::{CycNum, Error};
use num_rational::BigRational;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

// stabilizer predicted for a diagram of the modularized category, None if not a representative
fn representative_class(series: Series, n: usize, k: usize, l: &Partition) -> Option<usize> {
    let (r, c) = (l[1], l.len());
    match series {
        Series::CB => (r <= k && c <= n).then_some(1),
        Series::BD => match (r.cmp(&k), c <= n) {
            (std::cmp::Ordering::Less, true) => Some(1),
            (std::cmp::Ordering::Equal, true) => Some(2),
            _ => None,
        },
        Series::D => {
            if r > k || c > n {
                None
            } else {
                Some(1 + usize::from(r == k) + usize::from(c == n) + usize::from(r == k && c == n))
            }
        }
        _ => unreachable!(),
    }
}

#[test]
fn orbits_match_the_representative_sets() {
    for series in [Series::CB, Series::BD, Series::D] {
        for (n, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let spec = make_spec(series, n, k).unwrap();
            let orbits = modularize::orbits_and_stabilizers(&spec).unwrap();
            let mut covered = 0;
            for o in &orbits {
                let reps: Vec<(Partition, usize)> = o
                    .elems
                    .iter()
                    .filter_map(|e| match e {
                        Elem::P(l) => representative_class(series, n, k, l).map(|s| (l.clone(), s)),
                        Elem::X => None,
                    })
                    .collect();
                assert_eq!(reps.len(), 1, "{} orbit {:?}", spec.title(), o.elems);
                assert_eq!(reps[0].1, o.stabilizer, "{} {}", spec.title(), reps[0].0);
                covered += 1;
            }
            let total = spec.label_sets().gamma.iter().filter(|l| representative_class(series, n, k, l).is_some()).count();
            assert_eq!(covered, total, "{}", spec.title());
        }
    }
}

#[test]
fn cb_tilde_has_binomial_many_objects() {
    for (n, k) in [(1, 1), (2, 2), (3, 2)] {
        let spec = make_spec(Series::CB, n, k).unwrap();
        let t = modularize::modular_table(&spec, &MChoices::default()).unwrap();
        let binom = (1..=n).fold(1, |a, i| a * (k + i) / i);
        assert_eq!(t.labels.len(), binom);
        assert!(t.labels.iter().all(|l| matches!(l.label, Label::Plain(_))));
    }
}

#[test]
fn group_action_on_generators() {
    let spec = make_spec(Series::D, 2, 2).unwrap();
    let gens = modularize::generators(&spec).unwrap();
    assert_eq!(gens.len(), 2);
    assert!(gens.contains(&Generator::Row(4)) && gens.contains(&Generator::Column(4)));
    let row = Partition::row(4);
    let col = Partition::column(4);
    assert_eq!(modularize::group_action(&spec, &row, &Elem::P(Partition::empty())).unwrap(), Elem::P(row.clone()));
    assert_eq!(modularize::group_action(&spec, &row, &Elem::P(col.clone())).unwrap(), Elem::X);
    assert_eq!(modularize::group_action(&spec, &row, &Elem::X).unwrap(), Elem::P(col.clone()));
    assert_eq!(modularize::group_action(&spec, &row, &Elem::P(p(&[1]))).unwrap(), Elem::P(p(&[3])));
    for l in spec.label_sets().gamma {
        for g in [&row, &col] {
            let once = modularize::group_action(&spec, g, &Elem::P(l.clone())).unwrap();
            assert_eq!(modularize::group_action(&spec, g, &once).unwrap(), Elem::P(l.clone()));
        }
    }
    assert!(matches!(modularize::group_action(&spec, &p(&[2, 1]), &Elem::X), Err(Error::InvalidGenerator(_))));
}

#[test]
fn not_modularizable_is_rejected() {
    for series in [Series::Bneg, Series::BDneg, Series::CBneg] {
        let spec = make_spec(series, 1, 2).unwrap();
        assert!(matches!(modularize::orbits_and_stabilizers(&spec), Err(Error::NotModularizable(_))));
    }
}

#[test]
fn m_choices() {
    let spec = make_spec(Series::D, 2, 2).unwrap();
    let open = modularize::modular_table(&spec, &MChoices::default()).unwrap();
    assert!(!open.is_determined());
    let quad = open.quad_orbits();
    assert_eq!(quad, [p(&[2, 1]), p(&[2, 2])]);
    let four = modularize::modular_table(&spec, &MChoices::uniform(4)).unwrap();
    let one = modularize::modular_table(&spec, &MChoices::uniform(1)).unwrap();
    assert_eq!(four.labels.len(), open.labels.len() + 6);
    assert_eq!(one.labels.len(), open.labels.len());
    assert!(four.is_determined() && one.is_determined());
    assert!(modularize::modular_table(&spec, &MChoices::uniform(2)).is_err());
    let mut bad = MChoices::default();
    bad.per.insert(p(&[1]), 4);
    assert!(matches!(modularize::modular_table(&spec, &bad), Err(Error::InvalidMChoice(_))));
}

#[test]
fn omega_tilde_is_the_sum_of_squares() {
    for series in [Series::CB, Series::BD, Series::D] {
        for (n, k) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let spec = make_spec(series, n, k).unwrap();
            let t = modularize::modular_table(&spec, &MChoices::uniform(4)).unwrap();
            let mut sum = CycNum::zero(spec.order);
            for l in &t.labels {
                let d = l.qdim.clone().unwrap();
                sum = &sum + &(&d * &d);
            }
            let w = t.omega().unwrap();
            assert_eq!(sum, w, "{}", spec.title());
            let g = BigRational::from_integer((1usize << modularize::generators(&spec).unwrap().len()).into());
            // the dominating set also contains the composite generator, of dimension 1
            let full = &catdata::omega(&spec).unwrap() + &CycNum::from_int(spec.order, spec.label_sets().extra.map_or(0, |_| 1));
            assert_eq!(w.scale(&g), full, "{}", spec.title());
        }
    }
}

#[test]
fn label_display() {
    let spec = make_spec(Series::BD, 1, 1).unwrap();
    let t = modularize::modular_table(&spec, &MChoices::default()).unwrap();
    let names: Vec<String> = t.labels.iter().map(|l| l.label.to_string()).collect();
    assert_eq!(names, ["∅", "(1)+", "(1)-"]);
    assert_eq!(t.labels[1].label.kind(), "split+");
}
