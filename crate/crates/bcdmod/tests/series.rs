use bcdmod::cyclotomic::CycNum;
use bcdmod::partitions::Partition;
use bcdmod::series::{level_rank_dual, make_spec, make_spec_with_root, Series};

#[test]
fn levels_and_field_orders() {
    let (n, k) = (2, 3);
    let want = [
        (Series::C, 12, 24),
        (Series::CB, 11, 22),
        (Series::CBneg, 11, 11),
        (Series::Bneg, 10, 20),
        (Series::BD, 9, 18),
        (Series::BDneg, 9, 9),
        (Series::D, 8, 16),
    ];
    for (s, l, m) in want {
        let spec = make_spec(s, n, k).unwrap();
        assert_eq!((spec.l, spec.order as usize), (l, m), "{s}");
        assert_eq!(spec.s(), &CycNum::root(m as u32, 1));
    }
}

#[test]
fn alpha_values() {
    let (n, k) = (2i64, 1i64);
    for s in Series::ALL {
        let spec = make_spec(s, n as usize, k as usize).unwrap();
        let p = |e: i64| spec.s().pow(e).unwrap();
        let (a, b) = match s {
            Series::C => (-p(2 * n + 1), p(-2 * k - 1)),
            Series::CB => (-p(2 * n + 1), p(-2 * k)),
            Series::CBneg => (-p(2 * n + 1), -p(-2 * k)),
            Series::Bneg => (p(2 * n), -p(-2 * k)),
            Series::BD => (p(2 * n), -p(-2 * k + 1)),
            Series::BDneg => (-p(2 * n), -p(-2 * k + 1)),
            Series::D => (p(2 * n - 1), -p(-2 * k + 1)),
        };
        assert_eq!(spec.alpha(), &a, "{s}");
        assert_eq!(a, b, "{s}");
    }
}

#[test]
fn invalid_parameters() {
    assert!(make_spec(Series::C, 0, 1).is_err());
    assert!(make_spec(Series::D, 1, 0).is_err());
    assert!(make_spec_with_root(Series::C, 1, 1, 2).is_err());
    assert!(make_spec_with_root(Series::C, 1, 1, 5).is_ok());
    assert!("E".parse::<Series>().is_err());
}

#[test]
fn names_round_trip() {
    for s in Series::ALL {
        assert_eq!(s.name().parse::<Series>().unwrap(), s);
    }
    assert_eq!("CBneg".parse::<Series>().unwrap(), Series::CBneg);
    assert_eq!(make_spec(Series::BD, 2, 1).unwrap().title(), "(BD,2,1)");
}

#[test]
fn label_sets_of_c() {
    let spec = make_spec(Series::C, 1, 2).unwrap();
    let ls = spec.label_sets();
    let names: Vec<String> = ls.gamma.iter().map(|p| p.to_string()).collect();
    assert_eq!(names, ["∅", "(1)", "(2)"]);
    assert!(ls.extra.is_none());
    assert!(ls.gamma.iter().all(|p| ls.gamma_bar.contains(p)));
    assert!(make_spec(Series::D, 2, 2).unwrap().label_sets().extra.is_some());
}

#[test]
fn level_rank_dual_is_an_involution() {
    for s in Series::ALL {
        for (n, k) in [(1, 2), (2, 1), (2, 3)] {
            let spec = make_spec(s, n, k).unwrap();
            let (d, map) = level_rank_dual(&spec).unwrap();
            assert_eq!(d.display_nk(), (k, n));
            if !matches!(s, Series::C | Series::D) {
                assert!(d.transposed);
                assert_eq!(d.display_series(), s.dual_name());
            }
            for (p, q) in &map {
                assert_eq!(&p.transpose(), q);
                assert!(d.in_gamma(q), "{s} {p}");
            }
            let dd = d.level_rank_dual().unwrap();
            assert_eq!(dd.display_series(), spec.display_series());
            assert_eq!(dd.label_sets().gamma, spec.label_sets().gamma);
            assert_eq!(dd.s().embed(dd.order.max(spec.order)), spec.s().embed(dd.order.max(spec.order)));
        }
    }
}

#[test]
fn gamma_membership() {
    let spec = make_spec(Series::D, 2, 2).unwrap();
    assert!(spec.in_gamma(&Partition::row(4)));
    assert!(spec.in_gamma(&Partition::column(4)));
    assert!(!spec.in_gamma(&Partition::row(5)));
    assert_eq!(spec.generator_sizes(), (Some(4), Some(4)));
}
