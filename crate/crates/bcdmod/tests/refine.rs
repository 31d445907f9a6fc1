use bcdmod::catdata;
use bcdmod::cyclotomic::CycNum;
use bcdmod::partitions::Partition;
use bcdmod::refine::{self, Refinement};
use bcdmod::series::{make_spec, Series};
use bcdmod::smatrix;

#[test]
fn unknot_values() {
    let c12 = make_spec(Series::C, 1, 2).unwrap();
    assert!(refine::unknot_eval(&c12, 1, 0).unwrap().is_zero());
    assert_eq!(catdata::twist(&c12, &Partition::row(2)), CycNum::from_int(c12.order, -1));
    let c22 = make_spec(Series::C, 2, 2).unwrap();
    assert!(refine::unknot_eval(&c22, 1, 1).unwrap().is_zero());
    assert!(refine::unknot_eval(&c22, -1, 1).unwrap().is_zero());
    let c11 = make_spec(Series::C, 1, 1).unwrap();
    assert!(refine::unknot_eval(&c11, 1, 0).unwrap().is_one());
    assert!(refine::unknot_eval(&c11, 2, 0).is_err());
}

#[test]
fn verdicts() {
    let v = |n, k| refine::refinement_verdict(&make_spec(Series::C, n, k).unwrap()).unwrap().0;
    assert_eq!(v(1, 2), Refinement::Spin);
    assert_eq!(v(2, 2), Refinement::Cohomological);
    assert_eq!(v(1, 1), Refinement::None);
    assert_eq!(v(3, 2), Refinement::Spin);
    assert_eq!(v(1, 4), Refinement::Cohomological);
    assert_eq!(v(3, 3), Refinement::None);
    assert!(refine::refinement_verdict(&make_spec(Series::D, 2, 2).unwrap()).is_err());
}

#[test]
fn graded_kirby_split() {
    let spec = make_spec(Series::C, 2, 2).unwrap();
    let g = refine::graded_kirby(&spec).unwrap();
    assert_eq!(g.omega0.len() + g.omega1.len(), spec.label_sets().gamma.len());
    assert!(g.omega0.iter().all(|(l, _)| l.size() % 2 == 0));
    assert!(g.omega1.iter().all(|(l, _)| l.size() % 2 == 1));
}

#[test]
fn graded_hopf() {
    for (n, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (1, 4)] {
        let spec = make_spec(Series::C, n, k).unwrap();
        for nu in [0, 1] {
            let h = refine::graded_hopf_identity(&spec, nu).unwrap();
            assert!(h.holds(), "{} ν={nu}", spec.title());
            if (n * k) % 2 == 0 {
                assert_eq!(h.rhs, h.rhs_literal);
            }
        }
    }
    // for kn odd the literal factor is off: only λ = ∅ survives the sum over ω₀
    let h = refine::graded_hopf_identity(&make_spec(Series::C, 1, 1).unwrap(), 0).unwrap();
    assert_ne!(h.lhs, h.rhs_literal);
}

#[test]
fn fusion_respects_parity() {
    for (n, k) in [(1, 2), (2, 2), (2, 3)] {
        let spec = make_spec(Series::C, n, k).unwrap();
        let ft = smatrix::fusion_from_s(&smatrix::build_smatrix(&spec).unwrap()).unwrap();
        for (a, b, c, _) in ft.records() {
            assert_eq!((ft.labels[a].size() + ft.labels[b].size() + ft.labels[c].size()) % 2, 0);
        }
    }
}
