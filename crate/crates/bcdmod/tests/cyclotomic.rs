use bcdmod::cyclotomic::{bracket_s, cyclotomic_poly, euler_phi, qint, CycNum};
use bcdmod::Error;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn cyc(m: u32, v: &[i64]) -> CycNum {
    let cs: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    CycNum::from_coeffs(m, &cs)
}

// numeric evaluation of Σ c_j ζ^j, independent of the field reduction
fn eval(m: u32, v: &[i64]) -> Complex64 {
    v.iter()
        .enumerate()
        .map(|(j, &c)| Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * j as f64 / m as f64))
        .sum()
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-6 * (1.0 + b.norm())
}

#[test]
fn small_cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
    assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
    assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
    assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
    assert_eq!(cyclotomic_poly(8), ints(&[1, 0, 0, 0, 1]));
    assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    assert_eq!(cyclotomic_poly(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    for m in 1..60u32 {
        let phi = (1..=m).filter(|&j| num_integer::gcd(j, m) == 1).count();
        assert_eq!(euler_phi(m), phi);
        assert_eq!(cyclotomic_poly(m).len(), phi + 1);
    }
}

#[test]
fn roots_of_unity() {
    for m in [3u32, 5, 8, 12, 20, 28] {
        let z = CycNum::root(m, 1);
        assert!(z.pow(m as i64).unwrap().is_one());
        assert!(!z.pow(m as i64 / 2).unwrap().is_one() || m == 1);
        assert_eq!(z.pow(-1).unwrap(), CycNum::root(m, -1));
        assert_eq!(z.conj(), CycNum::root(m, m as i64 - 1));
        let mut sum = CycNum::zero(m);
        for j in 0..m as i64 {
            sum = &sum + &CycNum::root(m, j);
        }
        assert!(sum.is_zero());
    }
    assert_eq!(CycNum::root(12, 6), CycNum::from_int(12, -1));
    assert_eq!(CycNum::root(12, 3), CycNum::root(4, 1).embed(12));
}

#[test]
fn golden_ratio_in_q_zeta5() {
    let z = CycNum::root(5, 1);
    let phi = &CycNum::one(5) + &(&z + &z.pow(4).unwrap());
    assert_eq!(&phi * &phi, &phi + &CycNum::one(5));
    assert!((phi.approx().re - 1.618033988749895).abs() < 1e-12);
}

#[test]
fn quantum_integers() {
    let s = CycNum::root(8, 1);
    let two = qint(&s, 2).unwrap();
    assert_eq!(&two * &two, CycNum::from_int(8, 2));
    assert!(qint(&s, 4).unwrap().is_zero());
    assert_eq!(bracket_s(&s, 1).unwrap(), &s - &s.pow(-1).unwrap());
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(CycNum::zero(7).inv(), Err(Error::DivisionByZero));
    assert!(CycNum::one(7).checked_div(&CycNum::zero(7)).is_err());
    assert!(CycNum::one(7).checked_add(&CycNum::one(5)).is_err());
}

#[test]
fn galois_and_lowering() {
    let z = CycNum::root(24, 5);
    assert_eq!(z.galois(7), CycNum::root(24, 35));
    let x = &CycNum::root(12, 1) + &CycNum::from_int(12, 3);
    assert_eq!(x.embed(24).lower_half(), Some(x.clone()));
    assert_eq!(CycNum::root(24, 1).lower_half(), None);
    assert_eq!(CycNum::root(12, 5).root_exponent(), Some((24, 10)));
    assert_eq!((-&CycNum::root(12, 5)).root_exponent(), Some((24, 22)));
    assert_eq!(CycNum::root(24, 22), (-&CycNum::root(12, 5)).embed(24));
    assert_eq!((&CycNum::root(12, 1) + &CycNum::root(12, 2)).root_exponent(), None);
}

#[test]
fn rational_extraction() {
    let z = CycNum::root(8, 1);
    let r = &z * &z.pow(-1).unwrap();
    assert_eq!(r.to_integer(), Some(1.into()));
    assert_eq!(z.to_rational(), None);
    let half = CycNum::from_rational(8, BigRational::new(1.into(), 2.into()));
    assert_eq!(half.to_integer(), None);
    assert_eq!(format!("{}", &z - &half), "-1/2 + z8");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn arithmetic_matches_complex_evaluation(
        (m, a, b) in prop::sample::select(vec![5u32, 7, 8, 9, 12, 16, 18, 20, 24])
            .prop_flat_map(|m| (Just(m), prop::collection::vec(-5i64..=5, m as usize), prop::collection::vec(-5i64..=5, m as usize)))
    ) {
        let (x, y) = (cyc(m, &a), cyc(m, &b));
        let (ex, ey) = (eval(m, &a), eval(m, &b));
        prop_assert!(close(x.approx(), ex));
        prop_assert!(close((&x * &y).approx(), ex * ey));
        prop_assert!(close((&x + &y).approx(), ex + ey));
        prop_assert!(close(x.conj().approx(), ex.conj()));
        if !y.is_zero() {
            prop_assert!(close(x.checked_div(&y).unwrap().approx(), ex / ey));
        }
    }
}
