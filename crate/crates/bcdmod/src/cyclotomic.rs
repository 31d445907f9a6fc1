//! Exact arithmetic in Q(ζ_M) on the power basis 1, ζ, …, ζ^(φ(M)-1).

use crate::error::{Error, Result};
use crate::poly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

struct Field {
    phi: Vec<BigInt>,
    // x^j reduced mod Φ_M, for 0 <= j < M
    pows: Vec<Vec<BigInt>>,
}

impl Field {
    fn deg(&self) -> usize {
        self.phi.len() - 1
    }

    fn build(m: u32) -> Field {
        let mut phi = vec![BigInt::zero(); m as usize + 1];
        phi[0] = -BigInt::one();
        phi[m as usize] = BigInt::one();
        for d in 1..m {
            if m.is_multiple_of(d) {
                phi = poly::int_div_exact(&phi, &field(d).phi).expect("Φ_d divides x^M - 1");
            }
        }
        let deg = phi.len() - 1;
        let mut pows = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..m {
            pows.push(cur.clone());
            let top = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi) {
                    *c -= &top * p;
                }
            }
        }
        Field { phi, pows }
    }
}

static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();

fn field(m: u32) -> Arc<Field> {
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.read().unwrap().get(&m) {
        return f.clone();
    }
    let built = Arc::new(Field::build(m));
    cache.write().unwrap().entry(m).or_insert(built).clone()
}

/// Coefficients of Φ_M, constant term first.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic order must be positive");
    field(m).phi.clone()
}

pub fn euler_phi(m: u32) -> usize {
    field(m).deg()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(m: u32) -> CycNum {
        assert!(m >= 1, "cyclotomic order must be positive");
        CycNum { order: m, coeffs: vec![BigRational::zero(); euler_phi(m)] }
    }

    pub fn one(m: u32) -> CycNum {
        CycNum::from_int(m, 1)
    }

    pub fn from_int(m: u32, v: i64) -> CycNum {
        CycNum::from_rational(m, BigRational::from_integer(v.into()))
    }

    pub fn from_rational(m: u32, v: BigRational) -> CycNum {
        let mut z = CycNum::zero(m);
        z.coeffs[0] = v;
        z
    }

    /// ζ_M^e.
    pub fn root(m: u32, e: i64) -> CycNum {
        assert!(m >= 1, "cyclotomic order must be positive");
        let f = field(m);
        let j = e.rem_euclid(m as i64) as usize;
        CycNum { order: m, coeffs: f.pows[j].iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    /// Build from coefficients on the power basis; entries beyond φ(M) are reduced.
    pub fn from_coeffs(m: u32, cs: &[BigRational]) -> CycNum {
        let f = field(m);
        let mut out = vec![BigRational::zero(); f.deg()];
        for (j, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.pows[j % m as usize]) {
                if !p.is_zero() {
                    *o += c * BigRational::from_integer(p.clone());
                }
            }
        }
        CycNum { order: m, coeffs: out }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_one())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn check(&self, o: &CycNum) -> Result<()> {
        if self.order != o.order {
            Err(Error::OrderMismatch(self.order, o.order))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(CycNum { order: self.order, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(CycNum { order: self.order, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() })
    }

    // common-denominator integer form
    fn int_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }

    fn from_int_form(m: u32, raw: &[BigInt], den: &BigInt) -> CycNum {
        let f = field(m);
        let d = f.deg();
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); d];
        for (j, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < d {
                acc[j] += c;
            } else {
                for (a, p) in acc.iter_mut().zip(&f.pows[j]) {
                    if !p.is_zero() {
                        *a += c * p;
                    }
                }
            }
        }
        CycNum { order: m, coeffs: acc.into_iter().map(|a| BigRational::new(a, den.clone())).collect() }
    }

    pub fn checked_mul(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        let m = self.order as usize;
        let (a, da) = self.int_form();
        let (b, db) = o.int_form();
        let mut raw = vec![BigInt::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[(i + j) % m] += x * y;
                }
            }
        }
        Ok(CycNum::from_int_form(self.order, &raw, &(da * db)))
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycNum::from_rational(self.order, r.recip()));
        }
        let f = field(self.order);
        let phi: Vec<BigRational> = f.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let u = poly::inverse_mod(&a, &phi).ok_or(Error::DivisionByZero)?;
        Ok(CycNum::from_coeffs(self.order, &u))
    }

    pub fn checked_div(&self, o: &CycNum) -> Result<CycNum> {
        self.checked_mul(&o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// The automorphism ζ ↦ ζ^t (t coprime to M).
    pub fn galois(&self, t: i64) -> CycNum {
        let m = self.order as i64;
        assert_eq!(t.gcd(&m), 1, "galois exponent must be coprime to the order");
        let mut raw = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j as i64 * t).rem_euclid(m) as usize] += c;
        }
        CycNum::from_coeffs(self.order, &raw)
    }

    /// Complex conjugation ζ ↦ ζ^(-1).
    pub fn conj(&self) -> CycNum {
        self.galois(-1)
    }

    /// Image under Q(ζ_M) ⊂ Q(ζ_N), ζ_M ↦ ζ_N^(N/M).
    pub fn embed(&self, n: u32) -> CycNum {
        assert!(n.is_multiple_of(self.order), "embedding target must be a multiple of the order");
        let step = (n / self.order) as usize;
        let mut raw = vec![BigRational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j * step) % n as usize] += c;
        }
        CycNum::from_coeffs(n, &raw)
    }

    /// Inverse of `embed` from order 2N to N; `None` if the value is outside Q(ζ_N).
    pub fn lower_half(&self) -> Option<CycNum> {
        let big = self.order;
        if !big.is_multiple_of(2) {
            return None;
        }
        let n = big / 2;
        if n.is_multiple_of(2) {
            if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
                return None;
            }
            let cs: Vec<BigRational> = self.coeffs.iter().step_by(2).cloned().collect();
            Some(CycNum::from_coeffs(n, &cs))
        } else {
            // ζ_2N = -ζ_N^((N+1)/2)
            let h = (n as i64 + 1) / 2;
            let mut raw = vec![BigRational::zero(); n as usize];
            for (j, c) in self.coeffs.iter().enumerate() {
                let idx = (j as i64 * h).rem_euclid(n as i64) as usize;
                if j % 2 == 0 {
                    raw[idx] += c;
                } else {
                    raw[idx] -= c;
                }
            }
            let out = CycNum::from_coeffs(n, &raw);
            (out.embed(big) == *self).then_some(out)
        }
    }

    /// If the value equals ±ζ_M^j, return the exponent e with value = ζ_(2M)^e.
    pub fn root_exponent(&self) -> Option<(u32, i64)> {
        let m = self.order as i64;
        for j in 0..m {
            let z = CycNum::root(self.order, j);
            if z == *self {
                return Some((2 * self.order, 2 * j));
            }
            if -&z == *self {
                return Some((2 * self.order, (2 * j + m).rem_euclid(2 * m)));
            }
        }
        None
    }

    /// Floating embedding ζ_M ↦ e^(2πi/M); display only.
    pub fn approx(&self) -> Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), 2.0 * std::f64::consts::PI * j as f64 / m))
            .sum()
    }
}

/// [n] = (s^n - s^-n)/(s - s^-1).
pub fn qint(s: &CycNum, n: i64) -> Result<CycNum> {
    let den = bracket_s(s, 1)?;
    bracket_s(s, n)?.checked_div(&den)
}

/// [n]_α = (α s^n - α^-1 s^-n)/(s - s^-1).
pub fn qint_alpha(alpha: &CycNum, s: &CycNum, n: i64) -> Result<CycNum> {
    let sn = s.pow(n)?;
    let num = alpha.checked_mul(&sn)?.checked_sub(&alpha.inv()?.checked_mul(&sn.inv()?)?)?;
    num.checked_div(&bracket_s(s, 1)?)
}

/// [n]_s = s^n - s^-n.
pub fn bracket_s(s: &CycNum, n: i64) -> Result<CycNum> {
    let sn = s.pow(n)?;
    sn.checked_sub(&sn.inv()?)
}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $f(self, o: &CycNum) -> CycNum {
                self.$checked(o).expect("cyclotomic order mismatch")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, o: CycNum) -> CycNum {
                (&self).$checked(&o).expect("cyclotomic order mismatch")
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        write!(f, "z{}", self.order)?
                    } else {
                        write!(f, "z{}^{}", self.order, j)?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}
