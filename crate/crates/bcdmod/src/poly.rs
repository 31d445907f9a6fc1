//! Small polynomial helpers: rational polynomials for inversion modulo Φ_M,
//! integer Laurent polynomials for limits along a one-parameter family.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, if gcd(a, m) = 1.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let t = rat_sub(&t0, &rat_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(t0.into_iter().map(|x| x / &c).collect())
}

/// Exact quotient of integer polynomials by a monic divisor; `None` if the remainder is nonzero.
pub(crate) fn int_div_exact(a: &[BigInt], monic: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = monic.len() - 1;
    if r.is_empty() {
        return Some(vec![]);
    }
    if r.len() < monic.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() >= monic.len() {
        let shift = r.len() - monic.len();
        let c = r.last().unwrap().clone();
        for (j, bj) in monic.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

/// Laurent polynomial Σ c_i t^(low+i) with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Laurent {
    pub low: i64,
    pub coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn one() -> Self {
        Laurent { low: 0, coeffs: vec![BigInt::one()] }
    }

    /// Σ c t^e over the given terms.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let low = terms.iter().map(|t| t.1).min().unwrap_or(0);
        let high = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for &(c, e) in terms {
            coeffs[(e - low) as usize] += c;
        }
        let mut out = Laurent { low, coeffs };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent { low: 0, coeffs: vec![] };
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        let mut out = Laurent { low: self.low + o.low, coeffs: c };
        out.normalize();
        out
    }

    /// Divide by a monic polynomial if it divides exactly.
    pub fn div_exact(&self, monic: &[BigInt]) -> Option<Laurent> {
        int_div_exact(&self.coeffs, monic).map(|q| {
            let mut out = Laurent { low: self.low, coeffs: q };
            out.normalize();
            out
        })
    }
}
