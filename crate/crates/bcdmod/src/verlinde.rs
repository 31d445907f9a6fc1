//! Genus-g Verlinde dimensions: closed forms and the generic power sum.

use crate::catdata;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::modularize::{self, MChoices, ModularTable};
use crate::partitions::Partition;
use crate::series::{make_spec, Series, SeriesSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Generic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Generic => "generic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeResult {
    pub series: String,
    pub n: usize,
    pub k: usize,
    pub g: u32,
    pub value: BigInt,
    pub method: Method,
}

/// (Σ d²)^(g-1) Σ d^(2(1-g)).
pub fn verlinde_generic(dims: &[CycNum], g: u32) -> Result<CycNum> {
    let Some(first) = dims.first() else {
        return Err(Error::InvalidParameters("no dimensions".into()));
    };
    let e = 2 * (1 - g as i64);
    let mut omega = CycNum::zero(first.order());
    let mut sum = CycNum::zero(first.order());
    for d in dims {
        if d.is_zero() {
            return Err(Error::VanishingDenominator("zero quantum dimension in Verlinde sum".into()));
        }
        omega = &omega + &(d * d);
        sum = &sum + &d.pow(e)?;
    }
    Ok(&omega.pow(g as i64 - 1)? * &sum)
}

/// The value as a nonnegative integer, or a `NonIntegral` error.
pub fn to_count(v: &CycNum) -> Result<BigInt> {
    match v.to_integer() {
        Some(i) if !i.is_negative() => Ok(i),
        _ => Err(Error::NonIntegral(format!("{v}"))),
    }
}

/// Strictly decreasing tuples hi ≥ t₁ > … > t_len ≥ lo.
pub fn decreasing_tuples(hi: i64, lo: i64, len: usize) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for first in (lo..=hi).rev() {
        for mut rest in decreasing_tuples(first - 1, lo, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn b(spec: &SeriesSpec, e: i64) -> CycNum {
    spec.spow(e) - spec.spow(-e)
}

fn pair_product(spec: &SeriesSpec, t: &[i64]) -> CycNum {
    let mut p = CycNum::one(spec.order);
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            p = &p * &(&b(spec, t[i] + t[j]) * &b(spec, t[i] - t[j]));
        }
    }
    p
}

fn need(spec: &SeriesSpec, ok: &[Series]) -> Result<()> {
    if spec.transposed || !ok.contains(&spec.series) {
        return Err(Error::InvalidParameters(format!("no closed Verlinde formula for {}", spec.title())));
    }
    Ok(())
}

/// C and C̃B closed form: (-l)^(n(g-1)) Σ_{n+k ≥ l₁>…>l_n>0} (Π[2l_j]_s Π_{i<j}[l_i+l_j]_s[l_i-l_j]_s)^(2(1-g)).
pub fn closed_form_c(spec: &SeriesSpec, g: u32) -> Result<CycNum> {
    need(spec, &[Series::C, Series::CB])?;
    let (n, k) = (spec.n as i64, spec.k as i64);
    let e = 2 * (1 - g as i64);
    let mut sum = CycNum::zero(spec.order);
    for t in decreasing_tuples(n + k, 1, spec.n) {
        let mut p = pair_product(spec, &t);
        for &x in &t {
            p = &p * &b(spec, 2 * x);
        }
        sum = &sum + &p.pow(e)?;
    }
    let pre = CycNum::from_int(spec.order, -(spec.l as i64)).pow(n * (g as i64 - 1))?;
    Ok(&pre * &sum)
}

/// B̃D closed form.
pub fn closed_form_bd(spec: &SeriesSpec, g: u32) -> Result<CycNum> {
    need(spec, &[Series::BD])?;
    let (n, k) = (spec.n as i64, spec.k as i64);
    let e = 2 * (1 - g as i64);
    let mut sum = CycNum::zero(spec.order);
    for t in decreasing_tuples(n + k - 1, 0, spec.k) {
        let v = pair_product(spec, &t).pow(e)?;
        sum = if *t.last().unwrap() > 0 { &sum + &(&v + &v) } else { &sum + &v };
    }
    let pre = CycNum::from_int(spec.order, spec.l as i64).pow(k * (g as i64 - 1))?;
    Ok(&pre * &sum)
}

/// d_g = A + Σ_λ m_λ^g B_λ over the stabilizer-4 diagrams λ.
#[derive(Clone, Debug, PartialEq)]
pub struct DSymbolic {
    pub a: CycNum,
    pub b: Vec<(Partition, CycNum)>,
}

impl DSymbolic {
    pub fn evaluate(&self, m: &MChoices, g: u32) -> Result<CycNum> {
        let mut acc = self.a.clone();
        for (p, v) in &self.b {
            let mv = m.get(p).ok_or_else(|| Error::InvalidMChoice(format!("no m given for {p}")))?;
            acc = &acc + &v.scale(&BigRational::from_integer(BigInt::from(mv).pow(g)));
        }
        Ok(acc)
    }
}

/// D̃ closed form in symbolic m; tuples l map to λ = l - (n-1, …, 0).
pub fn closed_form_d_symbolic(spec: &SeriesSpec, g: u32) -> Result<DSymbolic> {
    need(spec, &[Series::D])?;
    let (n, k) = (spec.n as i64, spec.k as i64);
    let g_ = g as i64;
    let e = 2 * (1 - g_);
    let pre = CycNum::from_int(spec.order, spec.l as i64).pow(n * (g_ - 1))?;
    let two_pow = BigRational::from_integer(2.into()).pow(2 * g as i32 - 1);
    let mut a = CycNum::zero(spec.order);
    let mut bs = vec![];
    for t in decreasing_tuples(n + k - 1, 0, spec.n) {
        let v = &pre * &pair_product(spec, &t).pow(e)?;
        let top = t[0] == n + k - 1;
        let zero = *t.last().unwrap() == 0;
        match (top, zero) {
            (false, true) => a = &a + &v,
            (true, true) => a = &a + &v.scale(&two_pow),
            (false, false) => a = &a + &(&v + &v),
            (true, false) => {
                let parts = t.iter().enumerate().map(|(j, &x)| (x - (n - 1 - j as i64)) as usize).collect();
                bs.push((Partition::new(parts)?, v));
            }
        }
    }
    bs.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(DSymbolic { a, b: bs })
}

/// The same decomposition read off the generic formula over the modular table.
pub fn generic_d_symbolic(spec: &SeriesSpec, g: u32) -> Result<DSymbolic> {
    let table = modularize::modular_table(spec, &MChoices::default())?;
    let omega = table.omega()?;
    let e = 2 * (1 - g as i64);
    let w = omega.pow(g as i64 - 1)?;
    let mut sum = CycNum::zero(spec.order);
    for l in &table.labels {
        if let Some(d) = &l.qdim {
            sum = &sum + &d.pow(e)?;
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut bs = vec![];
    for p in table.quad_orbits() {
        let d = catdata::qdim(spec, &p)?.scale(&half);
        bs.push((p, &w * &d.pow(e)?));
    }
    Ok(DSymbolic { a: &w * &sum, b: bs })
}

pub fn closed_form_d(spec: &SeriesSpec, g: u32, m: &MChoices) -> Result<CycNum> {
    closed_form_d_symbolic(spec, g)?.evaluate(m, g)
}

/// Generic Verlinde formula over a fully determined modular table.
pub fn verlinde_table(table: &ModularTable, g: u32) -> Result<CycNum> {
    let dims: Vec<CycNum> = table
        .labels
        .iter()
        .map(|l| l.qdim.clone().ok_or_else(|| Error::InvalidMChoice(format!("m undetermined for {}", l.label))))
        .collect::<Result<_>>()?;
    verlinde_generic(&dims, g)
}

/// Generic formula for the (modularized) category of a spec.
pub fn verlinde_generic_spec(spec: &SeriesSpec, g: u32, m: &MChoices) -> Result<CycNum> {
    match spec.series {
        Series::C if !spec.transposed => {
            let dims = catdata::objects(spec)?.into_iter().map(|o| o.qdim).collect::<Vec<_>>();
            verlinde_generic(&dims, g)
        }
        _ => verlinde_table(&modularize::modular_table(spec, m)?, g),
    }
}

pub fn verlinde_closed_spec(spec: &SeriesSpec, g: u32, m: &MChoices) -> Result<CycNum> {
    match spec.series {
        Series::C | Series::CB => closed_form_c(spec, g),
        Series::BD => closed_form_bd(spec, g),
        Series::D => closed_form_d(spec, g, m),
        _ => Err(Error::InvalidParameters(format!("no closed Verlinde formula for {}", spec.title()))),
    }
}

pub fn verlinde_c(n: usize, k: usize, g: u32) -> Result<BigInt> {
    to_count(&closed_form_c(&make_spec(Series::C, n, k)?, g)?)
}

pub fn verlinde_cb(n: usize, k: usize, g: u32) -> Result<BigInt> {
    to_count(&closed_form_c(&make_spec(Series::CB, n, k)?, g)?)
}

pub fn verlinde_bd(n: usize, k: usize, g: u32) -> Result<BigInt> {
    to_count(&closed_form_bd(&make_spec(Series::BD, n, k)?, g)?)
}

pub fn verlinde_d(n: usize, k: usize, g: u32, m: &MChoices) -> Result<BigInt> {
    to_count(&closed_form_d(&make_spec(Series::D, n, k)?, g, m)?)
}

pub fn verlinde(spec: &SeriesSpec, g: u32, m: &MChoices, method: Method) -> Result<VerlindeResult> {
    let v = match method {
        Method::ClosedForm => verlinde_closed_spec(spec, g, m)?,
        Method::Generic => verlinde_generic_spec(spec, g, m)?,
    };
    let (n, k) = spec.display_nk();
    Ok(VerlindeResult { series: spec.display_series().to_string(), n, k, g, value: to_count(&v)?, method })
}

#[derive(Clone, Debug)]
pub struct LevelRankRow {
    pub g: u32,
    pub what: String,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

/// Compare d_g of a category with its level-rank partner for g = 0..=gmax.
pub fn level_rank_check(series: Series, n: usize, k: usize, gmax: u32) -> Result<Vec<LevelRankRow>> {
    let mut rows = vec![];
    match series {
        Series::C => {
            for g in 0..=gmax {
                let (x, y) = (verlinde_c(n, k, g)?, verlinde_c(k, n, g)?);
                rows.push(LevelRankRow { g, what: "d_g".into(), equal: x == y, left: x.to_string(), right: y.to_string() });
            }
        }
        Series::D => {
            let spec = make_spec(Series::D, n, k)?;
            let dual = spec.level_rank_dual()?;
            let canon = make_spec(Series::D, k, n)?;
            for g in 0..=gmax {
                let x = generic_d_symbolic(&spec, g)?;
                let y = generic_d_symbolic(&dual, g)?;
                let mut equal = x.a == y.a && x.b.len() == y.b.len();
                for (p, v) in &x.b {
                    let t = p.transpose();
                    equal &= y.b.iter().any(|(q, w)| *q == t && w == v);
                }
                rows.push(LevelRankRow {
                    g,
                    what: "symbolic A + Σ m^g B".into(),
                    left: format!("A={} |B|={}", x.a, x.b.len()),
                    right: format!("A={} |B|={}", y.a, y.b.len()),
                    equal,
                });
                for m in [1u8, 4] {
                    let c = MChoices::uniform(m);
                    let (a, b) = (to_count(&x.evaluate(&c, g)?)?, to_count(&closed_form_d(&canon, g, &c)?)?);
                    rows.push(LevelRankRow { g, what: format!("d_g, m={m}"), equal: a == b, left: a.to_string(), right: b.to_string() });
                }
            }
        }
        _ => {
            let spec = make_spec(series, n, k)?;
            let dual = spec.level_rank_dual()?;
            let m = MChoices::default();
            for g in 0..=gmax {
                let x = to_count(&verlinde_generic_spec(&spec, g, &m)?)?;
                let y = to_count(&verlinde_generic_spec(&dual, g, &m)?)?;
                rows.push(LevelRankRow { g, what: "d_g".into(), equal: x == y, left: x.to_string(), right: y.to_string() });
            }
        }
    }
    Ok(rows)
}
