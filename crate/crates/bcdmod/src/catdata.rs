//! Quantum dimensions, twists, braiding coefficients and transparency.

use crate::cyclotomic::{cyclotomic_poly, CycNum};
use crate::error::{Error, Result};
use crate::partitions::{content, Partition};
use crate::poly::Laurent;
use crate::series::{Composite, Series, SeriesSpec};
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectData {
    pub label: Partition,
    pub qdim: CycNum,
    pub twist: CycNum,
}

fn signed(v: &CycNum, sign: i64) -> CycNum {
    if sign < 0 {
        -v
    } else {
        v.clone()
    }
}

/// x^e - x^-e for a power table.
fn bracket(spec: &SeriesSpec, e: i64) -> CycNum {
    spec.spow(e) - spec.spow(-e)
}

/// α s^e - α^-1 s^-e.
fn bracket_alpha(spec: &SeriesSpec, e: i64) -> CycNum {
    let (sign, a) = spec.alpha_form();
    signed(&(spec.spow(a + e) - spec.spow(-a - e)), sign)
}

// Per-cell numerator and denominator of the dimension product, both multiplied by s - s^-1.
fn cell_factors(l: &Partition) -> Vec<(CellKind, i64)> {
    l.cells()
        .map(|(i, j)| {
            let hl = l.hook_length(i, j).unwrap() as i64;
            if i == j {
                (CellKind::Diagonal(l[j] as i64 - l.col(j) as i64), hl)
            } else {
                (CellKind::OffDiagonal(l.d_stat(i, j).unwrap()), hl)
            }
        })
        .collect()
}

enum CellKind {
    Diagonal(i64),
    OffDiagonal(i64),
}

/// Dimension by the hook-length product over cells; fails if some [hl] vanishes.
pub fn qdim_general(spec: &SeriesSpec, l: &Partition) -> Result<CycNum> {
    let m = spec.order;
    let mut num = CycNum::one(m);
    let mut den = CycNum::one(m);
    for (kind, hl) in cell_factors(l) {
        let top = match kind {
            CellKind::Diagonal(x) => bracket_alpha(spec, x) + bracket(spec, hl),
            CellKind::OffDiagonal(d) => bracket_alpha(spec, d),
        };
        num = &num * &top;
        den = &den * &bracket(spec, hl);
    }
    if den.is_zero() {
        return Err(Error::VanishingDenominator(format!("{l} at {}", spec.title())));
    }
    num.checked_div(&den)
}

/// Limit of the dimension along the family s = t, α = ±t^a, used where the product is 0/0.
pub fn qdim_limit(spec: &SeriesSpec, l: &Partition) -> Result<CycNum> {
    let (eps, a) = if l.len() == 1 {
        spec.fam_row
    } else if l[1] == 1 {
        spec.fam_col
    } else {
        spec.fam_other
    };
    let mut num = Laurent::one();
    let mut den = Laurent::one();
    for (kind, hl) in cell_factors(l) {
        let top = match kind {
            CellKind::Diagonal(x) => Laurent::from_terms(&[(eps, a + x), (-eps, -a - x), (1, hl), (-1, -hl)]),
            CellKind::OffDiagonal(d) => Laurent::from_terms(&[(eps, a + d), (-eps, -a - d)]),
        };
        num = num.mul(&top);
        den = den.mul(&Laurent::from_terms(&[(1, hl), (-1, -hl)]));
    }
    let phi = cyclotomic_poly(spec.s_order() as u32);
    while let (Some(n2), Some(d2)) = (num.div_exact(&phi), den.div_exact(&phi)) {
        if num.is_zero() {
            break;
        }
        num = n2;
        den = d2;
    }
    let eval = |p: &Laurent| -> CycNum {
        let mut acc = CycNum::zero(spec.order);
        for (i, c) in p.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &spec.spow(p.low + i as i64).scale(&BigRational::from_integer(c.clone()));
            }
        }
        acc
    };
    let d = eval(&den);
    if d.is_zero() {
        return Err(Error::VanishingDenominator(format!("{l} at {} (limit)", spec.title())));
    }
    eval(&num).checked_div(&d)
}

/// ⟨λ⟩: the hook-length product, or its limit along the α-family when that product is 0/0.
pub fn qdim(spec: &SeriesSpec, l: &Partition) -> Result<CycNum> {
    if let Some(v) = spec.memo.read().unwrap().get(l) {
        return Ok(v.clone());
    }
    let v = match qdim_general(spec, l) {
        Ok(v) => v,
        Err(Error::VanishingDenominator(_)) => qdim_limit(spec, l)?,
        Err(e) => return Err(e),
    };
    spec.memo.write().unwrap().entry(l.clone()).or_insert_with(|| v.clone());
    Ok(v)
}

fn ratio(spec: &SeriesSpec, nums: &[i64], dens: &[i64]) -> Result<CycNum> {
    let m = spec.order;
    let n = nums.iter().fold(CycNum::one(m), |acc, &e| &acc * &bracket(spec, e));
    let d = dens.iter().fold(CycNum::one(m), |acc, &e| &acc * &bracket(spec, e));
    if d.is_zero() {
        return Err(Error::VanishingDenominator(format!("specialized formula at {}", spec.title())));
    }
    n.checked_div(&d)
}

/// Row-indexed closed forms for α = -s^(2n+1) (C), s^(2n) (B) and s^(2n-1) (D).
pub fn qdim_specialized(spec: &SeriesSpec, l: &Partition) -> Result<CycNum> {
    if spec.transposed {
        return Err(Error::InvalidParameters(format!("no row formula for the transposed view {}", spec.title())));
    }
    let n = spec.n;
    if l.len() > n {
        return Err(Error::RowCount(l.to_string(), n));
    }
    let n_ = n as i64;
    let lam = |i: usize| l[i] as i64;
    let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    match spec.series {
        Series::C | Series::CB | Series::CBneg => {
            let mut nums = vec![];
            let mut dens = vec![];
            for j in 1..=n {
                let j_ = j as i64;
                nums.push(2 * n_ + 2 + 2 * lam(j) - 2 * j_);
                dens.push(2 * n_ + 2 - 2 * j_);
            }
            for (i, j) in pairs() {
                let (i_, j_) = (i as i64, j as i64);
                nums.push(2 * n_ + 2 + lam(i) - i_ + lam(j) - j_);
                nums.push(lam(i) - i_ - lam(j) + j_);
                dens.push(2 * n_ + 2 - i_ - j_);
                dens.push(j_ - i_);
            }
            let v = ratio(spec, &nums, &dens)?;
            Ok(if l.size() % 2 == 1 { -v } else { v })
        }
        Series::D => {
            let mut nums = vec![];
            let mut dens = vec![];
            for (i, j) in pairs() {
                let (i_, j_) = (i as i64, j as i64);
                nums.push(2 * n_ + lam(i) - i_ + lam(j) - j_);
                nums.push(lam(i) - i_ - lam(j) + j_);
                dens.push(2 * n_ - i_ - j_);
                dens.push(j_ - i_);
            }
            let v = ratio(spec, &nums, &dens)?;
            Ok(if lam(n) != 0 { &v + &v } else { v })
        }
        Series::Bneg | Series::BD | Series::BDneg => {
            // half-integer brackets in terms of r = s^(1/2); for α = -s^(2n) use s -> -s
            let base = if spec.series == Series::BDneg { -spec.s() } else { spec.s().clone() };
            let (big, e2) = base.root_exponent().ok_or_else(|| Error::Consistency("s is not a root of unity".into()))?;
            let r_order = 2 * big;
            let rb = |x: i64| CycNum::root(r_order, e2 * x) - CycNum::root(r_order, -e2 * x);
            let mut num = CycNum::one(r_order);
            let mut den = CycNum::one(r_order);
            for j in 1..=n {
                let j_ = j as i64;
                num = &num * &rb(2 * (n_ + lam(j) - j_) + 1);
                den = &den * &rb(2 * (n_ - j_) + 1);
            }
            for (i, j) in pairs() {
                let (i_, j_) = (i as i64, j as i64);
                num = &num * &rb(2 * (2 * n_ + lam(i) - i_ + lam(j) - j_ + 1));
                num = &num * &rb(2 * (lam(i) - i_ - lam(j) + j_));
                den = &den * &rb(2 * (2 * n_ - i_ - j_ + 1));
                den = &den * &rb(2 * (j_ - i_));
            }
            if den.is_zero() {
                return Err(Error::VanishingDenominator(format!("specialized formula at {}", spec.title())));
            }
            let v = num.checked_div(&den)?;
            lower_to(&v, spec.order)
        }
    }
}

fn lower_to(v: &CycNum, order: u32) -> Result<CycNum> {
    let mut v = v.clone();
    while v.order() != order {
        v = v
            .lower_half()
            .ok_or_else(|| Error::Consistency(format!("value does not lie in Q(z{order})")))?;
    }
    Ok(v)
}

/// Wenzl's form with the primed statistic and half powers of α and s.
pub fn qdim_wenzl_primed(spec: &SeriesSpec, l: &Partition) -> Result<CycNum> {
    let (sign, a) = spec.alpha_form();
    let (big, e2) = spec.s().root_exponent().ok_or_else(|| Error::Consistency("s is not a root of unity".into()))?;
    // r = s^(1/2) = ζ_R^e2 with R = 2·big; i = ζ_R^(R/4)
    let r_order = 2 * big;
    let r = |x: i64| CycNum::root(r_order, e2 * x);
    let half_alpha = |x: i64| {
        let v = r(a * x);
        if sign < 0 {
            &v * &CycNum::root(r_order, x * r_order as i64 / 4)
        } else {
            v
        }
    };
    let mut num = CycNum::one(r_order);
    let mut den = CycNum::one(r_order);
    for (i, j) in l.cells() {
        let hl = l.hook_length(i, j)? as i64;
        let d = l.d_stat(i, j)?;
        let dp = l.d_prime_stat(i, j)?;
        num = &num * &(&half_alpha(1) * &r(d) - &half_alpha(-1) * &r(-d));
        num = &num * &(&half_alpha(1) * &r(dp) + &half_alpha(-1) * &r(-dp));
        den = &den * &(r(hl) - r(-hl));
        den = &den * &(r(hl) + r(-hl));
    }
    if den.is_zero() {
        return Err(Error::VanishingDenominator(format!("{l} at {}", spec.title())));
    }
    lower_to(&num.checked_div(&den)?, spec.order)
}

fn qdim_product(spec: &SeriesSpec, factors: impl Iterator<Item = CycNum>, j: i64) -> Result<CycNum> {
    let mut num = CycNum::one(spec.order);
    for f in factors {
        num = &num * &f;
    }
    let mut den = CycNum::one(spec.order);
    let unit = bracket(spec, 1);
    for i in 1..=j {
        den = &den * &bracket(spec, i);
        num = &num * &unit;
    }
    if den.is_zero() {
        return Err(Error::VanishingDenominator(format!("[{j}]! at {}", spec.title())));
    }
    num.checked_div(&den)
}

/// ⟨1^j⟩ = [0]_α[-1]_α…[2-j]_α([1-j]_α+[j])/[j]!.
pub fn qdim_column(spec: &SeriesSpec, j: usize) -> Result<CycNum> {
    if j == 0 {
        return Ok(CycNum::one(spec.order));
    }
    let j = j as i64;
    let unit_inv = bracket(spec, 1).inv()?;
    let qa = |x: i64| &bracket_alpha(spec, x) * &unit_inv;
    let last = &qa(1 - j) + &(&bracket(spec, j) * &unit_inv);
    qdim_product(spec, (0..j - 1).map(|t| qa(-t)).chain(std::iter::once(last)), j)
}

/// ⟨(j)⟩ = [0]_α[1]_α…[j-2]_α([j-1]_α+[j])/[j]!.
pub fn qdim_row(spec: &SeriesSpec, j: usize) -> Result<CycNum> {
    if j == 0 {
        return Ok(CycNum::one(spec.order));
    }
    let j = j as i64;
    let unit_inv = bracket(spec, 1).inv()?;
    let qa = |x: i64| &bracket_alpha(spec, x) * &unit_inv;
    let last = &qa(j - 1) + &(&bracket(spec, j) * &unit_inv);
    qdim_product(spec, (0..j - 1).map(qa).chain(std::iter::once(last)), j)
}

/// t_λ = α^|λ| s^(2 Σ cn).
pub fn twist(spec: &SeriesSpec, l: &Partition) -> CycNum {
    let (sign, a) = spec.alpha_form();
    let size = l.size() as i64;
    let v = spec.spow(a * size + 2 * l.content_sum()).clone();
    signed(&v, if size % 2 == 1 { sign } else { 1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Add,
    Remove,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Add => "add",
            Direction::Remove => "remove",
        }
    }
}

/// s^(2cn) if μ = λ + c, α^-2 s^(-2cn) if λ = μ + c.
pub fn braiding_coeff(spec: &SeriesSpec, l: &Partition, mu: &Partition) -> Result<(Direction, CycNum)> {
    if let Some((_, (i, j))) = l.add_cells().into_iter().find(|(p, _)| p == mu) {
        return Ok((Direction::Add, spec.spow(2 * content(i, j)).clone()));
    }
    if let Some((_, (i, j))) = l.remove_cells().into_iter().find(|(p, _)| p == mu) {
        let (_, a) = spec.alpha_form();
        return Ok((Direction::Remove, spec.spow(-2 * a - 2 * content(i, j)).clone()));
    }
    Err(Error::NotAdjacent(l.to_string(), mu.to_string()))
}

#[derive(Clone, Debug)]
pub struct Branch {
    pub mu: Partition,
    pub direction: Direction,
    pub negligible: bool,
    pub coeff: CycNum,
}

/// Neighbours of λ in Γ̄ (one cell added or removed), flagged negligible when ⟨μ⟩ = 0.
pub fn branching(spec: &SeriesSpec, l: &Partition) -> Result<Vec<Branch>> {
    let mut out = vec![];
    let cand = l.add_cells().into_iter().chain(l.remove_cells());
    for (mu, _) in cand {
        if !spec.in_gamma_bar(&mu) {
            continue;
        }
        let (direction, coeff) = braiding_coeff(spec, l, &mu)?;
        let negligible = qdim(spec, &mu)?.is_zero();
        out.push(Branch { mu, direction, negligible, coeff });
    }
    Ok(out)
}

pub fn is_transparent(spec: &SeriesSpec, l: &Partition) -> Result<bool> {
    Ok(branching(spec, l)?.iter().all(|b| b.negligible || b.coeff.is_one()))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TLabel {
    Diagram(Partition),
    Composite(Composite),
}

impl fmt::Display for TLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TLabel::Diagram(p) => write!(f, "{p}"),
            TLabel::Composite(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TransparentObject {
    pub label: TLabel,
    pub qdim: CycNum,
    pub twist: CycNum,
}

/// Transparent simple objects of Γ, closed under tensor product of the generators.
pub fn transparent_objects(spec: &SeriesSpec) -> Result<Vec<TransparentObject>> {
    let mut out = vec![];
    for p in spec.label_sets().gamma {
        if is_transparent(spec, &p)? {
            out.push(TransparentObject { qdim: qdim(spec, &p)?, twist: twist(spec, &p), label: TLabel::Diagram(p) });
        }
    }
    let col = out.iter().find_map(|t| match &t.label {
        TLabel::Diagram(p) if p.len() >= 2 && p[1] == 1 => Some((p.len(), t.clone())),
        _ => None,
    });
    let row = out.iter().find_map(|t| match &t.label {
        TLabel::Diagram(p) if p.len() == 1 && p[1] >= 2 => Some((p[1], t.clone())),
        _ => None,
    });
    if let (Some((c, tc)), Some((r, tr))) = (col, row) {
        out.push(TransparentObject {
            label: TLabel::Composite(Composite { column: c, row: r }),
            qdim: &tc.qdim * &tr.qdim,
            twist: &tc.twist * &tr.twist,
        });
    }
    Ok(out)
}

pub fn group_type(ts: &[TransparentObject]) -> &'static str {
    match ts.len() {
        1 => "trivial",
        2 => "Z2",
        4 => "Z2xZ2",
        _ => "other",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    Modular,
    Modularizable,
    NotModularizable,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Modular => "modular",
            VerdictKind::Modularizable => "modularizable",
            VerdictKind::NotModularizable => "not_modularizable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// transparent objects violating t = 1 or ⟨t⟩ = 1
    pub witnesses: Vec<TransparentObject>,
}

/// Bruguières' criterion applied to the transparent objects.
pub fn modularizability(spec: &SeriesSpec) -> Result<Verdict> {
    let ts = transparent_objects(spec)?;
    if ts.len() == 1 {
        return Ok(Verdict { kind: VerdictKind::Modular, witnesses: vec![] });
    }
    let witnesses: Vec<TransparentObject> = ts.into_iter().filter(|t| !t.twist.is_one() || !t.qdim.is_one()).collect();
    let kind = if witnesses.is_empty() { VerdictKind::Modularizable } else { VerdictKind::NotModularizable };
    Ok(Verdict { kind, witnesses })
}

pub fn objects(spec: &SeriesSpec) -> Result<Vec<ObjectData>> {
    spec.label_sets()
        .gamma
        .into_iter()
        .map(|p| Ok(ObjectData { qdim: qdim(spec, &p)?, twist: twist(spec, &p), label: p }))
        .collect()
}

/// ⟨ω⟩ = Σ_{λ∈Γ} ⟨λ⟩².
pub fn omega(spec: &SeriesSpec) -> Result<CycNum> {
    let mut acc = CycNum::zero(spec.order);
    for p in spec.label_sets().gamma {
        let d = qdim(spec, &p)?;
        acc = &acc + &(&d * &d);
    }
    Ok(acc)
}
