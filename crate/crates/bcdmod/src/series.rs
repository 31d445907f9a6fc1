//! The seven root-of-unity specializations of (α, s) and their label sets.

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_box, Bounds, Partition};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    C,
    CB,
    CBneg,
    Bneg,
    BD,
    BDneg,
    D,
}

impl Series {
    pub const ALL: [Series; 7] = [Series::C, Series::CB, Series::CBneg, Series::Bneg, Series::BD, Series::BDneg, Series::D];

    pub fn name(self) -> &'static str {
        match self {
            Series::C => "C",
            Series::CB => "CB",
            Series::CBneg => "CB-",
            Series::Bneg => "B-",
            Series::BD => "BD",
            Series::BDneg => "BD-",
            Series::D => "D",
        }
    }

    /// Name of the transposed (level-rank) partner.
    pub fn dual_name(self) -> &'static str {
        match self {
            Series::C => "C",
            Series::CB => "BC",
            Series::CBneg => "BC-",
            Series::Bneg => "-B",
            Series::BD => "DB",
            Series::BDneg => "DB-",
            Series::D => "D",
        }
    }

    pub fn l(self, n: usize, k: usize) -> usize {
        let s = 2 * n + 2 * k;
        match self {
            Series::C => s + 2,
            Series::CB | Series::CBneg => s + 1,
            Series::Bneg => s,
            Series::BD | Series::BDneg => s - 1,
            Series::D => s - 2,
        }
    }

    /// Order M of the cyclotomic field, s a primitive M-th root of unity.
    pub fn field_order(self, l: usize) -> usize {
        match self {
            Series::CBneg | Series::BDneg => l,
            _ => 2 * l,
        }
    }

    /// The two expressions for α as (sign, exponent of s): first in n, then in k.
    fn alpha_forms(self, n: i64, k: i64) -> [(i64, i64); 2] {
        match self {
            Series::C => [(-1, 2 * n + 1), (1, -2 * k - 1)],
            Series::CB => [(-1, 2 * n + 1), (1, -2 * k)],
            Series::CBneg => [(-1, 2 * n + 1), (-1, -2 * k)],
            Series::Bneg => [(1, 2 * n), (-1, -2 * k)],
            Series::BD => [(1, 2 * n), (-1, -2 * k + 1)],
            Series::BDneg => [(-1, 2 * n), (-1, -2 * k + 1)],
            Series::D => [(1, 2 * n - 1), (-1, -2 * k + 1)],
        }
    }

    fn gamma_bounds(self, n: usize, k: usize) -> Bounds {
        let b = Bounds::default();
        match self {
            Series::C => Bounds { row1: Some(k), col1: Some(n), ..b },
            Series::CB | Series::CBneg => Bounds { row12: Some(2 * k + 1), col1: Some(n), ..b },
            Series::Bneg => Bounds { row12: Some(2 * k + 1), col12: Some(2 * n + 1), ..b },
            Series::BD | Series::BDneg => Bounds { row12: Some(2 * k), col12: Some(2 * n + 1), ..b },
            Series::D => Bounds { row12: Some(2 * k), col12: Some(2 * n), ..b },
        }
    }

    fn gamma_bar_bounds(self, n: usize, k: usize, l: usize) -> Bounds {
        let b = Bounds::default();
        match self {
            Series::C => Bounds { row1: Some(k + 1), row2: Some(k), col1: Some(n + 1), col2: Some(n), ..b },
            Series::CB | Series::CBneg => Bounds { row12: Some(2 * k + 2), col1: Some(n + 1), col2: Some(n), ..b },
            Series::Bneg => Bounds { row12: Some(2 * k + 2), col12: Some(2 * n + 2), hook: Some(l), ..b },
            Series::BD | Series::BDneg => Bounds { row12: Some(2 * k + 1), col12: Some(2 * n + 2), hook: Some(l), ..b },
            Series::D => Bounds { row12: Some(2 * k + 1), col12: Some(2 * n + 1), hook: Some(l), ..b },
        }
    }

    /// Column and row sizes of the transparent generators, where present.
    fn generator_sizes(self, n: usize, k: usize) -> (Option<usize>, Option<usize>) {
        match self {
            Series::C => (None, None),
            Series::CB | Series::CBneg => (None, Some(2 * k + 1)),
            Series::Bneg => (Some(2 * n + 1), Some(2 * k + 1)),
            Series::BD | Series::BDneg => (Some(2 * n + 1), Some(2 * k)),
            Series::D => (Some(2 * n), Some(2 * k)),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Series> {
        Series::ALL
            .into_iter()
            .find(|x| x.name() == s || format!("{x:?}") == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown series '{s}' (expected one of C, CB, CB-, B-, BD, BD-, D)")))
    }
}

/// The tensor product of a column and a row transparent generator; not a diagram in Γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Composite {
    pub column: usize,
    pub row: usize,
}

impl fmt::Display for Composite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1^{}⊗({})", self.column, self.row)
    }
}

#[derive(Clone, Debug)]
pub struct LabelSet {
    pub gamma: Vec<Partition>,
    pub gamma_bar: Vec<Partition>,
    pub extra: Option<Composite>,
}

/// (sign, exponent): α = sign · s^exponent.
pub type AlphaForm = (i64, i64);

#[derive(Clone)]
pub struct SeriesSpec {
    pub series: Series,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub order: u32,
    /// s = ζ_order^root
    pub root: i64,
    /// true for the transposed partner of a non-self-dual series
    pub transposed: bool,
    pub(crate) fam_row: AlphaForm,
    pub(crate) fam_col: AlphaForm,
    pub(crate) fam_other: AlphaForm,
    pub(crate) s_pows: Arc<Vec<CycNum>>,
    alpha: CycNum,
    gamma_b: Bounds,
    gamma_bar_b: Bounds,
    pub(crate) memo: Arc<RwLock<HashMap<Partition, CycNum>>>,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.title())
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameters(format!("n and k must be at least 1, got n={n}, k={k}")));
    }
    Ok(())
}

/// The spec with s = ζ_M (the canonical generator).
pub fn make_spec(series: Series, n: usize, k: usize) -> Result<SeriesSpec> {
    make_spec_with_root(series, n, k, 1)
}

/// The spec with s = ζ_M^e for e coprime to M.
pub fn make_spec_with_root(series: Series, n: usize, k: usize, e: i64) -> Result<SeriesSpec> {
    check_nk(n, k)?;
    let l = series.l(n, k);
    let m = series.field_order(l);
    if e.gcd(&(m as i64)) != 1 {
        return Err(Error::InvalidParameters(format!("root exponent {e} is not coprime to {m}")));
    }
    let [fn_, fk] = series.alpha_forms(n as i64, k as i64);
    SeriesSpec::assemble(
        series,
        (n, k, l),
        m as u32,
        e.rem_euclid(m as i64),
        false,
        [fk, fn_, fn_],
        series.gamma_bounds(n, k),
        series.gamma_bar_bounds(n, k, l),
    )
}

impl SeriesSpec {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        series: Series,
        (n, k, l): (usize, usize, usize),
        order: u32,
        root: i64,
        transposed: bool,
        [fam_row, fam_col, fam_other]: [AlphaForm; 3],
        gamma_b: Bounds,
        gamma_bar_b: Bounds,
    ) -> Result<SeriesSpec> {
        let s = CycNum::root(order, root);
        let mut pows = vec![CycNum::one(order)];
        loop {
            let next = pows.last().unwrap() * &s;
            if next.is_one() {
                break;
            }
            pows.push(next);
        }
        let mut spec = SeriesSpec {
            series,
            n,
            k,
            l,
            order,
            root,
            transposed,
            fam_row,
            fam_col,
            fam_other,
            s_pows: Arc::new(pows),
            alpha: CycNum::zero(order),
            gamma_b,
            gamma_bar_b,
            memo: Default::default(),
        };
        let forms = [fam_row, fam_col, fam_other];
        let vals: Vec<CycNum> = forms.iter().map(|&f| spec.form_value(f)).collect();
        if vals.iter().any(|v| *v != vals[0]) {
            return Err(Error::Consistency(format!("the two expressions for α disagree at {}", spec.title())));
        }
        spec.alpha = vals[0].clone();
        let s = spec.s().clone();
        let bad = [CycNum::one(order), -CycNum::one(order), -&s, spec.spow(-1).clone()];
        if bad.contains(&spec.alpha) {
            return Err(Error::InvalidParameters(format!("α ∈ {{±1, -s, s^-1}} at {}", spec.title())));
        }
        Ok(spec)
    }

    pub(crate) fn form_value(&self, (sign, e): AlphaForm) -> CycNum {
        let v = self.spow(e).clone();
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub fn s(&self) -> &CycNum {
        &self.s_pows[1 % self.s_pows.len()]
    }

    /// s^e for any integer e.
    pub fn spow(&self, e: i64) -> &CycNum {
        &self.s_pows[e.rem_euclid(self.s_pows.len() as i64) as usize]
    }

    /// Multiplicative order of s.
    pub fn s_order(&self) -> usize {
        self.s_pows.len()
    }

    pub fn alpha(&self) -> &CycNum {
        &self.alpha
    }

    /// α as (sign, exponent of s).
    pub fn alpha_form(&self) -> AlphaForm {
        self.fam_other
    }

    pub fn display_series(&self) -> &'static str {
        if self.transposed {
            self.series.dual_name()
        } else {
            self.series.name()
        }
    }

    /// Parameters as written for the displayed series (transposed views swap n and k).
    pub fn display_nk(&self) -> (usize, usize) {
        if self.transposed {
            (self.k, self.n)
        } else {
            (self.n, self.k)
        }
    }

    pub fn title(&self) -> String {
        let (a, b) = self.display_nk();
        let mut t = format!("({},{},{})", self.display_series(), a, b);
        if self.root != 1 {
            t.push_str(&format!(" at s=z{}^{}", self.order, self.root));
        }
        t
    }

    pub fn label_sets(&self) -> LabelSet {
        let gamma = enumerate_box(&self.gamma_b).expect("series bounds are finite");
        let mut gamma_bar = enumerate_box(&self.gamma_bar_b).expect("series bounds are finite");
        for p in &gamma {
            if !gamma_bar.contains(p) {
                gamma_bar.push(p.clone());
            }
        }
        gamma_bar.sort();
        let extra = match self.generator_sizes() {
            (Some(column), Some(row)) => Some(Composite { column, row }),
            _ => None,
        };
        LabelSet { gamma, gamma_bar, extra }
    }

    pub fn in_gamma(&self, p: &Partition) -> bool {
        self.gamma_b.admits(p)
    }

    pub fn in_gamma_bar(&self, p: &Partition) -> bool {
        self.gamma_b.admits(p) || self.gamma_bar_b.admits(p)
    }

    /// (column size, row size) of the expected transparent generators.
    pub fn generator_sizes(&self) -> (Option<usize>, Option<usize>) {
        let (c, r) = self.series.generator_sizes(self.n, self.k);
        if self.transposed {
            (r, c)
        } else {
            (c, r)
        }
    }

    /// The partner category under λ ↦ λ^∨ and s ↦ -s^-1.
    pub fn level_rank_dual(&self) -> Result<SeriesSpec> {
        let m = self.order as i64;
        let (order, root) = if m % 2 == 0 {
            (self.order, (m / 2 - self.root).rem_euclid(m))
        } else {
            (2 * self.order, (m - 2 * self.root).rem_euclid(2 * m))
        };
        if matches!(self.series, Series::C | Series::D) && !self.transposed && order == self.order {
            return make_spec_with_root(self.series, self.k, self.n, root);
        }
        let t = |(sg, e): AlphaForm| (if e.rem_euclid(2) == 1 { -sg } else { sg }, -e);
        let fams = [t(self.fam_col), t(self.fam_row), t(self.fam_other)];
        let spec = SeriesSpec::assemble(
            self.series,
            (self.n, self.k, self.l),
            order,
            root,
            !self.transposed,
            fams,
            self.gamma_b.transpose(),
            self.gamma_bar_b.transpose(),
        )?;
        if spec.alpha.embed(order.max(self.order)) != self.alpha.embed(order.max(self.order)) {
            return Err(Error::Consistency("level-rank dual changed α".into()));
        }
        Ok(spec)
    }
}

pub fn label_sets(spec: &SeriesSpec) -> LabelSet {
    spec.label_sets()
}

/// The partner spec together with the relabeling λ ↦ λ^∨ on Γ.
pub fn level_rank_dual(spec: &SeriesSpec) -> Result<(SeriesSpec, Vec<(Partition, Partition)>)> {
    let dual = spec.level_rank_dual()?;
    let map = spec.label_sets().gamma.into_iter().map(|p| {
        let t = p.transpose();
        (p, t)
    });
    Ok((dual, map.collect()))
}
