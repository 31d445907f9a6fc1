//! S-matrix of C^{n,k} from symplectic characters, and fusion rules extracted from it.

use crate::catdata;
use crate::cyclotomic::{bracket_s, CycNum};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::series::{Series, SeriesSpec};

#[derive(Clone, Debug)]
pub struct SMatrix {
    pub spec: SeriesSpec,
    pub labels: Vec<Partition>,
    pub s: Vec<Vec<CycNum>>,
    pub sbar: Vec<Vec<CycNum>>,
    pub omega: CycNum,
}

fn require_c(spec: &SeriesSpec) -> Result<()> {
    if spec.series != Series::C || spec.transposed {
        return Err(Error::SMatrixUnavailable(spec.title()));
    }
    Ok(())
}

fn point_exponents(spec: &SeriesSpec, mu: &Partition) -> Vec<i64> {
    let n = spec.n;
    (1..=n).map(|j| 2 * (mu[j] + n + 1 - j) as i64).collect()
}

/// x_j(μ) = s^(2(μ_j + n + 1 - j)).
pub fn character_point(spec: &SeriesSpec, mu: &Partition) -> Vec<CycNum> {
    point_exponents(spec, mu).into_iter().map(|e| spec.spow(e).clone()).collect()
}

pub fn det(mut a: Vec<Vec<CycNum>>) -> Result<CycNum> {
    let n = a.len();
    let order = match a.first() {
        Some(r) => r[0].order(),
        None => return Err(Error::InvalidParameters("empty matrix".into())),
    };
    let mut acc = CycNum::one(order);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Ok(CycNum::zero(order));
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        let piv = a[c][c].clone();
        acc = &acc * &piv;
        let inv = piv.inv()?;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[r][j] = &a[r][j] - &t;
            }
        }
    }
    Ok(acc)
}

fn alternant(x: &[CycNum], exps: &[i64]) -> Result<CycNum> {
    let rows = x
        .iter()
        .map(|xi| exps.iter().map(|&e| bracket_s(xi, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    det(rows)
}

/// χ_λ(x) = det(x_i^(l_j) - x_i^(-l_j)) / det(x_i^(δ_j) - x_i^(-δ_j)), l = λ + δ, δ = (n, …, 1).
pub fn sp_character(l: &Partition, x: &[CycNum]) -> Result<CycNum> {
    let n = x.len();
    if l.len() > n {
        return Err(Error::RowCount(l.to_string(), n));
    }
    let delta: Vec<i64> = (1..=n).map(|j| (n + 1 - j) as i64).collect();
    let shifted: Vec<i64> = (1..=n).map(|j| (l[j] + n + 1 - j) as i64).collect();
    let den = alternant(x, &delta)?;
    if den.is_zero() {
        return Err(Error::VanishingDenominator("Weyl denominator".into()));
    }
    alternant(x, &shifted)?.checked_div(&den)
}

fn alternant_exp(spec: &SeriesSpec, point: &[i64], exps: &[i64]) -> Result<CycNum> {
    let rows = point
        .iter()
        .map(|&p| exps.iter().map(|&e| spec.spow(p * e) - spec.spow(-p * e)).collect())
        .collect();
    det(rows)
}

/// S_λμ = (-1)^(|λ|+|μ|) χ_λ(x(μ)) χ_μ(x(∅)), with the defining identities enforced.
pub fn build_smatrix(spec: &SeriesSpec) -> Result<SMatrix> {
    require_c(spec)?;
    let labels = spec.label_sets().gamma;
    let n = spec.n;
    let delta: Vec<i64> = (1..=n).map(|j| (n + 1 - j) as i64).collect();
    let shifted = |l: &Partition| -> Vec<i64> { (1..=n).map(|j| (l[j] + n + 1 - j) as i64).collect() };
    let points: Vec<Vec<i64>> = labels.iter().map(|m| point_exponents(spec, m)).collect();
    let dens = points.iter().map(|p| alternant_exp(spec, p, &delta)).collect::<Result<Vec<_>>>()?;
    if dens.iter().any(|d| d.is_zero()) {
        return Err(Error::VanishingDenominator(format!("Weyl denominator at {}", spec.title())));
    }
    let dens_inv = dens.iter().map(|d| d.inv()).collect::<Result<Vec<_>>>()?;
    let chi = |a: usize, b: usize| -> Result<CycNum> {
        Ok(&alternant_exp(spec, &points[b], &shifted(&labels[a]))? * &dens_inv[b])
    };
    let at_empty = (0..labels.len()).map(|b| chi(b, 0)).collect::<Result<Vec<_>>>()?;
    let mut s = vec![vec![CycNum::zero(spec.order); labels.len()]; labels.len()];
    for a in 0..labels.len() {
        for b in 0..labels.len() {
            let v = &chi(a, b)? * &at_empty[b];
            s[a][b] = if (labels[a].size() + labels[b].size()) % 2 == 1 { -v } else { v };
        }
    }
    let sbar = s.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect();
    let omega = catdata::omega(spec)?;
    let sm = SMatrix { spec: spec.clone(), labels, s, sbar, omega };
    sm.verify()?;
    Ok(sm)
}

impl SMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.labels.iter().position(|q| q == p)
    }

    /// S·S̄.
    pub fn product(&self) -> Vec<Vec<CycNum>> {
        let n = self.size();
        let mut out = vec![vec![CycNum::zero(self.spec.order); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = CycNum::zero(self.spec.order);
                for t in 0..n {
                    acc = &acc + &(&self.s[i][t] * &self.sbar[t][j]);
                }
                *cell = acc;
            }
        }
        out
    }

    fn verify(&self) -> Result<()> {
        let n = self.size();
        let title = self.spec.title();
        for i in 0..n {
            for j in 0..i {
                if self.s[i][j] != self.s[j][i] {
                    return Err(Error::Consistency(format!("S not symmetric at {title}")));
                }
            }
            if self.s[i][0] != catdata::qdim(&self.spec, &self.labels[i])? {
                return Err(Error::Consistency(format!("S_λ∅ ≠ ⟨λ⟩ for λ = {} at {title}", self.labels[i])));
            }
        }
        let p = self.product();
        for (i, row) in p.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { self.omega.clone() } else { CycNum::zero(self.spec.order) };
                if *v != want {
                    return Err(Error::Consistency(format!("S·S̄ ≠ ⟨ω⟩I at {title}")));
                }
            }
        }
        Ok(())
    }
}

/// (-(2n+2k+2))^n / (Π_j [2n+2-2j]_s Π_{i<j} [2n+2-i-j]_s [j-i]_s)².
pub fn omega_closed_form(spec: &SeriesSpec) -> Result<CycNum> {
    require_c(spec)?;
    let (n, k) = (spec.n as i64, spec.k as i64);
    let b = |e: i64| spec.spow(e) - spec.spow(-e);
    let mut p = CycNum::one(spec.order);
    for j in 1..=n {
        p = &p * &b(2 * n + 2 - 2 * j);
        for i in 1..j {
            p = &p * &(&b(2 * n + 2 - i - j) * &b(j - i));
        }
    }
    let top = CycNum::from_int(spec.order, -(2 * n + 2 * k + 2)).pow(n)?;
    top.checked_div(&(&p * &p))
}

#[derive(Clone, Debug)]
pub struct FusionTable {
    pub labels: Vec<Partition>,
    pub n: Vec<Vec<Vec<u64>>>,
}

impl FusionTable {
    pub fn get(&self, a: usize, b: usize, c: usize) -> u64 {
        self.n[a][b][c]
    }

    /// Nonzero entries as (λ, μ, ν, N).
    pub fn records(&self) -> Vec<(usize, usize, usize, u64)> {
        let m = self.labels.len();
        let mut out = vec![];
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.n[a][b][c] != 0 {
                        out.push((a, b, c, self.n[a][b][c]));
                    }
                }
            }
        }
        out
    }
}

/// N_λμ^ν = (1/⟨ω⟩) Σ_γ S_λγ S_μγ S̄_γν / S_∅γ, required to be a nonnegative integer.
pub fn fusion_from_s(sm: &SMatrix) -> Result<FusionTable> {
    let m = sm.size();
    let oinv = sm.omega.inv()?;
    let w: Vec<Vec<CycNum>> = (0..m)
        .map(|g| {
            let f = &sm.s[0][g].inv()? * &oinv;
            Ok((0..m).map(|nu| &sm.sbar[g][nu] * &f).collect())
        })
        .collect::<Result<_>>()?;
    let mut n = vec![vec![vec![0u64; m]; m]; m];
    for a in 0..m {
        for b in a..m {
            let ab: Vec<CycNum> = (0..m).map(|g| &sm.s[a][g] * &sm.s[b][g]).collect();
            for c in 0..m {
                let mut acc = CycNum::zero(sm.spec.order);
                for g in 0..m {
                    acc = &acc + &(&ab[g] * &w[g][c]);
                }
                let v = acc.to_integer().and_then(|v| u64::try_from(v).ok()).ok_or_else(|| {
                    Error::Consistency(format!(
                        "fusion coefficient N[{}][{}][{}] = {acc} is not a nonnegative integer at {}",
                        sm.labels[a],
                        sm.labels[b],
                        sm.labels[c],
                        sm.spec.title()
                    ))
                })?;
                n[a][b][c] = v;
                n[b][a][c] = v;
            }
        }
    }
    Ok(FusionTable { labels: sm.labels.clone(), n })
}

/// Σ_λ ⟨λ⟩ S_λμ.
pub fn killing_check(sm: &SMatrix, mu: &Partition) -> Result<CycNum> {
    let j = sm.index_of(mu).ok_or_else(|| Error::InvalidParameters(format!("{mu} is not in Γ")))?;
    let mut acc = CycNum::zero(sm.spec.order);
    for (i, l) in sm.labels.iter().enumerate() {
        acc = &acc + &(&catdata::qdim(&sm.spec, l)? * &sm.s[i][j]);
    }
    Ok(acc)
}

/// Commutativity, associativity, unit law and duality N_λμ^∅ = δ_λμ (all labels are self-dual).
pub fn fusion_axioms(ft: &FusionTable) -> Result<()> {
    let m = ft.labels.len();
    let fail = |what: &str| Err(Error::Consistency(format!("fusion {what} fails")));
    for a in 0..m {
        for b in 0..m {
            if ft.n[0][a][b] != u64::from(a == b) || ft.n[a][b][0] != u64::from(a == b) {
                return fail("unit/duality law");
            }
            for c in 0..m {
                if ft.n[a][b][c] != ft.n[b][a][c] {
                    return fail("commutativity");
                }
                for d in 0..m {
                    let l: u64 = (0..m).map(|e| ft.n[a][b][e] * ft.n[e][c][d]).sum();
                    let r: u64 = (0..m).map(|e| ft.n[b][c][e] * ft.n[a][e][d]).sum();
                    if l != r {
                        return fail("associativity");
                    }
                }
            }
        }
    }
    Ok(())
}

/// N[λ][(1)][ν] = 1 exactly on the non-negligible one-cell neighbours of λ.
pub fn fusion_box_slice(sm: &SMatrix, ft: &FusionTable) -> Result<()> {
    let Some(b) = sm.index_of(&Partition::row(1)) else {
        return Ok(());
    };
    for (a, l) in ft.labels.iter().enumerate() {
        let mut want: Vec<usize> = catdata::branching(&sm.spec, l)?
            .into_iter()
            .filter(|br| !br.negligible)
            .map(|br| sm.index_of(&br.mu).ok_or_else(|| Error::Consistency(format!("{} outside Γ", br.mu))))
            .collect::<Result<_>>()?;
        want.sort();
        let got: Vec<usize> = (0..ft.labels.len()).filter(|&c| ft.n[a][b][c] != 0).collect();
        if got != want || got.iter().any(|&c| ft.n[a][b][c] != 1) {
            return Err(Error::Consistency(format!("{l} ⊗ (1) differs from the branching rule at {}", sm.spec.title())));
        }
    }
    Ok(())
}
