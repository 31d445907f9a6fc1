//! Young diagrams. Cells (i, j) are 1-indexed: row i, column j.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Index;
use std::sync::OnceLock;

pub struct Partition {
    parts: Vec<usize>,
    dual: OnceLock<Vec<usize>>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition::from_sorted(parts))
    }

    fn from_sorted(parts: Vec<usize>) -> Partition {
        Partition { parts, dual: OnceLock::new() }
    }

    pub fn empty() -> Partition {
        Partition::from_sorted(vec![])
    }

    pub fn row(m: usize) -> Partition {
        Partition::from_sorted(if m == 0 { vec![] } else { vec![m] })
    }

    pub fn column(m: usize) -> Partition {
        Partition::from_sorted(vec![1; m])
    }

    /// The rectangle k^n: n rows of length k.
    pub fn rectangle(n: usize, k: usize) -> Partition {
        Partition::from_sorted(if k == 0 { vec![] } else { vec![k; n] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths λ^∨.
    pub fn dual_parts(&self) -> &[usize] {
        self.dual.get_or_init(|| {
            let w = self.parts.first().copied().unwrap_or(0);
            (1..=w).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect()
        })
    }

    pub fn transpose(&self) -> Partition {
        let t = Partition::from_sorted(self.dual_parts().to_vec());
        let _ = t.dual.set(self.parts.clone());
        t
    }

    /// λ^∨_j, zero past the last column.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.dual_parts().get(j - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self[i] >= j
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    fn need(&self, i: usize, j: usize) -> Result<()> {
        if self.contains(i, j) {
            Ok(())
        } else {
            Err(Error::OutOfDiagram(i, j))
        }
    }

    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        self.need(i, j)?;
        Ok(self[i] + self.col(j) + 1 - i - j)
    }

    pub fn d_stat(&self, i: usize, j: usize) -> Result<i64> {
        self.need(i, j)?;
        Ok(d_value(self, i, j, i <= j))
    }

    pub fn d_prime_stat(&self, i: usize, j: usize) -> Result<i64> {
        self.need(i, j)?;
        Ok(d_value(self, i, j, i < j))
    }

    pub fn content_sum(&self) -> i64 {
        self.cells().map(|(i, j)| content(i, j)).sum()
    }

    /// Diagrams obtained by adding one cell, with the added cell.
    pub fn add_cells(&self) -> Vec<(Partition, (usize, usize))> {
        let mut out = vec![];
        for i in 1..=self.len() + 1 {
            if i == 1 || self[i - 1] > self[i] {
                let mut p = self.parts.clone();
                if i > p.len() {
                    p.push(0);
                }
                p[i - 1] += 1;
                let j = p[i - 1];
                out.push((Partition::from_sorted(p), (i, j)));
            }
        }
        out
    }

    /// Diagrams obtained by removing one cell, with the removed cell.
    pub fn remove_cells(&self) -> Vec<(Partition, (usize, usize))> {
        let mut out = vec![];
        for i in 1..=self.len() {
            if self[i] > self[i + 1] {
                let mut p = self.parts.clone();
                let j = p[i - 1];
                p[i - 1] -= 1;
                if p[i - 1] == 0 {
                    p.pop();
                }
                out.push((Partition::from_sorted(p), (i, j)));
            }
        }
        out
    }
}

fn d_value(l: &Partition, i: usize, j: usize, upper: bool) -> i64 {
    let (i, j) = (i as i64, j as i64);
    if upper {
        l[i as usize] as i64 + l[j as usize] as i64 - i - j + 1
    } else {
        -(l.col(i as usize) as i64) - l.col(j as usize) as i64 + i + j - 1
    }
}

/// cn(c) = j - i.
pub fn content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

impl Index<usize> for Partition {
    type Output = usize;
    /// λ_i (1-indexed), zero past the last row.
    fn index(&self, i: usize) -> &usize {
        if i == 0 {
            return &0;
        }
        self.parts.get(i - 1).unwrap_or(&0)
    }
}

impl Clone for Partition {
    fn clone(&self) -> Self {
        Partition { parts: self.parts.clone(), dual: self.dual.clone() }
    }
}

impl PartialEq for Partition {
    fn eq(&self, o: &Self) -> bool {
        self.parts == o.parts
    }
}
impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.parts.hash(h)
    }
}

/// Canonical order: by size, then lexicographically larger parts first.
impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.size().cmp(&o.size()).then_with(|| o.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    /// Accepts "3,1", "(3,1)", "[3,1]", "" or "∅".
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidParameters(format!("bad partition '{s}'")))?;
        Partition::new(parts)
    }
}

/// Constraints of the form λ₁ ≤ a, λ₂ ≤ ·, λ₁+λ₂ ≤ b, λ^∨₁ ≤ c, λ^∨₂ ≤ ·, λ^∨₁+λ^∨₂ ≤ d, λ₁+λ^∨₁ ≤ e.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub row1: Option<usize>,
    pub row2: Option<usize>,
    pub row12: Option<usize>,
    pub col1: Option<usize>,
    pub col2: Option<usize>,
    pub col12: Option<usize>,
    pub hook: Option<usize>,
}

impl Bounds {
    pub fn admits(&self, l: &Partition) -> bool {
        let ok = |b: Option<usize>, v: usize| b.is_none_or(|b| v <= b);
        ok(self.row1, l[1])
            && ok(self.row2, l[2])
            && ok(self.row12, l[1] + l[2])
            && ok(self.col1, l.col(1))
            && ok(self.col2, l.col(2))
            && ok(self.col12, l.col(1) + l.col(2))
            && ok(self.hook, l[1] + l.col(1))
    }

    pub fn transpose(&self) -> Bounds {
        Bounds {
            row1: self.col1,
            row2: self.col2,
            row12: self.col12,
            col1: self.row1,
            col2: self.row2,
            col12: self.row12,
            hook: self.hook,
        }
    }

    fn max_width(&self) -> Option<usize> {
        [self.row1, self.row12, self.hook].into_iter().flatten().min()
    }

    fn max_height(&self) -> Option<usize> {
        [self.col1, self.col12, self.hook].into_iter().flatten().min()
    }
}

/// All partitions satisfying the bounds, in canonical order.
pub fn enumerate_box(b: &Bounds) -> Result<Vec<Partition>> {
    let (w, h) = match (b.max_width(), b.max_height()) {
        (Some(w), Some(h)) => (w, h),
        _ => return Err(Error::InvalidParameters("enumeration needs a row and a column bound".into())),
    };
    let mut out = vec![];
    let mut cur = vec![];
    fill(&mut cur, w, h, b, &mut out);
    out.sort();
    Ok(out)
}

fn fill(cur: &mut Vec<usize>, max: usize, rows: usize, b: &Bounds, out: &mut Vec<Partition>) {
    let p = Partition::from_sorted(cur.clone());
    // appending rows never repairs a violated bound
    if !b.admits(&p) {
        return;
    }
    out.push(p);
    if rows == 0 {
        return;
    }
    for x in 1..=max {
        cur.push(x);
        fill(cur, x, rows - 1, b, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_past_end() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p[1], 3);
        assert_eq!(p[5], 0);
        assert_eq!(p.col(4), 0);
    }

    #[test]
    fn parse() {
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), Partition::new(vec![2, 1]).unwrap());
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
