//! Orbits of the transparent group on Γ and the simple objects of the modularization.

use crate::catdata::{self, TLabel, VerdictKind};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::series::SeriesSpec;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// An element of Γ̃ = Γ ∪ {column generator ⊗ row generator}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    P(Partition),
    X,
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::P(p) => write!(f, "{p}"),
            Elem::X => write!(f, "X"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// 1^m: first column length complemented to m
    Column(usize),
    /// (m): first row length complemented to m
    Row(usize),
}

impl Generator {
    pub fn object(self) -> Partition {
        match self {
            Generator::Column(m) => Partition::column(m),
            Generator::Row(m) => Partition::row(m),
        }
    }

    pub fn from_partition(p: &Partition) -> Result<Generator> {
        if p.len() == 1 && p[1] >= 2 {
            Ok(Generator::Row(p[1]))
        } else if p.len() >= 2 && p[1] == 1 {
            Ok(Generator::Column(p.len()))
        } else {
            Err(Error::InvalidGenerator(p.to_string()))
        }
    }
}

fn complement_first_row(l: &Partition, m: usize) -> Result<Partition> {
    let mut parts = l.parts().to_vec();
    if parts.is_empty() {
        parts.push(0);
    }
    if parts[0] > m {
        return Err(Error::InvalidGenerator(format!("({m}) on {l}")));
    }
    parts[0] = m - parts[0];
    Partition::new(parts).map_err(|_| Error::Consistency(format!("({m}) ⊗ {l} is not a diagram")))
}

/// Transparent generators of the category, read off the transparency census.
pub fn generators(spec: &SeriesSpec) -> Result<Vec<Generator>> {
    let mut out = vec![];
    for t in catdata::transparent_objects(spec)? {
        if let TLabel::Diagram(p) = &t.label {
            if !p.is_empty() {
                out.push(Generator::from_partition(p)?);
            }
        }
    }
    Ok(out)
}

fn act_with(spec: &SeriesSpec, gens: &[Generator], g: Generator, e: &Elem) -> Result<Elem> {
    if !gens.contains(&g) {
        return Err(Error::InvalidGenerator(format!("{:?} at {}", g, spec.title())));
    }
    let other = gens.iter().find(|&&h| h != g).copied();
    let l = match e {
        Elem::X => {
            let h = other.ok_or_else(|| Error::InvalidGenerator("X needs two generators".into()))?;
            return Ok(Elem::P(h.object()));
        }
        Elem::P(l) => l,
    };
    if let Some(h) = other {
        if *l == h.object() {
            return Ok(Elem::X);
        }
    }
    let out = match g {
        Generator::Row(m) => complement_first_row(l, m)?,
        Generator::Column(m) => complement_first_row(&l.transpose(), m)?.transpose(),
    };
    if !spec.in_gamma(&out) {
        return Err(Error::Consistency(format!("{g:?} maps {l} to {out} outside Γ at {}", spec.title())));
    }
    Ok(Elem::P(out))
}

/// Tensor product of a transparent generator with an element of Γ̃.
pub fn group_action(spec: &SeriesSpec, t: &Partition, e: &Elem) -> Result<Elem> {
    let gens = generators(spec)?;
    act_with(spec, &gens, Generator::from_partition(t)?, e)
}

#[derive(Clone, Debug)]
pub struct Orbit {
    /// sorted, X last
    pub elems: Vec<Elem>,
    pub stabilizer: usize,
}

impl Orbit {
    pub fn representative(&self) -> &Partition {
        match &self.elems[0] {
            Elem::P(p) => p,
            Elem::X => unreachable!("X never is alone in an orbit"),
        }
    }
}

/// G-orbits on Γ̃ without checking modularizability.
pub fn orbits_unchecked(spec: &SeriesSpec) -> Result<Vec<Orbit>> {
    let gens = generators(spec)?;
    let group_order = 1usize << gens.len();
    let mut elems: Vec<Elem> = spec.label_sets().gamma.into_iter().map(Elem::P).collect();
    if gens.len() == 2 {
        elems.push(Elem::X);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![];
    for e in &elems {
        if seen.contains(e) {
            continue;
        }
        let mut orbit = vec![e.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for &g in &gens {
                let f = act_with(spec, &gens, g, &orbit[i])?;
                if !orbit.contains(&f) {
                    orbit.push(f);
                }
            }
            i += 1;
        }
        orbit.sort();
        seen.extend(orbit.iter().cloned());
        if !group_order.is_multiple_of(orbit.len()) {
            return Err(Error::Consistency(format!("orbit of size {} at {}", orbit.len(), spec.title())));
        }
        out.push(Orbit { stabilizer: group_order / orbit.len(), elems: orbit });
    }
    Ok(out)
}

pub fn orbits_and_stabilizers(spec: &SeriesSpec) -> Result<Vec<Orbit>> {
    if catdata::modularizability(spec)?.kind != VerdictKind::Modularizable {
        return Err(Error::NotModularizable(spec.title()));
    }
    orbits_unchecked(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn ch(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Plain(Partition),
    Split(Partition, Sign),
    Quad(Partition, Sign, Sign),
    Hat(Partition),
    Undetermined(Partition),
}

impl Label {
    pub fn kind(&self) -> String {
        match self {
            Label::Plain(_) => "plain".into(),
            Label::Split(_, s) => format!("split{}", s.ch()),
            Label::Quad(_, a, b) => format!("quad{}{}", a.ch(), b.ch()),
            Label::Hat(_) => "hat".into(),
            Label::Undetermined(_) => "undetermined".into(),
        }
    }

    pub fn partition(&self) -> &Partition {
        match self {
            Label::Plain(p) | Label::Split(p, _) | Label::Quad(p, _, _) | Label::Hat(p) | Label::Undetermined(p) => p,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(p) => write!(f, "{p}"),
            Label::Split(p, s) => write!(f, "{p}{}", s.ch()),
            Label::Quad(p, a, b) => write!(f, "{}{p}{}", a.ch(), b.ch()),
            Label::Hat(p) => write!(f, "hat{p}"),
            Label::Undetermined(p) => write!(f, "{p}?"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModLabel {
    pub label: Label,
    /// `None` for an undetermined stabilizer-4 object
    pub qdim: Option<CycNum>,
    pub twist: CycNum,
}

/// m ∈ {1, 4} per stabilizer-4 diagram, with an optional default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MChoices {
    pub default: Option<u8>,
    pub per: BTreeMap<Partition, u8>,
}

impl MChoices {
    pub fn uniform(m: u8) -> MChoices {
        MChoices { default: Some(m), per: BTreeMap::new() }
    }

    pub fn get(&self, p: &Partition) -> Option<u8> {
        self.per.get(p).copied().or(self.default)
    }

    fn validate(&self, quad: &[Partition]) -> Result<()> {
        for m in self.default.iter().chain(self.per.values()) {
            if *m != 1 && *m != 4 {
                return Err(Error::InvalidMChoice(format!("m must be 1 or 4, got {m}")));
            }
        }
        for p in self.per.keys() {
            if !quad.contains(p) {
                return Err(Error::InvalidMChoice(format!("{p} does not have a stabilizer of order 4")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ModularTable {
    pub spec: SeriesSpec,
    pub labels: Vec<ModLabel>,
    pub orbits: Vec<Orbit>,
    pub m_choices: MChoices,
}

impl ModularTable {
    /// Elements of Γ with their orbit representative.
    pub fn orbit_map(&self) -> Vec<(Partition, Partition)> {
        let mut out = vec![];
        for o in &self.orbits {
            for e in &o.elems {
                if let Elem::P(p) = e {
                    out.push((p.clone(), o.representative().clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Stabilizer-4 representatives.
    pub fn quad_orbits(&self) -> Vec<Partition> {
        self.orbits.iter().filter(|o| o.stabilizer == 4).map(|o| o.representative().clone()).collect()
    }

    pub fn is_determined(&self) -> bool {
        self.labels.iter().all(|l| l.qdim.is_some())
    }

    /// ⟨ω̃⟩ = Σ over orbits of ⟨λ⟩²/|Stab λ|, independent of the m choices.
    pub fn omega(&self) -> Result<CycNum> {
        let mut acc = CycNum::zero(self.spec.order);
        for o in &self.orbits {
            let d = catdata::qdim(&self.spec, o.representative())?;
            acc = &acc + &(&d * &d).scale(&BigRational::new(1.into(), (o.stabilizer as i64).into()));
        }
        Ok(acc)
    }
}

pub fn modular_table(spec: &SeriesSpec, m: &MChoices) -> Result<ModularTable> {
    let orbits = orbits_and_stabilizers(spec)?;
    let quad: Vec<Partition> = orbits.iter().filter(|o| o.stabilizer == 4).map(|o| o.representative().clone()).collect();
    m.validate(&quad)?;
    let mut labels = vec![];
    for o in &orbits {
        let p = o.representative().clone();
        let d = catdata::qdim(spec, &p)?;
        let t = catdata::twist(spec, &p);
        let frac = |q: i64| Some(d.scale(&BigRational::new(1.into(), q.into())));
        let mut push = |label, qdim| labels.push(ModLabel { label, qdim, twist: t.clone() });
        match o.stabilizer {
            1 => push(Label::Plain(p), Some(d.clone())),
            2 => {
                push(Label::Split(p.clone(), Sign::Plus), frac(2));
                push(Label::Split(p, Sign::Minus), frac(2));
            }
            4 => match m.get(&p) {
                Some(4) => {
                    for a in [Sign::Plus, Sign::Minus] {
                        for b in [Sign::Plus, Sign::Minus] {
                            push(Label::Quad(p.clone(), a, b), frac(4));
                        }
                    }
                }
                Some(_) => push(Label::Hat(p), frac(2)),
                None => push(Label::Undetermined(p), None),
            },
            s => return Err(Error::Consistency(format!("stabilizer of order {s}"))),
        }
    }
    Ok(ModularTable { spec: spec.clone(), labels, orbits, m_choices: m.clone() })
}
