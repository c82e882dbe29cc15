//! Kronecker quiver representations as formal sums of indecomposables.
//!
//! Nothing here ever builds a matrix. Hom and Ext dimensions come from the
//! closed formulas for indecomposables, extended additively.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dimension vector `(d1, d2)` of a Kronecker representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DimVector {
    pub d1: usize,
    pub d2: usize,
}

impl DimVector {
    /// The imaginary root `δ = (1,1)`.
    pub const DELTA: DimVector = DimVector { d1: 1, d2: 1 };
    pub const ZERO: DimVector = DimVector { d1: 0, d2: 0 };

    pub const fn new(d1: usize, d2: usize) -> Self {
        DimVector { d1, d2 }
    }

    /// `n·δ = (n, n)`.
    pub const fn delta(n: usize) -> Self {
        DimVector { d1: n, d2: n }
    }

    pub fn checked_sub(self, other: DimVector) -> Result<DimVector> {
        match (self.d1.checked_sub(other.d1), self.d2.checked_sub(other.d2)) {
            (Some(d1), Some(d2)) => Ok(DimVector { d1, d2 }),
            _ => Err(Error::DimUnderflow(self.d1, self.d2, other.d1, other.d2)),
        }
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(self, other: DimVector) -> bool {
        self.d1 <= other.d1 && self.d2 <= other.d2
    }

    /// The dual vector `e* = (n - e2, n - e1)` inside `R_n`.
    pub fn dual(self, n: usize) -> Result<DimVector> {
        if !self.fits_in(DimVector::delta(n)) {
            return Err(Error::OutOfRange {
                e: (self.d1, self.d2),
                context: format!("duality on R_{n}"),
            });
        }
        Ok(DimVector::new(n - self.d2, n - self.d1))
    }

    /// All vectors `f` with `0 <= f <= self`, in lexicographic order.
    pub fn sub_vectors(self) -> impl Iterator<Item = DimVector> {
        (0..=self.d1).flat_map(move |a| (0..=self.d2).map(move |b| DimVector::new(a, b)))
    }
}

impl Add for DimVector {
    type Output = DimVector;

    fn add(self, rhs: DimVector) -> DimVector {
        DimVector::new(self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

impl FromStr for DimVector {
    type Err = Error;

    /// Strict `e1,e2` format.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected `e1,e2`, got `{s}`")));
        }
        let parse = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: `{p}`")))
        };
        Ok(DimVector::new(parse(parts[0])?, parse(parts[1])?))
    }
}

/// The Euler form `<x, y> = x1 y1 + x2 y2 - 2 x1 y2`.
pub fn euler_form(x: DimVector, y: DimVector) -> i64 {
    let (a, b, c, d) = (x.d1 as i64, x.d2 as i64, y.d1 as i64, y.d2 as i64);
    a * c + b * d - 2 * a * d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Preprojective,
    Regular,
    Preinjective,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::Preprojective => 'P',
            Kind::Regular => 'R',
            Kind::Preinjective => 'I',
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Kind::Preprojective),
            "R" | "r" => Ok(Kind::Regular),
            "I" | "i" => Ok(Kind::Preinjective),
            _ => Err(Error::Parse(format!("unknown representation type `{s}`"))),
        }
    }
}

/// An indecomposable `P_n`, `R_n` or `I_n`. The regular parameter is fixed to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Indecomposable {
    kind: Kind,
    rank: usize,
}

impl Indecomposable {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        if kind == Kind::Regular && rank == 0 {
            return Err(Error::ZeroRegular);
        }
        Ok(Indecomposable { kind, rank })
    }

    pub fn preprojective(n: usize) -> Self {
        Indecomposable { kind: Kind::Preprojective, rank: n }
    }

    /// # Panics
    /// If `n == 0`.
    pub fn regular(n: usize) -> Self {
        Self::new(Kind::Regular, n).expect("R_0 is not an indecomposable")
    }

    pub fn preinjective(n: usize) -> Self {
        Indecomposable { kind: Kind::Preinjective, rank: n }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> DimVector {
        let n = self.rank;
        match self.kind {
            Kind::Preprojective => DimVector::new(n, n + 1),
            Kind::Regular => DimVector::new(n, n),
            Kind::Preinjective => DimVector::new(n + 1, n),
        }
    }

    /// Whether the summand is `P_n` or `I_n`, i.e. has no self-extensions.
    pub fn is_rigid(&self) -> bool {
        self.kind != Kind::Regular
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl FromStr for Indecomposable {
    type Err = Error;

    /// Accepts `P3`, `R2`, `I0`, also with an underscore (`R_2`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind: Kind = chars
            .next()
            .ok_or_else(|| Error::Parse("empty indecomposable".into()))?
            .to_string()
            .parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in `{s}`")))?;
        Indecomposable::new(kind, rank)
    }
}

/// dim Hom(M, N) for indecomposables.
pub fn hom_dim_indec(m: Indecomposable, n: Indecomposable) -> usize {
    use Kind::*;
    let (s, l) = (m.rank, n.rank);
    match (m.kind, n.kind) {
        (Preprojective, Preprojective) => (l + 1).saturating_sub(s),
        (Preprojective, Regular) => l,
        (Preprojective, Preinjective) => l + s,
        (Regular, Regular) => s.min(l),
        (Regular, Preinjective) => s,
        (Preinjective, Preinjective) => (s + 1).saturating_sub(l),
        (Regular, Preprojective) | (Preinjective, Preprojective) | (Preinjective, Regular) => 0,
    }
}

/// A formal direct sum of indecomposables. The empty sum is the zero representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RepDescriptor {
    summands: Vec<Indecomposable>,
}

impl RepDescriptor {
    pub fn new(mut summands: Vec<Indecomposable>) -> Self {
        summands.sort();
        RepDescriptor { summands }
    }

    pub fn zero() -> Self {
        RepDescriptor::default()
    }

    pub fn summands(&self) -> &[Indecomposable] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dim(&self) -> DimVector {
        self.summands
            .iter()
            .fold(DimVector::ZERO, |acc, s| acc + s.dim())
    }

    pub fn direct_sum(&self, other: &RepDescriptor) -> RepDescriptor {
        let mut all = self.summands.clone();
        all.extend_from_slice(&other.summands);
        RepDescriptor::new(all)
    }

    fn regular_summands(&self) -> impl Iterator<Item = &Indecomposable> {
        self.summands.iter().filter(|s| s.kind == Kind::Regular)
    }
}

impl From<Indecomposable> for RepDescriptor {
    fn from(m: Indecomposable) -> Self {
        RepDescriptor { summands: vec![m] }
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for RepDescriptor {
    type Err = Error;

    /// `P1+R2+I0`; `0` or the empty string is the zero representation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(RepDescriptor::zero());
        }
        let summands = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<Indecomposable>>>()?;
        Ok(RepDescriptor::new(summands))
    }
}

pub fn hom_dim(m: &RepDescriptor, n: &RepDescriptor) -> usize {
    m.summands
        .iter()
        .flat_map(|a| n.summands.iter().map(move |b| hom_dim_indec(*a, *b)))
        .sum()
}

/// dim Ext¹(M, N) = dim Hom(M, N) - <dim M, dim N>.
pub fn ext_dim(m: &RepDescriptor, n: &RepDescriptor) -> usize {
    let ext = hom_dim(m, n) as i64 - euler_form(m.dim(), n.dim());
    assert!(ext >= 0, "negative Ext dimension for {m} and {n}");
    ext as usize
}

/// `K_N = min(r, r')` for `N = P ⊕ R_r` and `R_n/N = R_{r'} ⊕ I`.
pub fn k_invariant(sub: &RepDescriptor, quotient: &RepDescriptor) -> Result<usize> {
    let regular_rank = |d: &RepDescriptor, allowed: Kind, role: &str| -> Result<usize> {
        if let Some(bad) = d
            .summands
            .iter()
            .find(|s| s.kind != Kind::Regular && s.kind != allowed)
        {
            return Err(Error::InvalidDescriptor(format!(
                "{role} {d} has summand {bad} of the wrong family"
            )));
        }
        let regs: Vec<_> = d.regular_summands().collect();
        match regs.as_slice() {
            [] => Ok(0),
            [r] => Ok(r.rank),
            _ => Err(Error::InvalidDescriptor(format!(
                "{role} {d} has more than one regular summand"
            ))),
        }
    };
    let r = regular_rank(sub, Kind::Preprojective, "subrepresentation")?;
    let r_prime = regular_rank(quotient, Kind::Preinjective, "quotient")?;
    Ok(r.min(r_prime))
}

/// Tangent space dimension `<e, nδ - e> + K` at a point of `Gr_e(R_n)`.
pub fn tangent_dim(n: usize, e: DimVector, k: usize) -> Result<usize> {
    if !e.fits_in(DimVector::delta(n)) {
        return Err(Error::OutOfRange {
            e: (e.d1, e.d2),
            context: format!("R_{n}"),
        });
    }
    if e.d1 > e.d2 {
        return Err(Error::EmptyVariety(format!("Gr_{e}(R_{n})")));
    }
    let base = euler_form(e, DimVector::delta(n).checked_sub(e)?);
    Ok(base as usize + k)
}
