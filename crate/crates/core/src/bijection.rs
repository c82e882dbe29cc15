//! Matching of cells between the preprojective locus of `Gr_e(R_n)` and the
//! product `(Gr_m(e2) \ Gr_m(e2-1)) × Gr_m(n-e1)`, `m = e2 - e1`.
//!
//! Fixed points on the left are sums `ₖ₁(P_r₁) ⊕ … ⊕ ₖₘ(P_rₘ)`; on the right
//! they are pairs of coordinate subspaces `(a₁ < … < aₘ)` of `k^{n-e1}` and
//! `(1 < b₂ < … < bₘ)` of `k^{e2}`.

use crate::error::{Error, Result};
use crate::kron::{DimVector, Indecomposable};
use crate::quiver::PlacedSummand;

/// Positions `k_i` and ranks `r_i` of the preprojective summands of a fixed point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaIndex {
    pub k: Vec<usize>,
    pub r: Vec<usize>,
}

/// Coordinate indices `a₁..aₘ` and `b₂..bₘ` (`b₁ = 1` is implicit).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaIndex {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

fn summand_count(n: usize, e: DimVector) -> Result<usize> {
    if e.d1 >= e.d2 || e.d2 > n {
        return Err(Error::ConstraintViolation(format!(
            "need e1 < e2 <= n, got e = {e}, n = {n}"
        )));
    }
    Ok(e.d2 - e.d1)
}

impl AlphaIndex {
    pub fn validate(&self, n: usize, e: DimVector) -> Result<()> {
        let m = summand_count(n, e)?;
        let bad = |msg: String| Err(Error::ConstraintViolation(msg));
        if self.k.len() != m || self.r.len() != m {
            return bad(format!("expected {m} positions and ranks"));
        }
        if self.r.iter().sum::<usize>() != e.d1 {
            return bad(format!("ranks must sum to {}", e.d1));
        }
        let mut floor = 1;
        for (&k, &r) in self.k.iter().zip(&self.r) {
            if k < floor || k + r > n {
                return bad(format!("summand at {k} of rank {r} does not fit"));
            }
            floor = k + r + 1;
        }
        Ok(())
    }

    /// The closed-form attracting cell dimension
    /// `n·m - Σk_i - m² + Σ_i Σ_{j<=i} (r_j - r_i + 1)`.
    pub fn cell_dimension(&self, n: usize) -> i64 {
        let m = self.k.len() as i64;
        let r: Vec<i64> = self.r.iter().map(|&x| x as i64).collect();
        let pairs: i64 = (0..r.len())
            .map(|i| (0..=i).map(|j| r[j] - r[i] + 1).sum::<i64>())
            .sum();
        n as i64 * m - self.k.iter().sum::<usize>() as i64 - m * m + pairs
    }

    pub fn summands(&self) -> Vec<PlacedSummand> {
        self.k
            .iter()
            .zip(&self.r)
            .map(|(&position, &r)| PlacedSummand {
                shape: Indecomposable::preprojective(r),
                position,
            })
            .collect()
    }
}

impl BetaIndex {
    pub fn validate(&self, n: usize, e: DimVector) -> Result<()> {
        let m = summand_count(n, e)?;
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        let ok = self.a.len() == m
            && self.b.len() == m - 1
            && increasing(&self.a)
            && increasing(&self.b)
            && self.a.first().is_some_and(|&a| a >= 1)
            && self.a.last().is_some_and(|&a| a <= n - e.d1)
            && self.b.first().map_or(true, |&b| b >= 2)
            && self.b.last().map_or(true, |&b| b <= e.d2);
        if ok {
            Ok(())
        } else {
            Err(Error::ConstraintViolation(format!("{self:?} for n = {n}, e = {e}")))
        }
    }

    /// `n·m - Σa_i - Σb_i + (m - 1)`.
    pub fn cell_dimension(&self, n: usize) -> i64 {
        let m = self.a.len() as i64;
        n as i64 * m - self.a.iter().sum::<usize>() as i64 - self.b.iter().sum::<usize>() as i64
            + m
            - 1
    }
}

/// `a_1 = k_1`, `a_i = k_i - (r_1 + … + r_{i-1})`, `b_i = r_m + r_{m-1} + … + r_{m-i+2} + i`.
pub fn alpha_beta_bijection(n: usize, e: DimVector, alpha: &AlphaIndex) -> Result<BetaIndex> {
    alpha.validate(n, e)?;
    let m = alpha.k.len();
    let mut prefix = 0;
    let a = alpha
        .k
        .iter()
        .zip(&alpha.r)
        .map(|(&k, &r)| {
            let ai = k - prefix;
            prefix += r;
            ai
        })
        .collect();
    let b = (2..=m)
        .map(|i| (0..=i - 2).map(|j| alpha.r[m - 1 - j]).sum::<usize>() + i)
        .collect();
    Ok(BetaIndex { a, b })
}

/// Every fixed point of the preprojective locus, in lexicographic order of `(r, k)`.
pub fn alpha_set(n: usize, e: DimVector) -> Result<Vec<AlphaIndex>> {
    let m = summand_count(n, e)?;
    let mut out = Vec::new();
    for r in compositions(e.d1, m) {
        let mut k = Vec::with_capacity(m);
        place(n, &r, 1, &mut k, &mut out);
    }
    Ok(out)
}

fn place(n: usize, r: &[usize], floor: usize, k: &mut Vec<usize>, out: &mut Vec<AlphaIndex>) {
    let i = k.len();
    if i == r.len() {
        out.push(AlphaIndex { k: k.clone(), r: r.to_vec() });
        return;
    }
    for ki in floor..=n.saturating_sub(r[i]) {
        k.push(ki);
        place(n, r, ki + r[i] + 1, k, out);
        k.pop();
    }
}

/// Weak compositions of `total` into `parts` nonnegative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

pub fn beta_set(n: usize, e: DimVector) -> Result<Vec<BetaIndex>> {
    let m = summand_count(n, e)?;
    let mut out = Vec::new();
    for a in increasing_tuples(1, n - e.d1, m) {
        for b in increasing_tuples(2, e.d2, m - 1) {
            out.push(BetaIndex { a: a.clone(), b });
        }
    }
    Ok(out)
}

fn increasing_tuples(lo: usize, hi: usize, len: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    if lo > hi {
        return if len == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (lo..=hi).combinations(len).collect()
}
