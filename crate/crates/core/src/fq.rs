//! Point counts of `Gr_e(M)` over a prime field by explicit enumeration of
//! subspaces in reduced row-echelon form.
//!
//! Bounds: ambient dimensions up to 6, and `q <= 3` once a dimension reaches 5.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kron::{DimVector, Indecomposable, Kind};

pub const MAX_DIM: usize = 6;
const LARGE_DIM: usize = 5;
const LARGE_DIM_MAX_Q: u32 = 3;

fn check_field(q: u32) -> Result<()> {
    if matches!(q, 2 | 3 | 5 | 7) {
        Ok(())
    } else {
        Err(Error::UnsupportedField(q))
    }
}

fn check_bounds(q: u32, dims: &[usize]) -> Result<()> {
    check_field(q)?;
    let top = dims.iter().copied().max().unwrap_or(0);
    if top > MAX_DIM {
        return Err(Error::ResourceBound(format!(
            "ambient dimension {top} exceeds {MAX_DIM}"
        )));
    }
    if top >= LARGE_DIM && q > LARGE_DIM_MAX_Q {
        return Err(Error::ResourceBound(format!(
            "q = {q} with ambient dimension {top} (at most q = {LARGE_DIM_MAX_Q} from dimension {LARGE_DIM})"
        )));
    }
    Ok(())
}

fn inverse(x: u8, q: u8) -> u8 {
    (1..q).find(|y| (x as u32 * *y as u32) % q as u32 == 1).expect("nonzero element of a prime field")
}

/// A subspace of `F_q^n` stored as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Reduce `v` against the echelon basis; the result is zero iff `v` lies in the span.
    fn reduce(&self, v: &mut [u8], q: u8) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = ((*x as u32 + (q - c) as u32 * *r as u32) % q as u32) as u8;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u8], q: u8) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, q);
        w.iter().all(|&x| x == 0)
    }

    /// Span of the given vectors, in canonical echelon form.
    pub fn span(n: usize, vectors: &[Vec<u8>], q: u8) -> Self {
        let mut s = Subspace::zero(n);
        for v in vectors {
            let mut w = v.clone();
            s.reduce(&mut w, q);
            let Some(p) = w.iter().position(|&x| x != 0) else { continue };
            let inv = inverse(w[p], q);
            for x in w.iter_mut() {
                *x = ((*x as u32 * inv as u32) % q as u32) as u8;
            }
            for row in s.rows.iter_mut() {
                let c = row[p];
                if c != 0 {
                    for (x, y) in row.iter_mut().zip(&w) {
                        *x = ((*x as u32 + (q - c) as u32 * *y as u32) % q as u32) as u8;
                    }
                }
            }
            let at = s.pivots.partition_point(|&pp| pp < p);
            s.pivots.insert(at, p);
            s.rows.insert(at, w);
        }
        s
    }
}

/// Every `k`-dimensional subspace of `F_q^n`, each once.
pub fn enumerate_subspaces(q: u32, n: usize, k: usize) -> Result<Vec<Subspace>> {
    check_bounds(q, &[n])?;
    if k > n {
        return Ok(Vec::new());
    }
    Ok(subspaces_unchecked(q as u8, n, k))
}

fn subspaces_unchecked(q: u8, n: usize, k: usize) -> Vec<Subspace> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        // free slots: (row, column) right of the row's pivot and not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| {
                let pivots = &pivots;
                (p + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let total = (q as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u8; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for &(i, c) in &free {
                rows[i][c] = (code % q as usize) as u8;
                code /= q as usize;
            }
            out.push(Subspace { n, rows, pivots: pivots.clone() });
        }
    }
    out
}

/// A Kronecker representation over `F_q`: two `d2 × d1` matrices, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrixRep {
    q: u32,
    d: DimVector,
    a_cols: Vec<Vec<u8>>,
    b_cols: Vec<Vec<u8>>,
}

impl FqMatrixRep {
    /// `m_a` and `m_b` given as `d2` rows of length `d1`.
    pub fn new(q: u32, d: DimVector, m_a: Vec<Vec<u8>>, m_b: Vec<Vec<u8>>) -> Result<Self> {
        check_field(q)?;
        let shaped = |m: &Vec<Vec<u8>>| m.len() == d.d2 && m.iter().all(|r| r.len() == d.d1);
        if !shaped(&m_a) || !shaped(&m_b) {
            return Err(Error::InvalidDescriptor(format!("matrices must be {} x {}", d.d2, d.d1)));
        }
        let cols = |m: &Vec<Vec<u8>>| {
            (0..d.d1)
                .map(|j| (0..d.d2).map(|i| m[i][j] % q as u8).collect())
                .collect()
        };
        Ok(FqMatrixRep { q, d, a_cols: cols(&m_a), b_cols: cols(&m_b) })
    }

    /// The standard matrices: for `R_n`, `a = 1` and `b` the shift `v_k ↦ v_{k+1}`;
    /// for `P_n`, `a` and `b` embed `k^n` as the first and last `n` coordinates of
    /// `k^{n+1}`; for `I_n` they are the transposes, `a` dropping the first and
    /// `b` the last coordinate.
    pub fn from_indecomposable(m: Indecomposable, q: u32) -> Result<Self> {
        let d = m.dim();
        let mut a = vec![vec![0u8; d.d1]; d.d2];
        let mut b = vec![vec![0u8; d.d1]; d.d2];
        let n = m.rank();
        match m.kind() {
            Kind::Regular => {
                for k in 0..n {
                    a[k][k] = 1;
                    if k + 1 < n {
                        b[k + 1][k] = 1;
                    }
                }
            }
            Kind::Preprojective => {
                for k in 0..n {
                    a[k][k] = 1;
                    b[k + 1][k] = 1;
                }
            }
            Kind::Preinjective => {
                for k in 0..=n {
                    if k >= 1 {
                        a[k - 1][k] = 1;
                    }
                    if k < n {
                        b[k][k] = 1;
                    }
                }
            }
        }
        FqMatrixRep::new(q, d, a, b)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn dim(&self) -> DimVector {
        self.d
    }

    /// `span(m_a N1 + m_b N1)`.
    fn image(&self, n1: &Subspace) -> Subspace {
        let q = self.q as u8;
        let apply = |cols: &Vec<Vec<u8>>, v: &Vec<u8>| {
            let mut out = vec![0u8; self.d.d2];
            for (c, &x) in cols.iter().zip(v) {
                for (o, y) in out.iter_mut().zip(c) {
                    *o = ((*o as u32 + x as u32 * *y as u32) % q as u32) as u8;
                }
            }
            out
        };
        let vectors: Vec<Vec<u8>> = n1
            .rows
            .iter()
            .flat_map(|v| [apply(&self.a_cols, v), apply(&self.b_cols, v)])
            .collect();
        Subspace::span(self.d.d2, &vectors, q)
    }
}

/// `#{(N1, N2) : dim N_i = e_i, m_a N1 ⊆ N2, m_b N1 ⊆ N2}`.
///
/// For each `N1` the admissible `N2` are the `e2`-subspaces containing the image
/// `W`; these correspond to `(e2 - dim W)`-subspaces of `F_q^{d2} / W`, which are
/// enumerated (once per `dim W`) rather than counted by formula.
pub fn count_points(rep: &FqMatrixRep, e: DimVector) -> Result<BigUint> {
    let d = rep.d;
    check_bounds(rep.q, &[d.d1, d.d2])?;
    if !e.fits_in(d) {
        return Ok(BigUint::from(0u32));
    }
    let q = rep.q as u8;
    let image_dims: HashMap<usize, u64> = subspaces_unchecked(q, d.d1, e.d1)
        .par_iter()
        .map(|n1| rep.image(n1).dim())
        .fold(HashMap::new, |mut acc, w| {
            *acc.entry(w).or_insert(0u64) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut total = BigUint::from(0u32);
    for (w, count) in image_dims {
        if w > e.d2 {
            continue;
        }
        let above = subspaces_unchecked(q, d.d2 - w, e.d2 - w).len() as u64;
        total += BigUint::from(count) * BigUint::from(above);
    }
    Ok(total)
}

/// The same count by testing every pair `(N1, N2)` directly.
pub fn count_points_naive(rep: &FqMatrixRep, e: DimVector) -> Result<BigUint> {
    let d = rep.d;
    check_bounds(rep.q, &[d.d1, d.d2])?;
    if !e.fits_in(d) {
        return Ok(BigUint::from(0u32));
    }
    let q = rep.q as u8;
    let n2s = subspaces_unchecked(q, d.d2, e.d2);
    let count: u64 = subspaces_unchecked(q, d.d1, e.d1)
        .par_iter()
        .map(|n1| {
            let w = rep.image(n1);
            n2s.iter()
                .filter(|n2| w.rows.iter().all(|v| n2.contains(v, q)))
                .count() as u64
        })
        .sum();
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(a: usize, b: usize) -> DimVector {
        DimVector::new(a, b)
    }

    fn count(m: Indecomposable, e: DimVector, q: u32) -> u64 {
        let rep = FqMatrixRep::from_indecomposable(m, q).unwrap();
        count_points(&rep, e).unwrap().try_into().unwrap()
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(enumerate_subspaces(2, 2, 1).unwrap().len(), 3);
        assert_eq!(enumerate_subspaces(3, 3, 1).unwrap().len(), 13);
        for q in [2, 3, 5, 7] {
            assert_eq!(enumerate_subspaces(q, 4, 0).unwrap().len(), 1);
        }
        assert_eq!(enumerate_subspaces(2, 3, 4).unwrap().len(), 0);
    }

    #[test]
    fn subspaces_are_distinct_and_echelon() {
        let subs = enumerate_subspaces(3, 4, 2).unwrap();
        let spans: std::collections::HashSet<_> = subs
            .iter()
            .map(|s| Subspace::span(4, s.rows(), 3))
            .collect();
        assert_eq!(spans.len(), subs.len());
        for s in &subs {
            assert_eq!(&Subspace::span(4, s.rows(), 3), s);
        }
    }

    #[test]
    fn bounds() {
        assert!(matches!(enumerate_subspaces(4, 2, 1), Err(Error::UnsupportedField(4))));
        assert!(matches!(enumerate_subspaces(2, 7, 1), Err(Error::ResourceBound(_))));
        assert!(matches!(enumerate_subspaces(5, 5, 1), Err(Error::ResourceBound(_))));
        let rep = FqMatrixRep::from_indecomposable(Indecomposable::regular(6), 5).unwrap();
        assert!(matches!(count_points(&rep, dv(3, 3)), Err(Error::ResourceBound(_))));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(Indecomposable::regular(2), dv(1, 1), 2), 1);
        assert_eq!(count(Indecomposable::regular(3), dv(1, 2), 2), 9);
        for n in 1..=4usize {
            for q in [2u32, 3] {
                let expected = (q.pow(n as u32) - 1) / (q - 1);
                assert_eq!(count(Indecomposable::regular(n), dv(0, 1), q), expected as u64);
            }
        }
    }

    #[test]
    fn quotient_shortcut_matches_pairs() {
        for n in 0..=3 {
            for m in [
                Indecomposable::preprojective(n),
                Indecomposable::preinjective(n),
                Indecomposable::regular(n.max(1)),
            ] {
                let rep = FqMatrixRep::from_indecomposable(m, 2).unwrap();
                for e in m.dim().sub_vectors() {
                    assert_eq!(count_points(&rep, e).unwrap(), count_points_naive(&rep, e).unwrap());
                }
            }
        }
    }

    #[test]
    fn representations_satisfy_shape() {
        let rep = FqMatrixRep::from_indecomposable(Indecomposable::preinjective(2), 3).unwrap();
        assert_eq!(rep.dim(), dv(3, 2));
        assert!(FqMatrixRep::new(2, dv(1, 1), vec![vec![1]], vec![vec![1, 0]]).is_err());
    }
}
