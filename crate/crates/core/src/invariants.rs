//! Closed-form invariants of `Gr_e(M)` for Kronecker indecomposables: Poincaré
//! polynomials, Euler characteristics, dimension, the stratification
//! `X_k = {N : K_N >= k}` of `Gr_e(R_n)`, and the duality `e ↦ e*`.
//!
//! Out-of-range dimension vectors give the zero polynomial (empty variety),
//! which keeps the direct-sum convolution free of special cases.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hom::cell_dimension;
use crate::kron::{DimVector, Indecomposable, Kind, RepDescriptor};
use crate::poly::{binomial, gaussian_binomial, GradedPoly};
use crate::quiver::enumerate_fixed_points;

/// A quiver Grassmannian `Gr_e(M)` of an indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassId {
    pub ambient: Indecomposable,
    pub e: DimVector,
}

impl GrassId {
    pub fn new(ambient: Indecomposable, e: DimVector) -> Self {
        GrassId { ambient, e }
    }
}

impl fmt::Display for GrassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr_{}({})", self.e, self.ambient)
    }
}

fn regular_in_range(n: usize, e: DimVector) -> bool {
    e.d1 <= e.d2 && e.d2 <= n
}

/// `P(Gr_e(R_n)) = [e2, e2-e1]_q · [n-e1, e2-e1]_q`. Accepts `n = 0` (the zero
/// representation), which the strata of smaller Grassmannians need.
pub fn poincare_regular(n: usize, e: DimVector) -> GradedPoly {
    if !regular_in_range(n, e) {
        return GradedPoly::zero();
    }
    let m = (e.d2 - e.d1) as i64;
    gaussian_binomial(e.d2 as i64, m) * gaussian_binomial((n - e.d1) as i64, m)
}

pub fn poincare(id: &GrassId) -> GradedPoly {
    let (m, e) = (id.ambient, id.e);
    let n = m.rank() as i64;
    let (e1, e2) = (e.d1 as i64, e.d2 as i64);
    match m.kind() {
        Kind::Regular => poincare_regular(m.rank(), e),
        _ if !e.fits_in(m.dim()) => GradedPoly::zero(),
        // the whole module; for I_n the product formula degenerates here
        _ if e == m.dim() => GradedPoly::one(),
        Kind::Preprojective => {
            gaussian_binomial(e2 - 1, e1) * gaussian_binomial(n + 1 - e1, e2 - e1)
        }
        Kind::Preinjective => gaussian_binomial(e2 + 1, e1) * gaussian_binomial(n - e1, e2 - e1),
    }
}

pub fn euler_char_regular(n: usize, e: DimVector) -> u64 {
    if !regular_in_range(n, e) {
        return 0;
    }
    let (e1, e2, n) = (e.d1 as i64, e.d2 as i64, n as i64);
    binomial(e2, e1) * binomial(n - e1, e2 - e1)
}

/// Euler characteristic from the binomial product formulas.
pub fn euler_char(id: &GrassId) -> u64 {
    let (m, e) = (id.ambient, id.e);
    let n = m.rank() as i64;
    let (e1, e2) = (e.d1 as i64, e.d2 as i64);
    match m.kind() {
        Kind::Regular => euler_char_regular(m.rank(), e),
        _ if !e.fits_in(m.dim()) => 0,
        _ if e == m.dim() => 1,
        Kind::Preprojective => binomial(e2 - 1, e1) * binomial(n + 1 - e1, e2 - e1),
        Kind::Preinjective => binomial(e2 + 1, e1) * binomial(n - e1, e2 - e1),
    }
}

/// Table of `χ(Gr_f(M))` for every `f <= dim M`, built by convolving summands.
pub fn euler_char_table(m: &RepDescriptor) -> BTreeMap<DimVector, u64> {
    let mut table = BTreeMap::from([(DimVector::ZERO, 1u64)]);
    let mut total = DimVector::ZERO;
    for &s in m.summands() {
        let sd = s.dim();
        let next_total = total + sd;
        let mut next = BTreeMap::new();
        for f in next_total.sub_vectors() {
            let mut acc = 0u64;
            for g in f.sub_vectors().filter(|g| g.fits_in(total)) {
                let Ok(rest) = f.checked_sub(g) else { continue };
                if !rest.fits_in(sd) {
                    continue;
                }
                acc += table[&g] * euler_char(&GrassId::new(s, rest));
            }
            next.insert(f, acc);
        }
        table = next;
        total = next_total;
    }
    table
}

/// `χ(Gr_e(M))` for a direct sum, by convolution over splittings of `e`.
pub fn euler_char_sum(m: &RepDescriptor, e: DimVector) -> u64 {
    euler_char_table(m).get(&e).copied().unwrap_or(0)
}

/// `dim Gr_e(R_n) = (e2 - e1)(n - (e2 - e1))`.
pub fn dimension(n: usize, e: DimVector) -> Result<usize> {
    if !regular_in_range(n, e) {
        return Err(Error::EmptyVariety(format!("Gr_{e}(R_{n})")));
    }
    let m = e.d2 - e.d1;
    Ok(m * (n - m))
}

/// `X_k ≅ Gr_{(e1-k, e2-k)}(R_{n-2k})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stratum {
    pub k: usize,
    pub n: usize,
    pub e: DimVector,
}

impl Stratum {
    pub fn euler_char(&self) -> u64 {
        euler_char_regular(self.n, self.e)
    }

    pub fn poincare(&self) -> GradedPoly {
        poincare_regular(self.n, self.e)
    }
}

/// The closed strata `X_0 ⊇ X_1 ⊇ … ⊇ X_s`, `s = min(e1, n - e2)`. Empty for
/// an empty variety.
pub fn strata(n: usize, e: DimVector) -> Vec<Stratum> {
    if !regular_in_range(n, e) {
        return Vec::new();
    }
    let s = e.d1.min(n - e.d2);
    (0..=s)
        .map(|k| Stratum {
            k,
            n: n - 2 * k,
            e: DimVector::new(e.d1 - k, e.d2 - k),
        })
        .collect()
}

fn closed_stratum_euler(n: usize, e: DimVector, k: usize) -> u64 {
    strata(n, e).get(k).map_or(0, Stratum::euler_char)
}

/// `χ` of the locus where `dim Ext¹(N, R_n/N) = k` exactly, i.e. `X_k \ X_{k+1}`.
pub fn stratum_euler_exact(n: usize, e: DimVector, k: usize) -> u64 {
    let inner = closed_stratum_euler(n, e, k);
    let outer = closed_stratum_euler(n, e, k + 1);
    inner
        .checked_sub(outer)
        .expect("strata are nested, so their Euler characteristics decrease")
}

/// `χ` of the smooth locus `X_0 \ X_1`.
pub fn smooth_part_euler(n: usize, e: DimVector) -> u64 {
    stratum_euler_exact(n, e, 0)
}

pub fn dual_e(n: usize, e: DimVector) -> Result<DimVector> {
    e.dual(n)
}

/// Even Betti numbers of `Gr_{(e1, e1+1)}(R_n)` from the piecewise formula:
/// `i+1` rising, a plateau of height `s+1`, then `n-i` falling, with
/// `s = min(e1, n-1-e1)`.
pub fn betti_special(n: usize, e1: usize) -> Result<GradedPoly> {
    if e1 + 1 > n {
        return Err(Error::OutOfRange {
            e: (e1, e1 + 1),
            context: format!("R_{n}"),
        });
    }
    let s = e1.min(n - 1 - e1);
    let coeffs = (0..n)
        .map(|i| {
            if i <= s {
                i as u64 + 1
            } else if i <= n - 1 - s {
                s as u64 + 1
            } else {
                (n - i) as u64
            }
        })
        .collect();
    Ok(GradedPoly::from_coeffs(coeffs))
}

/// `Σ_L q^{dim X_L}` over the torus-fixed points, with cells from `Hom(L, M/L)⁺`.
pub fn poincare_from_cells(m: Indecomposable, e: DimVector) -> Result<GradedPoly> {
    let dims = enumerate_fixed_points(m, e)
        .iter()
        .map(|fp| cell_dimension(m, fp))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedPoly::from_cells(dims))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(a: usize, b: usize) -> DimVector {
        DimVector::new(a, b)
    }

    fn reg(n: usize, e: DimVector) -> GrassId {
        GrassId::new(Indecomposable::regular(n), e)
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare(&reg(3, dv(1, 2))).coeffs(), &[1, 2, 1]);
        for n in 1..8 {
            for e2 in 0..=n {
                assert_eq!(
                    poincare(&reg(n, dv(0, e2))),
                    gaussian_binomial(n as i64, e2 as i64)
                );
            }
        }
        let p1 = GrassId::new(Indecomposable::preprojective(1), dv(1, 2));
        assert_eq!(poincare(&p1), GradedPoly::one());
        assert!(poincare(&reg(3, dv(2, 1))).is_zero());
        assert!(poincare(&reg(3, dv(1, 4))).is_zero());
    }

    #[test]
    fn betti_special_examples() {
        assert_eq!(betti_special(3, 1).unwrap().coeffs(), &[1, 2, 1]);
        assert_eq!(betti_special(5, 2).unwrap().coeffs(), &[1, 2, 3, 2, 1]);
        assert_eq!(
            betti_special(5, 2).unwrap(),
            gaussian_binomial(3, 1) * gaussian_binomial(3, 1)
        );
        assert_eq!(betti_special(2, 0).unwrap().coeffs(), &[1, 1]);
        assert!(betti_special(3, 3).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&reg(3, dv(1, 2))), 4);
        for n in 1..6 {
            assert_eq!(euler_char(&reg(n, dv(n, n))), 1);
        }
        let i0 = GrassId::new(Indecomposable::preinjective(0), dv(1, 0));
        assert_eq!(euler_char(&i0), 1);
    }

    #[test]
    fn euler_sum_examples() {
        let m: RepDescriptor = "P0+P0".parse().unwrap();
        assert_eq!(euler_char_sum(&m, dv(0, 1)), 2);
        let m: RepDescriptor = "R1+R1".parse().unwrap();
        assert_eq!(euler_char_sum(&m, dv(1, 1)), 2);
        for s in ["0", "P2", "R1+I3", "P0+R2+I1"] {
            let m: RepDescriptor = s.parse().unwrap();
            assert_eq!(euler_char_sum(&m, dv(0, 0)), 1);
        }
        for n in 0..5 {
            for m in [Indecomposable::preprojective(n), Indecomposable::preinjective(n)] {
                for e in m.dim().sub_vectors() {
                    assert_eq!(euler_char_sum(&m.into(), e), euler_char(&GrassId::new(m, e)));
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(3, dv(1, 2)).unwrap(), 2);
        assert_eq!(dimension(5, dv(5, 5)).unwrap(), 0);
        assert_eq!(dimension(4, dv(1, 3)).unwrap(), 4);
        assert_eq!(
            poincare(&reg(4, dv(1, 3))).degree(),
            Some(4)
        );
        assert!(dimension(3, dv(2, 1)).is_err());
    }

    #[test]
    fn strata_examples() {
        assert_eq!(
            strata(2, dv(1, 1)),
            vec![
                Stratum { k: 0, n: 2, e: dv(1, 1) },
                Stratum { k: 1, n: 0, e: dv(0, 0) },
            ]
        );
        assert_eq!(strata(5, dv(0, 3)).len(), 1);
        assert_eq!(strata(4, dv(2, 2)).len(), 3);
        assert!(strata(2, dv(2, 1)).is_empty());
    }

    #[test]
    fn smooth_and_exact_strata() {
        assert_eq!(smooth_part_euler(2, dv(1, 1)), 0);
        assert_eq!(smooth_part_euler(2, dv(0, 1)), 2);
        assert_eq!(smooth_part_euler(1, dv(1, 1)), 1);
        assert_eq!(stratum_euler_exact(2, dv(1, 1), 1), 1);
        assert_eq!(stratum_euler_exact(2, dv(1, 1), 0), 0);
        assert_eq!(stratum_euler_exact(4, dv(2, 2), 7), 0);
    }

    #[test]
    fn duality_values() {
        assert_eq!(dual_e(3, dv(1, 2)).unwrap(), dv(1, 2));
        assert_eq!(dual_e(4, dv(1, 2)).unwrap(), dv(2, 3));
        assert!(dual_e(2, dv(3, 1)).is_err());
        for n in 0..6 {
            for e in DimVector::delta(n).sub_vectors() {
                assert_eq!(dual_e(n, dual_e(n, e).unwrap()).unwrap(), e);
            }
        }
    }
}
