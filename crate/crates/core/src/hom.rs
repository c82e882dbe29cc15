//! Standard bases of Hom spaces between string modules, torus weights of the
//! basis elements, and attracting-cell dimensions of fixed points.
//!
//! A basis element is a triple `(γ, α, γ')`: `γ` a connected
//! predecessor-closed subquiver of a component of the source, `γ'` a
//! successor-closed subquiver of a component of the target, and `α` a
//! label-preserving isomorphism `γ → γ'`. Its weight is the (constant)
//! difference `weight(α(v)) - weight(v)`. With the weight conventions of
//! [`crate::quiver`], positive weight means the one-parameter deformation
//! `t_λ f = λ^w f` contracts to zero as `λ → 0`, so the tangent space of the
//! attracting cell at `L` is `Hom(L, M/L)⁺`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::kron::{euler_form, Indecomposable, Kind};
use crate::quiver::{quotient_quiver, sub_quiver, CoeffQuiver, FixedPoint, PlacedSummand, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBasisElement {
    pub gamma: BTreeSet<VertexId>,
    pub gamma_prime: BTreeSet<VertexId>,
    /// `(v, α(v))` for every `v ∈ γ`.
    pub mapping: Vec<(VertexId, VertexId)>,
    pub weight: i64,
}

/// Connected intervals of each string, as vertex paths.
fn intervals(paths: &[Vec<VertexId>]) -> Vec<&[VertexId]> {
    paths
        .iter()
        .flat_map(|p| (0..p.len()).flat_map(move |i| (i + 1..=p.len()).map(move |j| &p[i..j])))
        .collect()
}

fn try_align(
    l: &CoeffQuiver,
    lp: &CoeffQuiver,
    gamma: &[VertexId],
    image: &[VertexId],
) -> bool {
    if gamma.iter().zip(image).any(|(u, v)| u.layer != v.layer) {
        return false;
    }
    gamma.windows(2).zip(image.windows(2)).all(|(g, h)| {
        match (l.arrow_between(g[0], g[1]), lp.arrow_between(h[0], h[1])) {
            (Some(a), Some(b)) => {
                a.label == b.label
                    && (a.source == g[0]) == (b.source == h[0])
            }
            _ => false,
        }
    })
}

pub fn hom_standard_basis(l: &CoeffQuiver, lp: &CoeffQuiver) -> Result<Vec<HomBasisElement>> {
    let l_paths = l.strings()?;
    let lp_paths = lp.strings()?;
    let sources: Vec<&[VertexId]> = intervals(&l_paths)
        .into_iter()
        .filter(|g| l.is_predecessor_closed(&g.iter().copied().collect()))
        .collect();
    let targets: Vec<&[VertexId]> = intervals(&lp_paths)
        .into_iter()
        .filter(|g| lp.is_successor_closed(&g.iter().copied().collect()))
        .collect();

    let mut out = Vec::new();
    for gamma in &sources {
        for target in targets.iter().filter(|t| t.len() == gamma.len()) {
            let reversed: Vec<VertexId> = target.iter().rev().copied().collect();
            let mut candidates = vec![target.to_vec()];
            if gamma.len() > 1 {
                candidates.push(reversed);
            }
            for image in candidates {
                if !try_align(l, lp, gamma, &image) {
                    continue;
                }
                let mapping: Vec<(VertexId, VertexId)> =
                    gamma.iter().copied().zip(image.iter().copied()).collect();
                let weights: BTreeSet<i64> = mapping
                    .iter()
                    .map(|(u, v)| lp.weight(*v).unwrap() - l.weight(*u).unwrap())
                    .collect();
                if weights.len() != 1 {
                    return Err(Error::MalformedQuiver(format!(
                        "weights are not aligned along {:?}",
                        mapping
                    )));
                }
                out.push(HomBasisElement {
                    gamma: gamma.iter().copied().collect(),
                    gamma_prime: image.iter().copied().collect(),
                    mapping,
                    weight: *weights.first().unwrap(),
                });
            }
        }
    }
    Ok(out)
}

/// Number of standard basis elements of strictly positive weight.
pub fn hom_plus_dim(l: &CoeffQuiver, lp: &CoeffQuiver) -> Result<usize> {
    Ok(hom_standard_basis(l, lp)?
        .iter()
        .filter(|f| f.weight > 0)
        .count())
}

/// Dimension of the attracting cell of `l`, as `dim Hom(L, M/L)⁺`.
pub fn cell_dimension(m: Indecomposable, l: &FixedPoint) -> Result<usize> {
    let quotient = quotient_quiver(m, l)?;
    hom_plus_dim(&sub_quiver(m, l), &quotient)
}

/// Dimension of the attracting cell of a fixed point of `Gr_e(R_n)` from its
/// summands, folding `dim X_{L'⊕L''} = dim X_{L'} + dim X_{L''} - <dim L', dim L''>`
/// left to right over summands sorted by position.
pub fn cell_dimension_recursive(n: usize, summands: &[PlacedSummand]) -> Result<usize> {
    if summands.windows(2).any(|w| w[0].position >= w[1].position) {
        return Err(Error::InvalidSummands(
            "summands must be sorted by strictly increasing position".into(),
        ));
    }
    let ambient = crate::quiver::build_coeff_quiver(Indecomposable::regular(n.max(1)));
    let mut acc: BTreeSet<VertexId> = BTreeSet::new();
    let mut total: i64 = 0;
    for s in summands {
        let verts = s.vertices_in_regular(n)?;
        if !acc.is_disjoint(&verts) {
            return Err(Error::InvalidSummands(format!("{s} overlaps an earlier summand")));
        }
        let base = match s.shape.kind() {
            Kind::Preprojective => (n - s.position) as i64,
            Kind::Regular => 0,
            Kind::Preinjective => unreachable!("rejected by vertices_in_regular"),
        };
        if acc.is_empty() {
            total = base;
        } else {
            let lower = ambient.induced(&acc);
            let upper = ambient.induced(&verts);
            let basis = hom_standard_basis(&lower, &upper)?;
            if basis.iter().any(|f| f.weight <= 0) {
                return Err(Error::InvalidSummands(format!(
                    "Hom(L', {s}) has a basis element of non-positive weight"
                )));
            }
            total += base - euler_form(lower.dim(), upper.dim());
        }
        acc.extend(verts);
    }
    debug_assert!(total >= 0);
    Ok(total as usize)
}
