//! Coefficient quivers of Kronecker indecomposables and torus-fixed points of
//! their quiver Grassmannians.
//!
//! Conventions (the single source of truth for the rest of the crate):
//!
//! * `R_n`: `a: k⁽¹⁾ → k⁽²⁾` for all `k`, `b: k⁽¹⁾ → (k+1)⁽²⁾` for `k < n`.
//!   The unique regular subrepresentation `R_r` sits on the last `r` indices.
//! * `P_n`: `a: k⁽¹⁾ → k⁽²⁾`, `b: k⁽¹⁾ → (k+1)⁽²⁾`, layer 2 has `n+1` vertices.
//! * `I_n`: `b: k⁽¹⁾ → k⁽²⁾` for `k <= n`, `a: k⁽¹⁾ → (k-1)⁽²⁾` for `k >= 2`.
//!
//! Torus weights are chosen so that `a`-arrows preserve weight and `b`-arrows
//! raise it by one. For `R_n` and `P_n` this is `weight(k⁽ⁱ⁾) = k - 1` on both
//! layers; for `I_n` it is `k - 1` on layer 1 and `k` on layer 2.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::kron::{DimVector, Indecomposable, Kind, RepDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    /// 1 or 2.
    pub layer: u8,
    /// 1-based position inside the layer.
    pub index: usize,
}

impl VertexId {
    pub const fn new(layer: u8, index: usize) -> Self {
        VertexId { layer, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.index, self.layer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub source: VertexId,
    pub target: VertexId,
    pub label: Label,
}

/// A weighted coefficient quiver. Vertices carry the torus weight inherited
/// from the ambient representation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffQuiver {
    vertices: BTreeMap<VertexId, i64>,
    arrows: Vec<Arrow>,
}

impl CoeffQuiver {
    pub fn new(vertices: BTreeMap<VertexId, i64>, mut arrows: Vec<Arrow>) -> Result<Self> {
        for v in vertices.keys() {
            if v.layer != 1 && v.layer != 2 {
                return Err(Error::MalformedQuiver(format!("vertex {v} has no valid layer")));
            }
        }
        for a in &arrows {
            if !vertices.contains_key(&a.source) || !vertices.contains_key(&a.target) {
                return Err(Error::MalformedQuiver(format!(
                    "arrow {} -> {} has a missing endpoint",
                    a.source, a.target
                )));
            }
            if a.source.layer != 1 || a.target.layer != 2 {
                return Err(Error::MalformedQuiver(format!(
                    "arrow {} -> {} does not go from layer 1 to layer 2",
                    a.source, a.target
                )));
            }
        }
        arrows.sort();
        arrows.dedup();
        Ok(CoeffQuiver { vertices, arrows })
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn weight(&self, v: VertexId) -> Option<i64> {
        self.vertices.get(&v).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> DimVector {
        let d1 = self.vertices.keys().filter(|v| v.layer == 1).count();
        DimVector::new(d1, self.vertices.len() - d1)
    }

    /// The full subquiver on `keep`, weights inherited.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> CoeffQuiver {
        let vertices = self
            .vertices
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(v, w)| (*v, *w))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|a| keep.contains(&a.source) && keep.contains(&a.target))
            .copied()
            .collect();
        CoeffQuiver { vertices, arrows }
    }

    pub fn is_successor_closed(&self, set: &BTreeSet<VertexId>) -> bool {
        self.arrows
            .iter()
            .all(|a| !set.contains(&a.source) || set.contains(&a.target))
    }

    pub fn is_predecessor_closed(&self, set: &BTreeSet<VertexId>) -> bool {
        self.arrows
            .iter()
            .all(|a| !set.contains(&a.target) || set.contains(&a.source))
    }

    fn neighbours(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.keys().map(|v| (*v, Vec::new())).collect();
        for a in &self.arrows {
            adj.get_mut(&a.source).unwrap().push(a.target);
            adj.get_mut(&a.target).unwrap().push(a.source);
        }
        adj
    }

    /// Connected components as sorted vertex sets, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let adj = self.neighbours();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.vertices.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Each component as a path of vertices, starting from its smallest endpoint.
    ///
    /// Fails unless every component is a string with Kronecker labelling: at
    /// most one `a` and one `b` arrow leaving or entering any vertex.
    pub fn strings(&self) -> Result<Vec<Vec<VertexId>>> {
        let mut out_labels: BTreeMap<(VertexId, Label), usize> = BTreeMap::new();
        let mut in_labels: BTreeMap<(VertexId, Label), usize> = BTreeMap::new();
        for a in &self.arrows {
            *out_labels.entry((a.source, a.label)).or_default() += 1;
            *in_labels.entry((a.target, a.label)).or_default() += 1;
        }
        if let Some(((v, l), _)) = out_labels
            .iter()
            .chain(in_labels.iter())
            .find(|(_, c)| **c > 1)
        {
            return Err(Error::MalformedQuiver(format!(
                "vertex {v} has repeated {l:?}-arrows"
            )));
        }
        let adj = self.neighbours();
        let mut paths = Vec::new();
        for comp in self.components() {
            let edges = self
                .arrows
                .iter()
                .filter(|a| comp.contains(&a.source))
                .count();
            if edges + 1 != comp.len() || comp.iter().any(|v| adj[v].len() > 2) {
                return Err(Error::MalformedQuiver(format!(
                    "component starting at {} is not a string",
                    comp.first().unwrap()
                )));
            }
            let start = *comp.iter().find(|v| adj[*v].len() <= 1).unwrap();
            let mut path = vec![start];
            let mut prev: Option<VertexId> = None;
            let mut cur = start;
            while let Some(&next) = adj[&cur].iter().find(|w| Some(**w) != prev) {
                path.push(next);
                prev = Some(cur);
                cur = next;
            }
            paths.push(path);
        }
        Ok(paths)
    }

    pub fn arrow_between(&self, u: VertexId, v: VertexId) -> Option<Arrow> {
        self.arrows
            .iter()
            .find(|a| (a.source == u && a.target == v) || (a.source == v && a.target == u))
            .copied()
    }

    /// Isomorphism type of a string component of this quiver.
    pub fn component_shape(&self, comp: &BTreeSet<VertexId>) -> Result<Indecomposable> {
        let c1 = comp.iter().filter(|v| v.layer == 1).count();
        let c2 = comp.len() - c1;
        if c2 == c1 + 1 {
            return Ok(Indecomposable::preprojective(c1));
        }
        if c1 == c2 + 1 {
            return Ok(Indecomposable::preinjective(c2));
        }
        if c1 == c2 && c1 > 0 {
            // a-ended strings sit in the tube at 0, b-ended ones at infinity;
            // the descriptor does not record the tube.
            return Ok(Indecomposable::regular(c1));
        }
        Err(Error::MalformedQuiver(format!(
            "component with dimension ({c1},{c2}) is not a string module"
        )))
    }

    /// Indecomposable summands with positions (leftmost layer-2 index, or the
    /// layer-1 index for a lone `I_0`).
    pub fn decompose(&self) -> Result<Vec<PlacedSummand>> {
        self.strings()?;
        let mut out = self
            .components()
            .iter()
            .map(|comp| {
                let shape = self.component_shape(comp)?;
                let position = comp
                    .iter()
                    .filter(|v| v.layer == 2)
                    .map(|v| v.index)
                    .min()
                    .unwrap_or_else(|| comp.first().unwrap().index);
                Ok(PlacedSummand { shape, position })
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_by_key(|s| (s.position, s.shape));
        Ok(out)
    }

    pub fn descriptor(&self) -> Result<RepDescriptor> {
        Ok(RepDescriptor::new(
            self.decompose()?.into_iter().map(|s| s.shape).collect(),
        ))
    }
}

/// Coefficient quiver of an indecomposable in its standard basis.
pub fn build_coeff_quiver(m: Indecomposable) -> CoeffQuiver {
    let n = m.rank();
    let dim = m.dim();
    let mut vertices = BTreeMap::new();
    let mut arrows = Vec::new();
    let layer2_shift = i64::from(m.kind() == Kind::Preinjective);
    for k in 1..=dim.d1 {
        vertices.insert(VertexId::new(1, k), k as i64 - 1);
    }
    for k in 1..=dim.d2 {
        vertices.insert(VertexId::new(2, k), k as i64 - 1 + layer2_shift);
    }
    let mut push = |s: usize, t: usize, label| {
        arrows.push(Arrow {
            source: VertexId::new(1, s),
            target: VertexId::new(2, t),
            label,
        })
    };
    match m.kind() {
        Kind::Regular => {
            for k in 1..=n {
                push(k, k, Label::A);
                if k < n {
                    push(k, k + 1, Label::B);
                }
            }
        }
        Kind::Preprojective => {
            for k in 1..=n {
                push(k, k, Label::A);
                push(k, k + 1, Label::B);
            }
        }
        Kind::Preinjective => {
            for k in 1..=n + 1 {
                if k <= n {
                    push(k, k, Label::B);
                }
                if k >= 2 {
                    push(k, k - 1, Label::A);
                }
            }
        }
    }
    CoeffQuiver::new(vertices, arrows).expect("standard coefficient quivers are well formed")
}

/// An indecomposable summand of a fixed point, placed inside the ambient quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlacedSummand {
    pub shape: Indecomposable,
    pub position: usize,
}

impl PlacedSummand {
    /// Vertices occupied inside `R_n`.
    ///
    /// `ₖ(P_r)` covers layer-1 indices `k..k+r-1` and layer-2 indices `k..k+r`;
    /// `R_r` covers the last `r` indices of both layers.
    pub fn vertices_in_regular(&self, n: usize) -> Result<BTreeSet<VertexId>> {
        let k = self.position;
        let r = self.shape.rank();
        let (l1, l2) = match self.shape.kind() {
            Kind::Preprojective if k >= 1 && k + r <= n => (k..k + r, k..k + r + 1),
            Kind::Regular if k >= 1 && k + r == n + 1 => (k..n + 1, k..n + 1),
            _ => {
                return Err(Error::InvalidSummands(format!(
                    "{self} does not fit inside R_{n}"
                )))
            }
        };
        Ok(l1
            .map(|i| VertexId::new(1, i))
            .chain(l2.map(|i| VertexId::new(2, i)))
            .collect())
    }
}

impl fmt::Display for PlacedSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.position, self.shape)
    }
}

/// A torus-fixed point: a successor-closed vertex subset and its decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub summands: Vec<PlacedSummand>,
}

impl FixedPoint {
    pub fn dim(&self) -> DimVector {
        DimVector::new(self.s1.len(), self.s2.len())
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.s1
            .iter()
            .map(|&i| VertexId::new(1, i))
            .chain(self.s2.iter().map(|&i| VertexId::new(2, i)))
            .collect()
    }

    pub fn descriptor(&self) -> RepDescriptor {
        RepDescriptor::new(self.summands.iter().map(|s| s.shape).collect())
    }

    /// Build a fixed point from index sets, checking closure inside `Γ(m)`.
    pub fn from_sets(m: Indecomposable, s1: Vec<usize>, s2: Vec<usize>) -> Result<Self> {
        let gamma = build_coeff_quiver(m);
        let mut fp = FixedPoint { s1, s2, summands: Vec::new() };
        fp.s1.sort_unstable();
        fp.s2.sort_unstable();
        let set = fp.vertex_set();
        if set.iter().any(|v| !gamma.contains(*v)) || set.len() != fp.s1.len() + fp.s2.len() {
            return Err(Error::NotSuccessorClosed(format!(
                "indices out of range for {m}"
            )));
        }
        if !gamma.is_successor_closed(&set) {
            return Err(Error::NotSuccessorClosed(format!("selection in {m}")));
        }
        fp.summands = gamma.induced(&set).decompose()?;
        Ok(fp)
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let summands: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "{{{}}} {{{}}} {}",
            self.s1.iter().join(","),
            self.s2.iter().join(","),
            if summands.is_empty() { "0".to_string() } else { summands.join(" + ") }
        )
    }
}

/// All torus-fixed points of `Gr_e(M)`, ordered lexicographically by `(S1, S2)`.
pub fn enumerate_fixed_points(m: Indecomposable, e: DimVector) -> Vec<FixedPoint> {
    let gamma = build_coeff_quiver(m);
    let d = m.dim();
    if !e.fits_in(d) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for s1 in (1..=d.d1).combinations(e.d1) {
        let forced: BTreeSet<usize> = gamma
            .arrows()
            .iter()
            .filter(|a| s1.contains(&a.source.index))
            .map(|a| a.target.index)
            .collect();
        if forced.len() > e.d2 {
            continue;
        }
        let free: Vec<usize> = (1..=d.d2).filter(|i| !forced.contains(i)).collect();
        for extra in free.into_iter().combinations(e.d2 - forced.len()) {
            let mut s2: Vec<usize> = forced.iter().copied().chain(extra).collect();
            s2.sort_unstable();
            let fp = FixedPoint { s1: s1.clone(), s2, summands: Vec::new() };
            out.push(fp);
        }
    }
    out.sort_by(|a, b| (&a.s1, &a.s2).cmp(&(&b.s1, &b.s2)));
    for fp in &mut out {
        let set = fp.vertex_set();
        debug_assert!(gamma.is_successor_closed(&set));
        fp.summands = gamma
            .induced(&set)
            .decompose()
            .expect("subquivers of a string quiver are strings");
    }
    out
}

/// The coordinate quotient `M/L`: complement vertices with induced arrows.
pub fn quotient_quiver(m: Indecomposable, l: &FixedPoint) -> Result<CoeffQuiver> {
    let gamma = build_coeff_quiver(m);
    let set = l.vertex_set();
    if set.iter().any(|v| !gamma.contains(*v)) {
        return Err(Error::NotSuccessorClosed(format!(
            "{l} has vertices outside Γ({m})"
        )));
    }
    if !gamma.is_successor_closed(&set) {
        return Err(Error::NotSuccessorClosed(format!("{l} in Γ({m})")));
    }
    let complement: BTreeSet<VertexId> = gamma.vertices().filter(|v| !set.contains(v)).collect();
    debug_assert!(gamma.is_predecessor_closed(&complement));
    Ok(gamma.induced(&complement))
}

/// The subquiver of `Γ(m)` spanned by a fixed point.
pub fn sub_quiver(m: Indecomposable, l: &FixedPoint) -> CoeffQuiver {
    build_coeff_quiver(m).induced(&l.vertex_set())
}
