//! Correspondences between edge shifts, presented by a middle graph with a
//! right-covering leg onto the left graph and a left-covering leg onto the
//! right graph. Composition is the graph fibre product over the facing
//! legs; induced maps on dimension groups compose functorially.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covering::{CoverSide, CoveringError, CoveringMap, LindMarcus, RawCovering};
use crate::dimension::{
    proportionality_of, DimGroupPres, DimensionError, LaggedHom, Proportionality, Side,
};
use crate::graph::{pair_id, trim_essential, Graph, GraphError, GraphHom, RawGraph};

#[derive(Debug, Error, PartialEq)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Covering(#[from] CoveringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error("{leg} leg has the wrong side or endpoints")]
    CodomainMismatch { leg: &'static str },
    #[error("right graph of the first correspondence differs from the left graph of the second")]
    MiddleMismatch,
    #[error("correspondences do not share left and right graphs")]
    SignatureMismatch,
    #[error("{which} graph is not essential")]
    NotEssential { which: &'static str },
}

/// `G ⇐ (θ_u) M (θ_s) ⇒ H`: a u-bijective/s-bijective leg pair presented by
/// covering maps.
#[derive(Debug, Clone, PartialEq)]
pub struct Correspondence {
    left: Graph,
    right: Graph,
    mid: Graph,
    theta_u: CoveringMap,
    theta_s: CoveringMap,
}

/// Serialized bundle `{g, h, m, theta_u, theta_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCorrespondence {
    pub g: RawGraph,
    pub h: RawGraph,
    pub m: RawGraph,
    pub theta_u: RawCovering,
    pub theta_s: RawCovering,
}

impl Correspondence {
    pub fn new(
        left: Graph,
        right: Graph,
        mid: Graph,
        theta_u: CoveringMap,
        theta_s: CoveringMap,
    ) -> Result<Self, CorrespondenceError> {
        if theta_u.side() != CoverSide::Right
            || theta_u.hom().domain() != &mid
            || theta_u.hom().codomain() != &left
        {
            return Err(CorrespondenceError::CodomainMismatch { leg: "theta_u" });
        }
        if theta_s.side() != CoverSide::Left
            || theta_s.hom().domain() != &mid
            || theta_s.hom().codomain() != &right
        {
            return Err(CorrespondenceError::CodomainMismatch { leg: "theta_s" });
        }
        for (which, g) in [("left", &left), ("right", &right), ("mid", &mid)] {
            if g.is_empty() || !g.is_essential() {
                return Err(CorrespondenceError::NotEssential { which });
            }
        }
        Ok(Correspondence {
            left,
            right,
            mid,
            theta_u,
            theta_s,
        })
    }

    /// Identity correspondence: the middle graph is the graph itself and
    /// both legs are the identity.
    pub fn identity(g: &Graph) -> Result<Self, CorrespondenceError> {
        Correspondence::new(
            g.clone(),
            g.clone(),
            g.clone(),
            CoveringMap::identity(g, CoverSide::Right),
            CoveringMap::identity(g, CoverSide::Left),
        )
    }

    pub fn from_lind_marcus(lm: &LindMarcus) -> Result<Self, CorrespondenceError> {
        Correspondence::new(
            lm.theta_u.hom().codomain().clone(),
            lm.theta_s.hom().codomain().clone(),
            lm.mid.clone(),
            lm.theta_u.clone(),
            lm.theta_s.clone(),
        )
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn mid(&self) -> &Graph {
        &self.mid
    }

    pub fn theta_u(&self) -> &CoveringMap {
        &self.theta_u
    }

    pub fn theta_s(&self) -> &CoveringMap {
        &self.theta_s
    }

    pub fn from_raw(raw: &RawCorrespondence) -> Result<Self, CorrespondenceError> {
        let g = Graph::from_raw(&raw.g)?;
        let h = Graph::from_raw(&raw.h)?;
        let m = Graph::from_raw(&raw.m)?;
        let theta_u = CoveringMap::from_raw(&m, &g, &raw.theta_u)?;
        let theta_s = CoveringMap::from_raw(&m, &h, &raw.theta_s)?;
        Correspondence::new(g, h, m, theta_u, theta_s)
    }

    pub fn to_raw(&self) -> RawCorrespondence {
        RawCorrespondence {
            g: self.left.to_raw(),
            h: self.right.to_raw(),
            m: self.mid.to_raw(),
            theta_u: self.theta_u.to_raw(),
            theta_s: self.theta_s.to_raw(),
        }
    }

    /// Induced maps `θ_s^s ∘ θ_u^{s*} = (D·E, 0)` on stable dimension
    /// groups, and the transposed map on the unstable groups in the
    /// opposite direction.
    pub fn induced_maps(&self) -> Result<InducedMaps, CorrespondenceError> {
        let d = self.theta_s.induced_matrix();
        let e = self.theta_u.induced_matrix();
        let f = d.mul(&e);
        let s_map = LaggedHom::new(
            DimGroupPres::from_graph(&self.left, Side::Stable)?,
            DimGroupPres::from_graph(&self.right, Side::Stable)?,
            f.clone(),
            0,
        )?;
        let u_map = LaggedHom::new(
            DimGroupPres::from_graph(&self.right, Side::Unstable)?,
            DimGroupPres::from_graph(&self.left, Side::Unstable)?,
            f.transpose(),
            0,
        )?;
        Ok(InducedMaps { s_map, u_map })
    }
}

#[derive(Debug, Clone)]
pub struct InducedMaps {
    /// `D^s(Σ_G) → D^s(Σ_H)`.
    pub s_map: LaggedHom,
    /// `D^u(Σ_H) → D^u(Σ_G)`.
    pub u_map: LaggedHom,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionDiagnostics {
    pub fibre_vertices: usize,
    pub fibre_edges: usize,
    pub trimmed_vertices: usize,
    pub trimmed_edges: usize,
    pub projections_verified: bool,
}

/// A composite, or the distinguished empty value when trimming removes the
/// whole fibre product.
#[derive(Debug, Clone)]
pub struct Composition {
    pub result: Option<Correspondence>,
    pub diagnostics: CompositionDiagnostics,
}

/// Composes `c1: G ⇒ H` with `c2: H ⇒ K` over the fibre product of the
/// facing legs. Both projections are verified as coverings before the
/// product is trimmed to its essential part.
pub fn compose(
    c1: &Correspondence,
    c2: &Correspondence,
) -> Result<Composition, CorrespondenceError> {
    if c1.right != c2.left {
        return Err(CorrespondenceError::MiddleMismatch);
    }
    let m1 = &c1.mid;
    let m2 = &c2.mid;
    let s1 = c1.theta_s.hom();
    let u2 = c2.theta_u.hom();

    let mut vertices = Vec::new();
    let mut vertex_pairs = Vec::new();
    for v1 in 0..m1.vertex_count() {
        for v2 in 0..m2.vertex_count() {
            if s1.vertex_image(v1) == u2.vertex_image(v2) {
                vertices.push(pair_id(m1.vertex_id(v1), m2.vertex_id(v2)));
                vertex_pairs.push((v1, v2));
            }
        }
    }
    let mut edges = Vec::new();
    let mut edge_pairs = Vec::new();
    for (i1, e1) in m1.edges().iter().enumerate() {
        for (i2, e2) in m2.edges().iter().enumerate() {
            if s1.edge_image(i1) == u2.edge_image(i2) {
                edges.push((
                    pair_id(&e1.id, &e2.id),
                    pair_id(m1.vertex_id(e1.src), m2.vertex_id(e2.src)),
                    pair_id(m1.vertex_id(e1.dst), m2.vertex_id(e2.dst)),
                ));
                edge_pairs.push((i1, i2));
            }
        }
    }
    let fibre = Graph::new(vertices, edges)?;
    let fibre_vertices = fibre.vertex_count();
    let fibre_edges = fibre.edge_count();

    let p1 = GraphHom::new(
        fibre.clone(),
        m1.clone(),
        vertex_pairs.iter().map(|&(v1, _)| v1).collect(),
        edge_pairs.iter().map(|&(e1, _)| e1).collect(),
    )?;
    let p2 = GraphHom::new(
        fibre.clone(),
        m2.clone(),
        vertex_pairs.iter().map(|&(_, v2)| v2).collect(),
        edge_pairs.iter().map(|&(_, e2)| e2).collect(),
    )?;
    // The projections inherit the covering sides of the facing legs.
    CoveringMap::verify(p1.clone(), CoverSide::Right)?;
    CoveringMap::verify(p2.clone(), CoverSide::Left)?;

    let leg_u_pre = GraphHom::compose(c1.theta_u.hom(), &p1)?;
    let leg_s_pre = GraphHom::compose(c2.theta_s.hom(), &p2)?;

    let trim = trim_essential(&fibre);
    let diagnostics = CompositionDiagnostics {
        fibre_vertices,
        fibre_edges,
        trimmed_vertices: fibre_vertices - trim.graph.vertex_count(),
        trimmed_edges: fibre_edges - trim.graph.edge_count(),
        projections_verified: true,
    };
    if trim.graph.is_empty() {
        return Ok(Composition {
            result: None,
            diagnostics,
        });
    }
    let leg_u = GraphHom::new(
        trim.graph.clone(),
        c1.left.clone(),
        trim.vertex_map
            .iter()
            .map(|&v| leg_u_pre.vertex_image(v))
            .collect(),
        trim.edge_map
            .iter()
            .map(|&e| leg_u_pre.edge_image(e))
            .collect(),
    )?;
    let leg_s = GraphHom::new(
        trim.graph.clone(),
        c2.right.clone(),
        trim.vertex_map
            .iter()
            .map(|&v| leg_s_pre.vertex_image(v))
            .collect(),
        trim.edge_map
            .iter()
            .map(|&e| leg_s_pre.edge_image(e))
            .collect(),
    )?;
    let theta_u = CoveringMap::verify(leg_u, CoverSide::Right)?;
    let theta_s = CoveringMap::verify(leg_s, CoverSide::Left)?;
    let result = Correspondence::new(
        c1.left.clone(),
        c2.right.clone(),
        trim.graph,
        theta_u,
        theta_s,
    )?;
    Ok(Composition {
        result: Some(result),
        diagnostics,
    })
}

fn check_signature(c1: &Correspondence, c2: &Correspondence) -> Result<(), CorrespondenceError> {
    if c1.left != c2.left || c1.right != c2.right {
        return Err(CorrespondenceError::SignatureMismatch);
    }
    Ok(())
}

/// Equality of the induced maps on both the stable and unstable dimension
/// groups.
pub fn h_equivalent(c1: &Correspondence, c2: &Correspondence) -> Result<bool, CorrespondenceError> {
    check_signature(c1, c2)?;
    let m1 = c1.induced_maps()?;
    let m2 = c2.induced_maps()?;
    Ok(m1.s_map.equal(&m2.s_map)? && m1.u_map.equal(&m2.u_map)?)
}

/// A single nonzero rational scaling the rationalized maps on both sides at
/// once; computed on the stable side, verified on the unstable side.
pub fn rationally_h_equivalent(
    c1: &Correspondence,
    c2: &Correspondence,
) -> Result<Proportionality, CorrespondenceError> {
    check_signature(c1, c2)?;
    let m1 = c1.induced_maps()?;
    let m2 = c2.induced_maps()?;
    let s = proportionality_of(&m1.s_map.rationalized(), &m2.s_map.rationalized());
    let u1 = m1.u_map.rationalized();
    let u2 = m2.u_map.rationalized();
    match (&s.q, s.both_zero) {
        (None, _) => Ok(s),
        (Some(_), true) => {
            // Stable side vacuous; the unstable side decides the scalar.
            Ok(proportionality_of(&u1, &u2))
        }
        (Some(q), false) => {
            let u_ok = if u1.is_zero() && u2.is_zero() {
                true
            } else {
                u1 == u2.scale(q)
            };
            if u_ok {
                Ok(s)
            } else {
                Ok(Proportionality {
                    q: None,
                    both_zero: false,
                })
            }
        }
    }
}

/// Searches for a presentation-level isomorphism `Θ: M1 → M2` commuting
/// with both legs. Absence does not refute isomorphism of the
/// correspondences in the conjugacy sense.
pub fn presented_isomorphic_corr(
    c1: &Correspondence,
    c2: &Correspondence,
) -> Result<Option<GraphHom>, CorrespondenceError> {
    check_signature(c1, c2)?;
    let m1 = &c1.mid;
    let m2 = &c2.mid;
    if m1.vertex_count() != m2.vertex_count() || m1.edge_count() != m2.edge_count() {
        return Ok(None);
    }
    let n = m1.vertex_count();
    // Label of a mid edge: its images in G and H.
    let label1 = |e: usize| {
        (
            c1.theta_u.hom().edge_image(e),
            c1.theta_s.hom().edge_image(e),
        )
    };
    let label2 = |e: usize| {
        (
            c2.theta_u.hom().edge_image(e),
            c2.theta_s.hom().edge_image(e),
        )
    };
    let labels_between =
        |m: &Graph, label: &dyn Fn(usize) -> (usize, usize), v: usize, w: usize| {
            let mut ls: Vec<(usize, usize)> = m
                .out_edges(v)
                .iter()
                .filter(|&&e| m.edges()[e].dst == w)
                .map(|&e| label(e))
                .collect();
            ls.sort_unstable();
            ls
        };

    let compatible = |v: usize, w: usize| {
        c1.theta_u.hom().vertex_image(v) == c2.theta_u.hom().vertex_image(w)
            && c1.theta_s.hom().vertex_image(v) == c2.theta_s.hom().vertex_image(w)
            && m1.in_edges(v).len() == m2.in_edges(w).len()
            && m1.out_edges(v).len() == m2.out_edges(w).len()
    };

    fn backtrack(
        n: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
        lb1: &dyn Fn(usize, usize) -> Vec<(usize, usize)>,
        lb2: &dyn Fn(usize, usize) -> Vec<(usize, usize)>,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || !compatible(v, w) {
                continue;
            }
            let consistent = (0..v).all(|u| {
                lb1(u, v) == lb2(phi[u], w) && lb1(v, u) == lb2(w, phi[u])
            }) && lb1(v, v) == lb2(w, w);
            if !consistent {
                continue;
            }
            phi[v] = w;
            used[w] = true;
            if backtrack(n, compatible, lb1, lb2, phi, used, v + 1) {
                return true;
            }
            phi[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    let lb1 = |v: usize, w: usize| labels_between(m1, &label1, v, w);
    let lb2 = |v: usize, w: usize| labels_between(m2, &label2, v, w);
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !backtrack(n, &compatible, &lb1, &lb2, &mut phi, &mut used, 0) {
        return Ok(None);
    }
    // Match edges inside each (src, dst, label) class, sorted by id.
    use std::collections::HashMap;
    let mut buckets2: HashMap<(usize, usize, (usize, usize)), Vec<usize>> = HashMap::new();
    for (i, e) in m2.edges().iter().enumerate() {
        buckets2
            .entry((e.src, e.dst, label2(i)))
            .or_default()
            .push(i);
    }
    for b in buckets2.values_mut() {
        b.sort_by(|&a, &b| m2.edges()[a].id.cmp(&m2.edges()[b].id));
    }
    let mut buckets1: HashMap<(usize, usize, (usize, usize)), Vec<usize>> = HashMap::new();
    for (i, e) in m1.edges().iter().enumerate() {
        buckets1
            .entry((e.src, e.dst, label1(i)))
            .or_default()
            .push(i);
    }
    let mut edge_map = vec![usize::MAX; m1.edge_count()];
    for ((src, dst, label), bucket) in &mut buckets1 {
        bucket.sort_by(|&a, &b| m1.edges()[a].id.cmp(&m1.edges()[b].id));
        let Some(target) = buckets2.get(&(phi[*src], phi[*dst], *label)) else {
            return Ok(None);
        };
        if target.len() != bucket.len() {
            return Ok(None);
        }
        for (a, b) in bucket.iter().zip(target.iter()) {
            edge_map[*a] = *b;
        }
    }
    Ok(GraphHom::new(m1.clone(), m2.clone(), phi, edge_map).ok())
}
