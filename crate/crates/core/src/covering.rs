//! Left/right covering maps of graphs, their induced dimension-group
//! matrices, and the construction of a correspondence presentation from an
//! intertwining matrix.
//!
//! A surjective graph homomorphism is left-covering when it restricts to a
//! bijection on incoming edge sets at every vertex, right-covering for
//! outgoing edge sets. Left coverings present s-bijective maps of edge
//! shifts, right coverings present u-bijective maps.

use std::collections::{BTreeMap, HashSet};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dimension::{DimGroupPres, DimensionError, LaggedHom, Side};
use crate::graph::{Graph, GraphError, GraphHom, RawHom};
use crate::{Int, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("map is not surjective on {what}")]
    NotSurjective { what: &'static str },
    #[error("{side:?}-covering condition fails at vertex {vertex}")]
    NotCovering { vertex: String, side: CoverSide },
    #[error("intertwining matrix has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("intertwining matrix is zero")]
    ZeroMatrix,
    #[error("intertwining matrix has a negative entry")]
    NotNonnegative,
    #[error("F A_G = A_H F fails first at entry ({row}, {col})")]
    NotIntertwining { row: usize, col: usize },
    #[error("{which} graph is not essential")]
    NotEssential { which: &'static str },
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverSide {
    #[serde(rename = "left")]
    Left,
    #[serde(rename = "right")]
    Right,
}

/// A verified covering map.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringMap {
    hom: GraphHom,
    side: CoverSide,
}

/// Serialized form of a covering map; domain and codomain graphs travel in
/// the surrounding bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCovering {
    pub side: CoverSide,
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

impl CoveringMap {
    /// Checks surjectivity and the per-vertex bijection condition for the
    /// requested side; failures pinpoint the violating vertex.
    pub fn verify(hom: GraphHom, side: CoverSide) -> Result<Self, CoveringError> {
        if !hom.is_vertex_surjective() {
            return Err(CoveringError::NotSurjective { what: "vertices" });
        }
        if !hom.is_edge_surjective() {
            return Err(CoveringError::NotSurjective { what: "edges" });
        }
        let dom = hom.domain();
        let cod = hom.codomain();
        for v in 0..dom.vertex_count() {
            let fiber = match side {
                CoverSide::Left => dom.in_edges(v),
                CoverSide::Right => dom.out_edges(v),
            };
            let target_fiber_len = match side {
                CoverSide::Left => cod.in_edges(hom.vertex_image(v)).len(),
                CoverSide::Right => cod.out_edges(hom.vertex_image(v)).len(),
            };
            let images: HashSet<usize> = fiber.iter().map(|&e| hom.edge_image(e)).collect();
            if images.len() != fiber.len() || fiber.len() != target_fiber_len {
                return Err(CoveringError::NotCovering {
                    vertex: dom.vertex_id(v).to_string(),
                    side,
                });
            }
        }
        Ok(CoveringMap { hom, side })
    }

    pub fn identity(g: &Graph, side: CoverSide) -> Self {
        CoveringMap {
            hom: GraphHom::identity(g),
            side,
        }
    }

    pub fn hom(&self) -> &GraphHom {
        &self.hom
    }

    pub fn side(&self) -> CoverSide {
        self.side
    }

    pub fn from_raw(
        domain: &Graph,
        codomain: &Graph,
        raw: &RawCovering,
    ) -> Result<Self, CoveringError> {
        let hom = GraphHom::from_raw(
            domain,
            codomain,
            &RawHom {
                vertex_map: raw.vertex_map.clone(),
                edge_map: raw.edge_map.clone(),
            },
        )?;
        Self::verify(hom, raw.side)
    }

    pub fn to_raw(&self) -> RawCovering {
        let raw = self.hom.to_raw();
        RawCovering {
            side: self.side,
            vertex_map: raw.vertex_map,
            edge_map: raw.edge_map,
        }
    }

    /// The 0-1 matrix induced on dimension groups.
    ///
    /// A left covering `θ: M → H` yields `D` of shape `|H⁰| x |M⁰|` with
    /// `D_{IJ} = 1` iff `θ₀(J) = I`, presenting `θ^s: D^s(Σ_M) → D^s(Σ_H)`.
    /// A right covering `θ: M → G` yields `E` of shape `|M⁰| x |G⁰|` with
    /// `E_{IJ} = 1` iff `θ₀(I) = J`, presenting `θ^{s*}: D^s(Σ_G) → D^s(Σ_M)`.
    pub fn induced_matrix(&self) -> IntMatrix {
        let dom = self.hom.domain();
        let cod = self.hom.codomain();
        match self.side {
            CoverSide::Left => {
                let mut d = IntMatrix::zeros(cod.vertex_count(), dom.vertex_count());
                for j in 0..dom.vertex_count() {
                    d[(self.hom.vertex_image(j), j)] = Int::from(1);
                }
                d
            }
            CoverSide::Right => {
                let mut e = IntMatrix::zeros(dom.vertex_count(), cod.vertex_count());
                for i in 0..dom.vertex_count() {
                    e[(i, self.hom.vertex_image(i))] = Int::from(1);
                }
                e
            }
        }
    }

    /// The induced stable-side lagged homomorphism; the intertwining
    /// identity is verified on construction.
    pub fn induced_hom(&self) -> Result<LaggedHom, CoveringError> {
        let dom_pres = DimGroupPres::from_graph(self.hom.domain(), Side::Stable)?;
        let cod_pres = DimGroupPres::from_graph(self.hom.codomain(), Side::Stable)?;
        let f = self.induced_matrix();
        let hom = match self.side {
            CoverSide::Left => LaggedHom::new(dom_pres, cod_pres, f, 0)?,
            CoverSide::Right => LaggedHom::new(cod_pres, dom_pres, f, 0)?,
        };
        Ok(hom)
    }
}

/// The F-edges of an intertwining matrix: `F_{IJ}` edges with initial
/// vertex `I` in `H` and terminal vertex `J` in `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FEdgeSet {
    pub h_vertices: Vec<String>,
    pub g_vertices: Vec<String>,
    pub f: IntMatrix,
    pub edges: Vec<FEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FEdge {
    pub id: String,
    /// Initial vertex, an index into `h_vertices`.
    pub h_vertex: usize,
    /// Terminal vertex, an index into `g_vertices`.
    pub g_vertex: usize,
}

impl FEdgeSet {
    pub fn new(f: &IntMatrix, g: &Graph, h: &Graph) -> Result<Self, CoveringError> {
        if f.rows() != h.vertex_count() || f.cols() != g.vertex_count() {
            return Err(CoveringError::ShapeMismatch {
                expected: (h.vertex_count(), g.vertex_count()),
                got: (f.rows(), f.cols()),
            });
        }
        if !f.is_nonnegative() {
            return Err(CoveringError::NotNonnegative);
        }
        if f.is_zero() {
            return Err(CoveringError::ZeroMatrix);
        }
        let mut edges = Vec::new();
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                let count = f[(i, j)]
                    .to_u64()
                    .ok_or_else(|| CoveringError::Internal("F entry overflows u64".into()))?;
                for k in 0..count {
                    edges.push(FEdge {
                        id: format!("F:{}:{}:{}", h.vertex_id(i), g.vertex_id(j), k),
                        h_vertex: i,
                        g_vertex: j,
                    });
                }
            }
        }
        Ok(FEdgeSet {
            h_vertices: h.vertex_ids().to_vec(),
            g_vertices: g.vertex_ids().to_vec(),
            f: f.clone(),
            edges,
        })
    }
}

/// How the construction matches outgoing pairs to incoming pairs. The
/// choice changes the edges of the middle graph but never its vertices or
/// the induced matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BijectionPolicy {
    /// Sort both sides lexicographically by edge-id pairs and match
    /// positionally.
    Lex,
    /// Deterministically shuffle the right-hand side with the given seed.
    Seeded(u64),
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Output of the construction: the middle graph with its two covering legs
/// and the induced matrices, satisfying `D * E = F` exactly.
#[derive(Debug, Clone)]
pub struct LindMarcus {
    pub mid: Graph,
    pub theta_u: CoveringMap,
    pub theta_s: CoveringMap,
    pub d: IntMatrix,
    pub e: IntMatrix,
    pub f_edges: FEdgeSet,
}

/// Builds the middle shift of a correspondence from a nonzero nonnegative
/// `F` with `F A_G = A_H F`: vertices are the F-edges; for every vertex pair
/// `(I, J)` the sets of composable pairs
/// `P1 = {(F-edge I→J', g-edge J'→J)}` and `P2 = {(h-edge I→I', F-edge I'→J)}`
/// have equal cardinality `(F A_G)_{IJ}`, and the chosen bijection between
/// them lays down one middle edge per matched pair.
pub fn lind_marcus_build(
    f: &IntMatrix,
    g: &Graph,
    h: &Graph,
    policy: BijectionPolicy,
) -> Result<LindMarcus, CoveringError> {
    if !g.is_essential() || g.is_empty() {
        return Err(CoveringError::NotEssential { which: "left" });
    }
    if !h.is_essential() || h.is_empty() {
        return Err(CoveringError::NotEssential { which: "right" });
    }
    let f_edges = FEdgeSet::new(f, g, h)?;
    let lhs = f.mul(&g.adjacency());
    let rhs = h.adjacency().mul(f);
    if let Some((row, col)) = lhs.first_difference(&rhs) {
        return Err(CoveringError::NotIntertwining { row, col });
    }

    let mid_vertices: Vec<String> = f_edges.edges.iter().map(|e| e.id.clone()).collect();
    // F-edges out of each H-vertex and into each G-vertex, by index.
    let mut out_of_h: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    let mut into_g: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (idx, fe) in f_edges.edges.iter().enumerate() {
        out_of_h[fe.h_vertex].push(idx);
        into_g[fe.g_vertex].push(idx);
    }

    struct MidEdge {
        src_f: usize,
        dst_f: usize,
        g_edge: usize,
        h_edge: usize,
    }
    let mut mid_edges: Vec<MidEdge> = Vec::new();
    for i in 0..h.vertex_count() {
        for j in 0..g.vertex_count() {
            // P1: F-edge out of I composed with a g-edge into J.
            let mut p1: Vec<(usize, usize)> = Vec::new();
            for &fe in &out_of_h[i] {
                let mid_g = f_edges.edges[fe].g_vertex;
                for &ge in g.out_edges(mid_g) {
                    if g.edges()[ge].dst == j {
                        p1.push((fe, ge));
                    }
                }
            }
            // P2: h-edge out of I composed with an F-edge into J.
            let mut p2: Vec<(usize, usize)> = Vec::new();
            for &he in h.out_edges(i) {
                let mid_h = h.edges()[he].dst;
                for &fe in &out_of_h[mid_h] {
                    if f_edges.edges[fe].g_vertex == j {
                        p2.push((he, fe));
                    }
                }
            }
            debug_assert_eq!(p1.len(), p2.len(), "|P1| = (F A_G)_IJ = (A_H F)_IJ = |P2|");
            p1.sort_by(|a, b| {
                (f_edges.edges[a.0].id.as_str(), g.edges()[a.1].id.as_str())
                    .cmp(&(f_edges.edges[b.0].id.as_str(), g.edges()[b.1].id.as_str()))
            });
            p2.sort_by(|a, b| {
                (h.edges()[a.0].id.as_str(), f_edges.edges[a.1].id.as_str())
                    .cmp(&(h.edges()[b.0].id.as_str(), f_edges.edges[b.1].id.as_str()))
            });
            if let BijectionPolicy::Seeded(seed) = policy {
                let mut state = seed ^ ((i as u64) << 32) ^ (j as u64);
                splitmix64(&mut state);
                for k in (1..p2.len()).rev() {
                    let swap_with = (splitmix64(&mut state) % (k as u64 + 1)) as usize;
                    p2.swap(k, swap_with);
                }
            }
            for ((fe, ge), (he, fe2)) in p1.into_iter().zip(p2) {
                mid_edges.push(MidEdge {
                    src_f: fe,
                    dst_f: fe2,
                    g_edge: ge,
                    h_edge: he,
                });
            }
        }
    }

    let edge_triples: Vec<(String, String, String)> = mid_edges
        .iter()
        .map(|me| {
            (
                format!(
                    "{}>{}[{},{}]",
                    f_edges.edges[me.src_f].id,
                    f_edges.edges[me.dst_f].id,
                    g.edges()[me.g_edge].id,
                    h.edges()[me.h_edge].id
                ),
                f_edges.edges[me.src_f].id.clone(),
                f_edges.edges[me.dst_f].id.clone(),
            )
        })
        .collect();
    let mid = Graph::new(mid_vertices, edge_triples)?;
    if !mid.is_essential() {
        return Err(CoveringError::Internal(
            "middle graph of the construction must be essential".into(),
        ));
    }

    let theta_u_hom = GraphHom::new(
        mid.clone(),
        g.clone(),
        f_edges.edges.iter().map(|fe| fe.g_vertex).collect(),
        mid_edges.iter().map(|me| me.g_edge).collect(),
    )?;
    let theta_s_hom = GraphHom::new(
        mid.clone(),
        h.clone(),
        f_edges.edges.iter().map(|fe| fe.h_vertex).collect(),
        mid_edges.iter().map(|me| me.h_edge).collect(),
    )?;
    let theta_u = CoveringMap::verify(theta_u_hom, CoverSide::Right)?;
    let theta_s = CoveringMap::verify(theta_s_hom, CoverSide::Left)?;
    let d = theta_s.induced_matrix();
    let e = theta_u.induced_matrix();
    if d.mul(&e) != *f {
        return Err(CoveringError::Internal("D * E != F".into()));
    }
    Ok(LindMarcus {
        mid,
        theta_u,
        theta_s,
        d,
        e,
        f_edges,
    })
}

/// The cyclic `n`-fold cover of the one-vertex graph with `k` loops,
/// together with the collapse map; the collapse is simultaneously a left
/// and a right covering and is `n`-to-one on vertices.
pub fn cyclic_cover(k: usize, n: usize) -> (Graph, GraphHom) {
    assert!(k >= 1 && n >= 1);
    let base = crate::graph::full_shift(k);
    let vertices: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for i in 0..n {
        for l in 0..k {
            edges.push((
                format!("l{l}.{i}"),
                format!("c{i}"),
                format!("c{}", (i + 1) % n),
            ));
            edge_map.push(l);
        }
    }
    let cover = Graph::new(vertices, edges).unwrap();
    let hom = GraphHom::new(cover.clone(), base, vec![0; n], edge_map).unwrap();
    (hom.domain().clone(), hom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, full_shift, golden_mean_graph};
    use crate::matrix::int_matrix;

    fn double_cover() -> GraphHom {
        let (_, hom) = cyclic_cover(2, 2);
        hom
    }

    #[test]
    fn double_cover_is_both_sided() {
        let hom = double_cover();
        assert!(CoveringMap::verify(hom.clone(), CoverSide::Left).is_ok());
        assert!(CoveringMap::verify(hom, CoverSide::Right).is_ok());
    }

    #[test]
    fn identity_is_both_sided() {
        let g = golden_mean_graph();
        let hom = GraphHom::identity(&g);
        assert!(CoveringMap::verify(hom.clone(), CoverSide::Left).is_ok());
        assert!(CoveringMap::verify(hom, CoverSide::Right).is_ok());
    }

    #[test]
    fn cycle_collapse_is_two_to_one_covering() {
        let g = cycle_graph(2);
        let h = full_shift(1);
        let hom = GraphHom::new(g, h, vec![0, 0], vec![0, 0]).unwrap();
        assert!(CoveringMap::verify(hom.clone(), CoverSide::Left).is_ok());
        assert!(CoveringMap::verify(hom, CoverSide::Right).is_ok());
    }

    #[test]
    fn non_covering_detected() {
        // Collapse golden-mean onto the full 2-shift: vertex v1 has one
        // incoming edge but the target has two.
        let g = golden_mean_graph();
        let h = full_shift(2);
        let hom = GraphHom::new(g, h, vec![0, 0], vec![0, 1, 0]).unwrap();
        let err = CoveringMap::verify(hom, CoverSide::Left).unwrap_err();
        assert!(matches!(err, CoveringError::NotCovering { .. }));
    }

    #[test]
    fn surjectivity_required() {
        let g = full_shift(1);
        let h = full_shift(2);
        let hom = GraphHom::new(g, h, vec![0], vec![0]).unwrap();
        assert_eq!(
            CoveringMap::verify(hom, CoverSide::Left).unwrap_err(),
            CoveringError::NotSurjective { what: "edges" }
        );
    }

    #[test]
    fn induced_matrices_of_double_cover() {
        let hom = double_cover();
        let left = CoveringMap::verify(hom.clone(), CoverSide::Left).unwrap();
        assert_eq!(left.induced_matrix(), int_matrix(&[&[1, 1]]));
        let right = CoveringMap::verify(hom, CoverSide::Right).unwrap();
        assert_eq!(right.induced_matrix(), int_matrix(&[&[1], &[1]]));
    }

    #[test]
    fn induced_matrix_of_identity() {
        let g = cycle_graph(2);
        let c = CoveringMap::identity(&g, CoverSide::Left);
        assert_eq!(c.induced_matrix(), IntMatrix::identity(2));
        assert!(c.induced_hom().is_ok());
    }

    #[test]
    fn lind_marcus_scalar_one() {
        let g = full_shift(2);
        let lm = lind_marcus_build(&int_matrix(&[&[1]]), &g, &g, BijectionPolicy::Lex).unwrap();
        assert_eq!(lm.mid.vertex_count(), 1);
        assert_eq!(lm.mid.edge_count(), 2);
        assert_eq!(lm.d.mul(&lm.e), int_matrix(&[&[1]]));
    }

    #[test]
    fn lind_marcus_scalar_two() {
        let g = full_shift(2);
        let lm = lind_marcus_build(&int_matrix(&[&[2]]), &g, &g, BijectionPolicy::Lex).unwrap();
        assert_eq!(lm.mid.vertex_count(), 2);
        assert_eq!(lm.d, int_matrix(&[&[1, 1]]));
        assert_eq!(lm.e, int_matrix(&[&[1], &[1]]));
        assert_eq!(lm.d.mul(&lm.e), int_matrix(&[&[2]]));
    }

    #[test]
    fn lind_marcus_row_vector() {
        let g = cycle_graph(2);
        let h = full_shift(1);
        let f = int_matrix(&[&[1, 1]]);
        let lm = lind_marcus_build(&f, &g, &h, BijectionPolicy::Lex).unwrap();
        assert_eq!(lm.mid.vertex_count(), 2);
        assert_eq!(lm.d.mul(&lm.e), f);
    }

    #[test]
    fn lind_marcus_rejects_bad_inputs() {
        let g = full_shift(2);
        let h = full_shift(3);
        // 2*2 != 3*2 so F=[2] does not intertwine full-2 with full-3.
        assert!(matches!(
            lind_marcus_build(&int_matrix(&[&[2]]), &g, &h, BijectionPolicy::Lex),
            Err(CoveringError::NotIntertwining { .. })
        ));
        assert!(matches!(
            lind_marcus_build(&int_matrix(&[&[0]]), &g, &g, BijectionPolicy::Lex),
            Err(CoveringError::ZeroMatrix)
        ));
        assert!(matches!(
            lind_marcus_build(&int_matrix(&[&[-1]]), &g, &g, BijectionPolicy::Lex),
            Err(CoveringError::NotNonnegative)
        ));
    }

    #[test]
    fn policy_changes_edges_not_vertices_or_matrices() {
        let g = full_shift(2);
        let f = int_matrix(&[&[2]]);
        let lex = lind_marcus_build(&f, &g, &g, BijectionPolicy::Lex).unwrap();
        for seed in 0..8 {
            let seeded = lind_marcus_build(&f, &g, &g, BijectionPolicy::Seeded(seed)).unwrap();
            assert_eq!(lex.mid.vertex_ids(), seeded.mid.vertex_ids());
            assert_eq!(lex.d, seeded.d);
            assert_eq!(lex.e, seeded.e);
        }
    }

    #[test]
    fn seeded_policy_is_reproducible() {
        let g = full_shift(3);
        let f = int_matrix(&[&[2]]);
        let a = lind_marcus_build(&f, &g, &g, BijectionPolicy::Seeded(7)).unwrap();
        let b = lind_marcus_build(&f, &g, &g, BijectionPolicy::Seeded(7)).unwrap();
        assert_eq!(a.mid, b.mid);
    }

    #[test]
    fn n_to_one_composite_is_n_times_identity() {
        for k in [2usize, 3] {
            for n in [2u32, 3, 4] {
                let (_, hom) = cyclic_cover(k, n as usize);
                let left = CoveringMap::verify(hom.clone(), CoverSide::Left).unwrap();
                let right = CoveringMap::verify(hom, CoverSide::Right).unwrap();
                let d_hom = left.induced_hom().unwrap();
                let e_hom = right.induced_hom().unwrap();
                let composite = LaggedHom::compose(&d_hom, &e_hom).unwrap();
                let base = DimGroupPres::from_graph(&full_shift(k), Side::Stable).unwrap();
                let n_id = LaggedHom::new(
                    base.clone(),
                    base.clone(),
                    IntMatrix::identity(1).scale(&Int::from(n)),
                    0,
                )
                .unwrap();
                assert!(composite.equal(&n_id).unwrap());
            }
        }
    }

    #[test]
    fn verify_matches_bruteforce_bijection_check() {
        // Independent formulation: at each vertex the sorted list of image
        // edges must equal the sorted target fiber exactly.
        let oracle = |hom: &GraphHom, side: CoverSide| -> bool {
            if !hom.is_vertex_surjective() || !hom.is_edge_surjective() {
                return false;
            }
            let dom = hom.domain();
            let cod = hom.codomain();
            (0..dom.vertex_count()).all(|v| {
                let fiber: Vec<usize> = match side {
                    CoverSide::Left => dom.in_edges(v).to_vec(),
                    CoverSide::Right => dom.out_edges(v).to_vec(),
                };
                let mut images: Vec<usize> =
                    fiber.iter().map(|&e| hom.edge_image(e)).collect();
                images.sort_unstable();
                let mut target: Vec<usize> = match side {
                    CoverSide::Left => cod.in_edges(hom.vertex_image(v)).to_vec(),
                    CoverSide::Right => cod.out_edges(hom.vertex_image(v)).to_vec(),
                };
                target.sort_unstable();
                images == target
            })
        };
        let fixtures: Vec<GraphHom> = vec![
            double_cover(),
            GraphHom::identity(&golden_mean_graph()),
            GraphHom::new(cycle_graph(2), full_shift(1), vec![0, 0], vec![0, 0]).unwrap(),
            // Non-covering: collapse golden-mean onto full-2.
            GraphHom::new(golden_mean_graph(), full_shift(2), vec![0, 0], vec![0, 1, 0]).unwrap(),
            cyclic_cover(3, 2).1,
        ];
        for hom in &fixtures {
            for side in [CoverSide::Left, CoverSide::Right] {
                assert_eq!(
                    CoveringMap::verify(hom.clone(), side).is_ok(),
                    oracle(hom, side),
                    "disagreement on {hom:?} {side:?}"
                );
            }
        }
    }

    #[test]
    fn covering_round_trip() {
        let hom = double_cover();
        let c = CoveringMap::verify(hom, CoverSide::Left).unwrap();
        let raw = c.to_raw();
        let back =
            CoveringMap::from_raw(c.hom().domain(), c.hom().codomain(), &raw).unwrap();
        assert_eq!(c, back);
    }
}
