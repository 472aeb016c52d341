//! Finite directed multigraphs presenting edge shifts.
//!
//! Parallel edges are first-class and carry distinct ids; adjacency matrices
//! are derived from the edge list, never stored as the primary datum.
//! Vertex order is declaration order and every matrix representation uses it.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Int, IntMatrix, Matrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("graph is not essential (has a source or sink)")]
    NotEssential,
    #[error("graph has no closed walk")]
    NoCycle,
    #[error("edge {edge} is not incidence-preserving under the vertex map")]
    NotIncidencePreserving { edge: String },
    #[error("unknown vertex id {0}")]
    UnknownVertex(String),
    #[error("unknown edge id {0}")]
    UnknownEdge(String),
    #[error("homomorphism endpoints do not match")]
    EndpointMismatch,
}

/// Serialized graph form: `{"vertices": [...], "edges": [{id, src, dst}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawEdge {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// Everything `validate_graph` has to say about a raw graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub duplicate_vertices: Vec<String>,
    pub duplicate_edges: Vec<String>,
    pub dangling_edges: Vec<String>,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
}

impl ValidationReport {
    pub fn structurally_valid(&self) -> bool {
        self.duplicate_vertices.is_empty()
            && self.duplicate_edges.is_empty()
            && self.dangling_edges.is_empty()
    }

    pub fn essential(&self) -> bool {
        self.sources.is_empty() && self.sinks.is_empty()
    }

    pub fn passes(&self, require_essential: bool) -> bool {
        self.structurally_valid() && (!require_essential || self.essential())
    }
}

/// Checks id uniqueness, dangling endpoints, sources, and sinks.
pub fn validate_graph(raw: &RawGraph) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen_v = HashSet::new();
    for v in &raw.vertices {
        if !seen_v.insert(v.clone()) {
            report.duplicate_vertices.push(v.clone());
        }
    }
    let mut seen_e = HashSet::new();
    for e in &raw.edges {
        if !seen_e.insert(e.id.clone()) {
            report.duplicate_edges.push(e.id.clone());
        }
        if !seen_v.contains(&e.src) || !seen_v.contains(&e.dst) {
            report.dangling_edges.push(e.id.clone());
        }
    }
    if report.structurally_valid() {
        let mut has_out = HashSet::new();
        let mut has_in = HashSet::new();
        for e in &raw.edges {
            has_out.insert(&e.src);
            has_in.insert(&e.dst);
        }
        for v in &raw.vertices {
            if !has_in.contains(v) {
                report.sources.push(v.clone());
            }
            if !has_out.contains(v) {
                report.sinks.push(v.clone());
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

/// Immutable directed multigraph with indexed incidence.
#[derive(Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vindex: HashMap<String, usize>,
    eindex: HashMap<String, usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({} vertices, {} edges)",
            self.vertices.len(),
            self.edges.len()
        )
    }
}

impl Graph {
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    ) -> Result<Self, GraphError> {
        let raw = RawGraph {
            vertices,
            edges: edges
                .into_iter()
                .map(|(id, src, dst)| RawEdge { id, src, dst })
                .collect(),
        };
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawGraph) -> Result<Self, GraphError> {
        let report = validate_graph(raw);
        if !report.structurally_valid() {
            return Err(GraphError::Malformed(format!(
                "duplicate vertices {:?}, duplicate edges {:?}, dangling edges {:?}",
                report.duplicate_vertices, report.duplicate_edges, report.dangling_edges
            )));
        }
        let vindex: HashMap<String, usize> = raw
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut edges = Vec::with_capacity(raw.edges.len());
        let mut eindex = HashMap::new();
        let mut out_edges = vec![Vec::new(); raw.vertices.len()];
        let mut in_edges = vec![Vec::new(); raw.vertices.len()];
        for (i, e) in raw.edges.iter().enumerate() {
            let src = vindex[&e.src];
            let dst = vindex[&e.dst];
            edges.push(Edge {
                id: e.id.clone(),
                src,
                dst,
            });
            eindex.insert(e.id.clone(), i);
            out_edges[src].push(i);
            in_edges[dst].push(i);
        }
        Ok(Graph {
            vertices: raw.vertices.clone(),
            edges,
            vindex,
            eindex,
            out_edges,
            in_edges,
        })
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    id: e.id.clone(),
                    src: self.vertices[e.src].clone(),
                    dst: self.vertices[e.dst].clone(),
                })
                .collect(),
        }
    }

    pub fn empty() -> Self {
        Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vindex: HashMap::new(),
            eindex: HashMap::new(),
            out_edges: Vec::new(),
            in_edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vindex.get(id).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.eindex.get(id).copied()
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// Adjacency matrix in declaration order: entry (v, w) counts edges v→w.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut a = Matrix::zeros(n, n);
        for e in &self.edges {
            a[(e.src, e.dst)] += Int::from(1);
        }
        a
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.in_edges[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.out_edges[v].is_empty())
            .collect()
    }

    /// No sources and no sinks. The empty graph is vacuously essential.
    pub fn is_essential(&self) -> bool {
        self.sources().is_empty() && self.sinks().is_empty()
    }

    pub fn validate(&self, require_essential: bool) -> (ValidationReport, bool) {
        let report = validate_graph(&self.to_raw());
        let ok = report.passes(require_essential);
        (report, ok)
    }

    /// Strongly connected components in a deterministic order; each
    /// component lists vertex indices ascending.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        // Kosaraju: first pass records finish order.
        let mut finish: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            seen[start] = true;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < self.out_edges[v].len() {
                    let e = self.out_edges[v][*next];
                    *next += 1;
                    let w = self.edges[e].dst;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    finish.push(v);
                    stack.pop();
                }
            }
        }
        // Second pass on the reverse graph in reverse finish order.
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0usize;
        for &start in finish.iter().rev() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = ncomp;
            while let Some(v) = stack.pop() {
                for &e in &self.in_edges[v] {
                    let w = self.edges[e].src;
                    if comp[w] == usize::MAX {
                        comp[w] = ncomp;
                        stack.push(w);
                    }
                }
            }
            ncomp += 1;
        }
        let mut components = vec![Vec::new(); ncomp];
        for v in 0..n {
            components[comp[v]].push(v);
        }
        components
    }

    /// True iff the graph is strongly connected and nonempty.
    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.strongly_connected_components().len() == 1
    }
}

/// gcd of the lengths of all closed walks: computed per strongly connected
/// component by BFS level labeling, then combined across components.
pub fn period(g: &Graph) -> Result<u64, GraphError> {
    let mut acc: u64 = 0;
    for comp in g.strongly_connected_components() {
        let inside: HashSet<usize> = comp.iter().copied().collect();
        let intra: Vec<&Edge> = g
            .edges
            .iter()
            .filter(|e| inside.contains(&e.src) && inside.contains(&e.dst))
            .collect();
        if intra.is_empty() {
            continue;
        }
        let root = comp[0];
        let mut level: HashMap<usize, u64> = HashMap::new();
        level.insert(root, 0);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in &g.out_edges[v] {
                let w = g.edges[e].dst;
                if inside.contains(&w) && !level.contains_key(&w) {
                    level.insert(w, level[&v] + 1);
                    queue.push_back(w);
                }
            }
        }
        for e in &intra {
            let d = (level[&e.src] + 1) as i64 - level[&e.dst] as i64;
            acc = gcd_u64(acc, d.unsigned_abs());
        }
    }
    if acc == 0 {
        Err(GraphError::NoCycle)
    } else {
        Ok(acc)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Escapes the pairing separators so composite ids stay injective.
fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if matches!(ch, '\\' | ',' | '(' | ')') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

pub(crate) fn pair_id(a: &str, b: &str) -> String {
    format!("({},{})", esc(a), esc(b))
}

/// Product graph: vertices `G⁰×H⁰`, edge set the componentwise product, so
/// the adjacency matrix is the Kronecker product `A_G ⊗ A_H` in
/// lexicographic vertex order.
pub fn product_graph(g: &Graph, h: &Graph) -> Graph {
    let mut vertices = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    for gv in &g.vertices {
        for hv in &h.vertices {
            vertices.push(pair_id(gv, hv));
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count() * h.edge_count());
    for ge in &g.edges {
        for he in &h.edges {
            edges.push((
                pair_id(&ge.id, &he.id),
                pair_id(&g.vertices[ge.src], &h.vertices[he.src]),
                pair_id(&g.vertices[ge.dst], &h.vertices[he.dst]),
            ));
        }
    }
    Graph::new(vertices, edges).expect("paired ids are unique")
}

/// Result of deleting sources and sinks until none remain.
#[derive(Debug, Clone)]
pub struct TrimResult {
    pub graph: Graph,
    /// Retained vertex indices of the input, in order.
    pub vertex_map: Vec<usize>,
    /// Retained edge indices of the input, in order.
    pub edge_map: Vec<usize>,
}

pub fn trim_essential(g: &Graph) -> TrimResult {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let mut alive_v = vec![true; nv];
    let mut alive_e = vec![true; ne];
    loop {
        let mut changed = false;
        let mut in_deg = vec![0usize; nv];
        let mut out_deg = vec![0usize; nv];
        for (i, e) in g.edges.iter().enumerate() {
            if alive_e[i] {
                out_deg[e.src] += 1;
                in_deg[e.dst] += 1;
            }
        }
        for v in 0..nv {
            if alive_v[v] && (in_deg[v] == 0 || out_deg[v] == 0) {
                alive_v[v] = false;
                changed = true;
                for (i, e) in g.edges.iter().enumerate() {
                    if alive_e[i] && (e.src == v || e.dst == v) {
                        alive_e[i] = false;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let vertex_map: Vec<usize> = (0..nv).filter(|&v| alive_v[v]).collect();
    let edge_map: Vec<usize> = (0..ne).filter(|&e| alive_e[e]).collect();
    let vertices: Vec<String> = vertex_map.iter().map(|&v| g.vertices[v].clone()).collect();
    let edges: Vec<(String, String, String)> = edge_map
        .iter()
        .map(|&i| {
            let e = &g.edges[i];
            (
                e.id.clone(),
                g.vertices[e.src].clone(),
                g.vertices[e.dst].clone(),
            )
        })
        .collect();
    TrimResult {
        graph: Graph::new(vertices, edges).expect("subgraph of a valid graph"),
        vertex_map,
        edge_map,
    }
}

/// Incidence-preserving graph homomorphism with total vertex and edge maps.
#[derive(Clone, PartialEq)]
pub struct GraphHom {
    domain: Graph,
    codomain: Graph,
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
}

impl std::fmt::Debug for GraphHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GraphHom({:?} -> {:?})",
            self.domain, self.codomain
        )
    }
}

/// Serialized form: id-to-id maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawHom {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

impl GraphHom {
    pub fn new(
        domain: Graph,
        codomain: Graph,
        vertex_map: Vec<usize>,
        edge_map: Vec<usize>,
    ) -> Result<Self, GraphError> {
        assert_eq!(vertex_map.len(), domain.vertex_count());
        assert_eq!(edge_map.len(), domain.edge_count());
        for (i, e) in domain.edges.iter().enumerate() {
            let image = &codomain.edges[edge_map[i]];
            if image.src != vertex_map[e.src] || image.dst != vertex_map[e.dst] {
                return Err(GraphError::NotIncidencePreserving {
                    edge: e.id.clone(),
                });
            }
        }
        Ok(GraphHom {
            domain,
            codomain,
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(g: &Graph) -> Self {
        GraphHom {
            domain: g.clone(),
            codomain: g.clone(),
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
        }
    }

    pub fn from_raw(domain: &Graph, codomain: &Graph, raw: &RawHom) -> Result<Self, GraphError> {
        let mut vertex_map = Vec::with_capacity(domain.vertex_count());
        for v in domain.vertex_ids() {
            let target = raw
                .vertex_map
                .get(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            vertex_map.push(
                codomain
                    .vertex_index(target)
                    .ok_or_else(|| GraphError::UnknownVertex(target.clone()))?,
            );
        }
        let mut edge_map = Vec::with_capacity(domain.edge_count());
        for e in domain.edges() {
            let target = raw
                .edge_map
                .get(&e.id)
                .ok_or_else(|| GraphError::UnknownEdge(e.id.clone()))?;
            edge_map.push(
                codomain
                    .edge_index(target)
                    .ok_or_else(|| GraphError::UnknownEdge(target.clone()))?,
            );
        }
        GraphHom::new(domain.clone(), codomain.clone(), vertex_map, edge_map)
    }

    pub fn to_raw(&self) -> RawHom {
        RawHom {
            vertex_map: self
                .domain
                .vertex_ids()
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), self.codomain.vertex_id(self.vertex_map[i]).to_string()))
                .collect(),
            edge_map: self
                .domain
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| (e.id.clone(), self.codomain.edges()[self.edge_map[i]].id.clone()))
                .collect(),
        }
    }

    pub fn domain(&self) -> &Graph {
        &self.domain
    }

    pub fn codomain(&self) -> &Graph {
        &self.codomain
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn edge_image(&self, e: usize) -> usize {
        self.edge_map[e]
    }

    pub fn is_vertex_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.vertex_count()];
        for &w in &self.vertex_map {
            hit[w] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_edge_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.edge_count()];
        for &w in &self.edge_map {
            hit[w] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// `outer ∘ inner`; requires `inner.codomain == outer.domain`.
    pub fn compose(outer: &GraphHom, inner: &GraphHom) -> Result<GraphHom, GraphError> {
        if inner.codomain != outer.domain {
            return Err(GraphError::EndpointMismatch);
        }
        GraphHom::new(
            inner.domain.clone(),
            outer.codomain.clone(),
            inner
                .vertex_map
                .iter()
                .map(|&v| outer.vertex_map[v])
                .collect(),
            inner.edge_map.iter().map(|&e| outer.edge_map[e]).collect(),
        )
    }
}

/// Searches for a presentation-level graph isomorphism. A hit induces a
/// conjugacy of edge shifts; a miss does not refute conjugacy.
pub fn presented_isomorphic(g: &Graph, h: &Graph) -> Option<GraphHom> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.vertex_count();
    let deg = |gr: &Graph, v: usize| (gr.in_edges(v).len(), gr.out_edges(v).len());
    let mut gd: Vec<_> = (0..n).map(|v| deg(g, v)).collect();
    let mut hd: Vec<_> = (0..n).map(|v| deg(h, v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    let count = |gr: &Graph, v: usize, w: usize| {
        gr.out_edges(v)
            .iter()
            .filter(|&&e| gr.edges()[e].dst == w)
            .count()
    };
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        g: &Graph,
        h: &Graph,
        count: &impl Fn(&Graph, usize, usize) -> usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            if g.in_edges(v).len() != h.in_edges(w).len()
                || g.out_edges(v).len() != h.out_edges(w).len()
            {
                continue;
            }
            let consistent = (0..v).all(|u| {
                count(g, u, v) == count(h, phi[u], w) && count(g, v, u) == count(h, w, phi[u])
            }) && count(g, v, v) == count(h, w, w);
            if !consistent {
                continue;
            }
            phi[v] = w;
            used[w] = true;
            if backtrack(g, h, count, phi, used, v + 1) {
                return true;
            }
            phi[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    if n > 0 && !backtrack(g, h, &count, &mut phi, &mut used, 0) {
        return None;
    }
    // Vertex bijection found; match parallel edges by sorted id within each
    // (src, dst) class.
    let mut h_buckets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        h_buckets.entry((e.src, e.dst)).or_default().push(i);
    }
    for bucket in h_buckets.values_mut() {
        bucket.sort_by(|&a, &b| h.edges()[a].id.cmp(&h.edges()[b].id));
    }
    let mut g_buckets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        g_buckets.entry((e.src, e.dst)).or_default().push(i);
    }
    let mut edge_map = vec![usize::MAX; g.edge_count()];
    for (&(src, dst), bucket) in &mut g_buckets {
        bucket.sort_by(|&a, &b| g.edges()[a].id.cmp(&g.edges()[b].id));
        let target = h_buckets.get(&(phi[src], phi[dst]))?;
        if target.len() != bucket.len() {
            return None;
        }
        for (ge, he) in bucket.iter().zip(target.iter()) {
            edge_map[*ge] = *he;
        }
    }
    GraphHom::new(g.clone(), h.clone(), phi, edge_map).ok()
}

/// Full shift on `n` symbols: one vertex, `n` loops.
pub fn full_shift(n: usize) -> Graph {
    let vertices = vec!["v".to_string()];
    let edges = (0..n)
        .map(|i| (format!("e{i}"), "v".to_string(), "v".to_string()))
        .collect();
    Graph::new(vertices, edges).unwrap()
}

/// Directed k-cycle.
pub fn cycle_graph(k: usize) -> Graph {
    assert!(k >= 1);
    let vertices: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let edges = (0..k)
        .map(|i| {
            (
                format!("e{i}"),
                format!("v{i}"),
                format!("v{}", (i + 1) % k),
            )
        })
        .collect();
    Graph::new(vertices, edges).unwrap()
}

/// Graph with the given adjacency matrix: vertices `v0..`, parallel edges
/// `e{src}.{dst}.{k}`.
pub fn graph_from_adjacency(a: &IntMatrix) -> Graph {
    assert!(a.is_square());
    assert!(a.is_nonnegative());
    let n = a.rows();
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let count: u64 = a[(r, c)].to_string().parse().unwrap();
            for k in 0..count {
                edges.push((format!("e{r}.{c}.{k}"), format!("v{r}"), format!("v{c}")));
            }
        }
    }
    Graph::new(vertices, edges).unwrap()
}

/// Golden-mean shift presentation, adjacency [[1,1],[1,0]].
pub fn golden_mean_graph() -> Graph {
    graph_from_adjacency(&crate::matrix::int_matrix(&[&[1, 1], &[1, 0]]))
}
