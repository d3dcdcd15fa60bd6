//! Labeled simple undirected graphs.
//!
//! Vertices are indices `0..n` carrying display labels. Labels are for output
//! only: equality and isomorphism look at adjacency alone.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

/// Largest vertex count [`are_isomorphic`] accepts.
pub const DEFAULT_ISOMORPHISM_CAP: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} is outside 0..{count}")]
    VertexOutOfRange { vertex: Vertex, count: usize },
    #[error("graph has {count} vertices; isomorphism cap is {cap}")]
    TooLarge { count: usize, cap: usize },
    #[error("invalid graph json: {0}")]
    Json(String),
}

/// A simple undirected graph: symmetric adjacency, no loops, cached edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl SimpleGraph {
    /// Edgeless graph on the given labels.
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            rows: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    /// Edgeless graph labeled `"0"`, `"1"`, …
    pub fn empty(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Star with centre `0`.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(0, v);
        }
        g
    }

    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(labels);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let count = self.vertex_count();
        for vertex in [u, v] {
            if vertex >= count {
                return Err(GraphError::VertexOutOfRange { vertex, count });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.insert_edge(u, v))
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        debug_assert_ne!(u, v);
        if self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.edge_count += 1;
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rows[v].ones()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Copy with vertex `v` moved to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> SimpleGraph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut labels = vec![String::new(); perm.len()];
        for (v, &image) in perm.iter().enumerate() {
            labels[image] = self.labels[v].clone();
        }
        let mut g = SimpleGraph::new(labels);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// True when some vertex is adjacent to all others. A single vertex
    /// counts; the empty graph has no vertex at all.
    pub fn has_universal_vertex(&self) -> bool {
        self.universal_vertices().next().is_some()
    }

    pub fn universal_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.vertex_count();
        (0..n).filter(move |&v| self.degree(v) + 1 == n)
    }

    /// Edges present in exactly one of the two graphs (same vertex count
    /// assumed), as `(u, v, in_self)`.
    pub fn edge_difference(&self, other: &SimpleGraph) -> Vec<(Vertex, Vertex, bool)> {
        let n = self.vertex_count().min(other.vertex_count());
        let mut out = Vec::new();
        for u in 0..n {
            let diff = self.rows[u].symmetric_difference(&other.rows[u]);
            for v in diff.filter(|&v| v > u && v < n) {
                out.push((u, v, self.adjacent(u, v)));
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let mut out = String::from("graph {\n");
        for v in (0..self.vertex_count()).filter(|&v| self.degree(v) == 0) {
            let _ = writeln!(out, "  {};", quote(&self.labels[v]));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                quote(&self.labels[u]),
                quote(&self.labels[v])
            );
        }
        out.push_str("}\n");
        out
    }

    /// One `label_u,label_v` line per edge (`u < v` by index), lines sorted.
    pub fn to_edgelist(&self) -> String {
        let mut lines: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{},{}", self.labels[u], self.labels[v]))
            .collect();
        lines.sort();
        lines.into_iter().map(|l| l + "\n").collect()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph json serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::from_edges(doc.vertices, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Edgelist => self.to_edgelist(),
            ExportFormat::Json => self.to_json(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    Dot,
    #[default]
    Edgelist,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edgelist" => Ok(ExportFormat::Edgelist),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!(
                "unknown format {other:?} (expected dot, edgelist or json)"
            )),
        }
    }
}

/// Identity-map equality: same vertex count and the same adjacency.
pub fn graphs_equal_labeled(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.rows == b.rows
}

/// [`are_isomorphic_capped`] with [`DEFAULT_ISOMORPHISM_CAP`].
pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<Option<Vec<Vertex>>, GraphError> {
    are_isomorphic_capped(a, b, DEFAULT_ISOMORPHISM_CAP)
}

/// Searches for an isomorphism `a → b`.
///
/// Returns `Ok(Some(π))` with `adjacent_a(u, v) == adjacent_b(π[u], π[v])`
/// for all pairs, or `Ok(None)` when the graphs are not isomorphic.
///
/// Cheap invariants (vertex count, edge count, degree multiset) are checked
/// first. Both graphs are then colored jointly by iterated neighbourhood
/// refinement starting from degrees, and a backtracking search maps each
/// vertex only onto an unused vertex of the same final color. Candidates are
/// tried in ascending index order, so the witness is deterministic.
pub fn are_isomorphic_capped(
    a: &SimpleGraph,
    b: &SimpleGraph,
    cap: usize,
) -> Result<Option<Vec<Vertex>>, GraphError> {
    let n = a.vertex_count();
    for count in [n, b.vertex_count()] {
        if count > cap {
            return Err(GraphError::TooLarge { count, cap });
        }
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }

    let (ca, cb) = refine_colors(a, b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(None);
    }

    let order = search_order(a, &ca);
    let mut search = Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        order: &order,
        map: vec![usize::MAX; n],
        used: FixedBitSet::with_capacity(n),
    };
    Ok(search.extend(0).then_some(search.map))
}

/// Joint color refinement on `a ⊔ b`. A vertex's next color is determined by
/// its current color and the multiset of its neighbours' colors; colors are
/// renumbered through a shared table so they stay comparable across graphs.
fn refine_colors(a: &SimpleGraph, b: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [a, b];
    let mut colors: [Vec<usize>; 2] = [a.degrees(), b.degrees()];
    let mut classes = usize::MAX;
    loop {
        let mut table: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.vertex_count())
                    .map(|v| {
                        let mut around: Vec<usize> = g.neighbors(v).map(|w| col[w]).collect();
                        around.sort_unstable();
                        (col[v], around)
                    })
                    .collect()
            })
            .collect();
        for sig in signatures.iter().flatten() {
            let next = table.len();
            table.entry(sig.clone()).or_insert(next);
        }
        let next_classes = table.len();
        for (col, sigs) in colors.iter_mut().zip(&signatures) {
            *col = sigs.iter().map(|s| table[s]).collect();
        }
        if next_classes == classes {
            let [ca, cb] = colors;
            return (ca, cb);
        }
        classes = next_classes;
    }
}

/// Vertices of `a` in the order they get assigned: repeatedly the vertex
/// with the most already-placed neighbours, then smallest color class, then
/// lowest index.
fn search_order(a: &SimpleGraph, colors: &[usize]) -> Vec<Vertex> {
    let n = a.vertex_count();
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for w in a.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

struct Search<'g> {
    a: &'g SimpleGraph,
    b: &'g SimpleGraph,
    ca: &'g [usize],
    cb: &'g [usize],
    order: &'g [Vertex],
    map: Vec<Vertex>,
    used: FixedBitSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for v in 0..self.b.vertex_count() {
            if self.used.contains(v) || self.cb[v] != self.ca[u] || !self.consistent(u, v, depth) {
                continue;
            }
            self.map[u] = v;
            self.used.insert(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.set(v, false);
            self.map[u] = usize::MAX;
        }
        false
    }

    fn consistent(&self, u: Vertex, v: Vertex, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&w| self.a.adjacent(u, w) == self.b.adjacent(v, self.map[w]))
    }
}
