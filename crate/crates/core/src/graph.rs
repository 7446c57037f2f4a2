//! Temporal graphs, their layers, and window intersection graphs.

use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex id in `0..vertex_count`.
pub type Vertex = u32;

/// Graphs up to this many vertices get fixed-width adjacency bit rows.
pub const BIT_ROW_LIMIT: usize = 2048;

/// Closed interval `[a, b]` of 1-based layer indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimeWindow {
    pub a: usize,
    pub b: usize,
}

impl TimeWindow {
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert!(1 <= a && a <= b, "malformed window [{a}, {b}]");
        TimeWindow { a, b }
    }

    pub fn single(t: usize) -> Self {
        TimeWindow::new(t, t)
    }

    /// Number of layers, `b - a + 1`.
    pub fn length(&self) -> usize {
        self.b + 1 - self.a
    }

    pub fn layers(&self) -> std::ops::RangeInclusive<usize> {
        self.a..=self.b
    }

    /// `self ⊇ other`
    pub fn contains(&self, other: &TimeWindow) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    pub(crate) fn validate(&self, layers: usize) -> Result<()> {
        if self.a < 1 || self.a > self.b || self.b > layers {
            return Err(Error::InvalidWindow {
                a: self.a,
                b: self.b,
                layers,
            });
        }
        Ok(())
    }
}

impl fmt::Display for TimeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    #[inline]
    fn get(&self, u: Vertex, v: Vertex) -> bool {
        let w = self.bits[u as usize * self.words + (v as usize >> 6)];
        w >> (v & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: Vertex, v: Vertex, on: bool) {
        let w = &mut self.bits[u as usize * self.words + (v as usize >> 6)];
        if on {
            *w |= 1 << (v & 63);
        } else {
            *w &= !(1 << (v & 63));
        }
    }
}

/// Simple undirected graph over `0..n` with sorted neighbor lists.
#[derive(Clone, Debug)]
pub struct StaticGraph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    rows: Option<BitRows>,
}

impl PartialEq for StaticGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for StaticGraph {}

impl StaticGraph {
    pub fn empty(n: usize) -> Self {
        StaticGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            rows: None,
        }
    }

    /// Builds a graph from unordered pairs. Repeated pairs collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(StaticGraph {
            adj,
            edge_count: edge_count / 2,
            rows: None,
        })
    }

    /// Adds adjacency bit rows if the graph is small enough.
    pub fn with_bit_rows(mut self) -> Self {
        let n = self.adj.len();
        if n <= BIT_ROW_LIMIT && self.rows.is_none() {
            let mut rows = BitRows::new(n);
            for (u, list) in self.adj.iter().enumerate() {
                for &v in list {
                    rows.set(u as Vertex, v, true);
                }
            }
            self.rows = Some(rows);
        }
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if let Some(rows) = &self.rows {
            return rows.get(u, v);
        }
        let (nu, nv) = (&self.adj[u as usize], &self.adj[v as usize]);
        if nu.len() <= nv.len() {
            nu.binary_search(&v).is_ok()
        } else {
            nv.binary_search(&u).is_ok()
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as Vertex;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Number of edges from `v` to vertices outside the sorted set `set`.
    pub fn outdeg(&self, v: Vertex, set: &[Vertex]) -> Result<usize> {
        if set.binary_search(&v).is_err() {
            return Err(Error::VertexNotInSet(v));
        }
        Ok(self.outdeg_unchecked(v, set))
    }

    pub(crate) fn outdeg_unchecked(&self, v: Vertex, set: &[Vertex]) -> usize {
        debug_assert!(set.windows(2).all(|p| p[0] < p[1]));
        let inside = self.adj[v as usize]
            .iter()
            .filter(|u| set.binary_search(u).is_ok())
            .count();
        self.degree(v) - inside
    }

    /// `Σ_{v ∈ set} outdeg(v, set)`
    pub fn outdeg_set(&self, set: &[Vertex]) -> usize {
        set.iter().map(|&v| self.outdeg_unchecked(v, set)).sum()
    }

    pub fn min_degree(&self, set: &[Vertex]) -> Result<usize> {
        set.iter()
            .map(|&v| self.degree(v))
            .min()
            .ok_or(Error::EmptySet)
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Drops every edge for which the symmetric predicate `keep` fails.
    fn retain_edges(&mut self, keep: impl Fn(Vertex, Vertex) -> bool) {
        let mut total = 0;
        for (u, list) in self.adj.iter_mut().enumerate() {
            let u = u as Vertex;
            let rows = &mut self.rows;
            list.retain(|&v| {
                let ok = keep(u, v);
                if !ok {
                    if let Some(rows) = rows.as_mut() {
                        rows.set(u, v, false);
                    }
                }
                ok
            });
            total += list.len();
        }
        self.edge_count = total / 2;
    }
}

/// Fixed vertex set with a sequence of layers `G_1 .. G_τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    vertex_count: usize,
    layers: Vec<StaticGraph>,
}

impl TemporalGraph {
    /// `layers[t - 1]` holds the edges of layer `t`.
    pub fn new<L, E>(vertex_count: usize, layers: L) -> Result<Self>
    where
        L: IntoIterator<Item = E>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let layers = layers
            .into_iter()
            .map(|edges| StaticGraph::from_edges(vertex_count, edges))
            .collect::<Result<Vec<_>>>()?;
        Self::from_layers(vertex_count, layers)
    }

    pub fn from_layers(vertex_count: usize, layers: Vec<StaticGraph>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::InvalidGraph("a temporal graph needs at least one layer".into()));
        }
        if let Some(bad) = layers.iter().find(|g| g.vertex_count() != vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "layer has {} vertices, expected {vertex_count}",
                bad.vertex_count()
            )));
        }
        Ok(TemporalGraph {
            vertex_count,
            layers,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// τ
    pub fn lifetime(&self) -> usize {
        self.layers.len()
    }

    /// Layer `t`, 1-based.
    pub fn layer(&self, t: usize) -> &StaticGraph {
        &self.layers[t - 1]
    }

    pub fn layers(&self) -> &[StaticGraph] {
        &self.layers
    }

    pub fn has_edge(&self, t: usize, u: Vertex, v: Vertex) -> bool {
        self.layer(t).has_edge(u, v)
    }

    /// |TE|
    pub fn time_edge_count(&self) -> usize {
        self.layers.iter().map(StaticGraph::edge_count).sum()
    }

    pub fn full_window(&self) -> TimeWindow {
        TimeWindow::new(1, self.lifetime())
    }

    pub fn check_window(&self, w: TimeWindow) -> Result<()> {
        w.validate(self.lifetime())
    }

    /// Replaces layer `i` by the union of layers `i ..= i + delta`, leaving
    /// `τ - delta` layers. Δ-cliques `(C, [a, b])` of `self` correspond to
    /// temporal cliques `(C, [a, b - delta])` of the result.
    pub fn delta_union_transform(&self, delta: usize) -> Result<TemporalGraph> {
        let tau = self.lifetime();
        if delta >= tau {
            return Err(Error::WindowExceedsLifetime { delta, layers: tau });
        }
        if delta == 0 {
            return Ok(self.clone());
        }
        let layers = (1..=tau - delta)
            .map(|i| {
                let edges = (i..=i + delta).flat_map(|t| self.layer(t).edges());
                StaticGraph::from_edges(self.vertex_count, edges)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_layers(self.vertex_count, layers)
    }

    /// `⋂_{t=a}^{b} G_t`
    pub fn intersection_graph(&self, w: TimeWindow) -> Result<StaticGraph> {
        self.check_window(w)?;
        let first = self.layer(w.a);
        let edges = first
            .edges()
            .filter(|&(u, v)| (w.a + 1..=w.b).all(|t| self.has_edge(t, u, v)));
        StaticGraph::from_edges(self.vertex_count, edges)
    }

    /// True iff `set` (sorted, at least two vertices) is complete in every
    /// layer of `w`.
    pub fn is_temporal_clique(&self, set: &[Vertex], w: TimeWindow) -> bool {
        if set.len() < 2 || self.check_window(w).is_err() {
            return false;
        }
        w.layers().all(|t| self.layer(t).is_clique(set))
    }
}

/// Cursor over `⋂_{t=a}^{b} G_t` that grows `b` one layer at a time.
#[derive(Clone, Debug)]
pub struct IntersectionView<'g> {
    base: &'g TemporalGraph,
    window: TimeWindow,
    graph: StaticGraph,
}

impl<'g> IntersectionView<'g> {
    /// View of the single-layer window `[a, a]`.
    pub fn start(base: &'g TemporalGraph, a: usize) -> Result<Self> {
        let window = TimeWindow { a, b: a };
        base.check_window(window)?;
        Ok(IntersectionView {
            base,
            window,
            graph: base.layer(a).clone().with_bit_rows(),
        })
    }

    pub fn window(&self) -> TimeWindow {
        self.window
    }

    pub fn graph(&self) -> &StaticGraph {
        &self.graph
    }

    pub fn base(&self) -> &'g TemporalGraph {
        self.base
    }

    /// Moves to `[a, b + 1]`, dropping every edge absent from layer `b + 1`.
    pub fn extend(&mut self) -> Result<()> {
        if self.window.b >= self.base.lifetime() {
            return Err(Error::AtLifetimeEnd(self.window));
        }
        let next = self.base.layer(self.window.b + 1);
        self.graph.retain_edges(|u, v| next.has_edge(u, v));
        self.window.b += 1;
        Ok(())
    }

    pub fn into_graph(self) -> StaticGraph {
        self.graph
    }
}
