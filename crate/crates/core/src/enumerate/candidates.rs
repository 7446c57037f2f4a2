//! Pivot order and trimmed candidate sets in a window intersection graph.

use crate::graph::{StaticGraph, Vertex};
use crate::param::IsolationParam;

/// How candidate sets are formed around a pivot.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Trimming {
    /// Later neighbors in degree order, peeled by the size threshold.
    #[default]
    Reference,
    /// The whole closed neighborhood `{v} ∪ N(v)`, no peeling.
    Untrimmed,
}

/// Vertices sorted by ascending degree, ties by id.
#[derive(Clone, Debug)]
pub struct DegreeOrder {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl DegreeOrder {
    pub fn new(g: &StaticGraph) -> Self {
        let n = g.vertex_count();
        // bucket sort by degree keeps ties in id order
        let max_deg = (0..n as Vertex).map(|v| g.degree(v)).max().unwrap_or(0);
        let mut buckets = vec![Vec::new(); max_deg + 1];
        for v in 0..n as Vertex {
            buckets[g.degree(v)].push(v);
        }
        let order: Vec<Vertex> = buckets.into_iter().flatten().collect();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i;
        }
        DegreeOrder { order, position }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v as usize]
    }
}

/// Members around a pivot that may host an avg-c-isolated clique whose
/// first vertex in degree order is the pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub pivot: Vertex,
    /// Sorted; empty when trimming proved no such clique exists.
    pub members: Vec<Vertex>,
    /// Lower bound on the size of any such clique, at least 2.
    pub min_size: usize,
}

impl CandidateSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `max(⌊deg(v) - c + 2⌋, 2)`
pub fn size_threshold(degree: usize, c: &IsolationParam) -> usize {
    c.floor_minus(degree as i64 + 2).max(2) as usize
}

/// Reference trimming: start from the pivot and its neighbors that come
/// later in `order`, then repeatedly drop members with fewer than `k - 1`
/// neighbors among the members. Every member of a clique of size `≥ k`
/// survives, so no qualifying clique is lost.
pub fn candidate_set(
    g: &StaticGraph,
    order: &DegreeOrder,
    pivot: Vertex,
    c: &IsolationParam,
) -> CandidateSet {
    let k = size_threshold(g.degree(pivot), c);
    let rank = order.position(pivot);
    let mut members: Vec<Vertex> = g
        .neighbors(pivot)
        .iter()
        .copied()
        .filter(|&u| order.position(u) > rank)
        .chain(std::iter::once(pivot))
        .collect();
    members.sort_unstable();

    let empty = |k| CandidateSet {
        pivot,
        members: Vec::new(),
        min_size: k,
    };
    loop {
        if members.len() < k {
            return empty(k);
        }
        let inner = |u: Vertex, set: &[Vertex]| set.iter().filter(|&&x| g.has_edge(u, x)).count();
        if inner(pivot, &members) + 1 < k {
            return empty(k);
        }
        let before = members.len();
        let snapshot = members.clone();
        members.retain(|&u| u == pivot || inner(u, &snapshot) + 1 >= k);
        if members.len() == before {
            return CandidateSet {
                pivot,
                members,
                min_size: k,
            };
        }
    }
}

/// `{v} ∪ N(v)` with the same size threshold as [`candidate_set`].
pub fn untrimmed_candidate_set(g: &StaticGraph, pivot: Vertex, c: &IsolationParam) -> CandidateSet {
    let mut members = g.neighbors(pivot).to_vec();
    members.push(pivot);
    members.sort_unstable();
    CandidateSet {
        pivot,
        members,
        min_size: size_threshold(g.degree(pivot), c),
    }
}
