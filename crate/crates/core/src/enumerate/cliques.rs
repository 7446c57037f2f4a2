//! Maximal cliques of bounded-below size inside a small vertex set.

use crate::graph::{StaticGraph, Vertex};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

struct Search<'a> {
    members: &'a [Vertex],
    adj: Vec<Bits>,
    min_size: usize,
    found: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: Bits, mut excl: Bits) {
        if cand.is_empty() {
            if excl.is_empty() && clique.len() >= self.min_size {
                let mut c: Vec<Vertex> = clique.iter().map(|&i| self.members[i]).collect();
                c.sort_unstable();
                self.found.push(c);
            }
            return;
        }
        if clique.len() + cand.count() < self.min_size {
            return;
        }
        // Tomita pivot: most candidate neighbours
        let pivot = cand
            .ones()
            .chain(excl.ones())
            .max_by_key(|&u| (cand.and_count(&self.adj[u]), std::cmp::Reverse(u)))
            .expect("candidate set is nonempty");
        let branch: Vec<usize> = cand.and_not(&self.adj[pivot]).ones().collect();
        for u in branch {
            clique.push(u);
            self.expand(clique, cand.and(&self.adj[u]), excl.and(&self.adj[u]));
            clique.pop();
            cand.remove(u);
            excl.insert(u);
        }
    }
}

/// All maximal cliques of the subgraph induced by `members` that have at
/// least `min_size` vertices, under the adjacency relation `adjacent`.
/// Each clique is sorted; the list is sorted.
pub fn maximal_cliques_by<F>(members: &[Vertex], min_size: usize, adjacent: F) -> Vec<Vec<Vertex>>
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let m = members.len();
    let mut adj = vec![Bits::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if adjacent(members[i], members[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut search = Search {
        members,
        adj,
        min_size,
        found: Vec::new(),
    };
    if m > 0 {
        search.expand(&mut Vec::new(), Bits::full(m), Bits::new(m));
    }
    let mut found = search.found;
    found.sort();
    found
}

/// All maximal cliques of `g[members]` with at least `min_size` vertices.
pub fn maximal_cliques_min_size(g: &StaticGraph, members: &[Vertex], min_size: usize) -> Vec<Vec<Vertex>> {
    maximal_cliques_by(members, min_size, |u, v| g.has_edge(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = StaticGraph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(maximal_cliques_min_size(&g, &[0, 1, 2], 3), vec![vec![0, 1, 2]]);
        assert!(maximal_cliques_min_size(&g, &[0, 1, 2], 4).is_empty());
    }

    #[test]
    fn four_cycle() {
        let g = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            maximal_cliques_min_size(&g, &[0, 1, 2, 3], 2),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn induced_subgraph_only() {
        // K4 restricted to three vertices
        let g = StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(maximal_cliques_min_size(&g, &[0, 2, 3], 2), vec![vec![0, 2, 3]]);
    }

    #[test]
    fn isolated_members_are_not_reported_at_size_two() {
        let g = StaticGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(maximal_cliques_min_size(&g, &[0, 1, 2], 2), vec![vec![0, 1]]);
        assert_eq!(maximal_cliques_min_size(&g, &[0, 1, 2], 1), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn matches_brute_force_on_wide_sets() {
        // 70 vertices spans two bit words; edges i ~ j iff (i * j) % 7 < 3
        let n = 70u32;
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (i * j) % 7 < 3)
            .collect();
        let g = StaticGraph::from_edges(n as usize, edges).unwrap();
        let members: Vec<Vertex> = (0..n).step_by(5).collect();
        let fast = maximal_cliques_min_size(&g, &members, 2);
        // brute force over all subsets of the 14 members
        let mut slow = Vec::new();
        let m = members.len();
        for mask in 1u32..1 << m {
            let set: Vec<Vertex> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
            if set.len() < 2 || !g.is_clique(&set) {
                continue;
            }
            let extendable = members
                .iter()
                .any(|&x| !set.contains(&x) && set.iter().all(|&y| g.has_edge(x, y)));
            if !extendable {
                slow.push(set);
            }
        }
        slow.sort();
        assert_eq!(fast, slow);
    }
}
