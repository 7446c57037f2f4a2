//! Exhaustive reference enumeration.
//!
//! Scans every vertex subset on every window with bitmasks, keeps the
//! isolated temporal cliques, and filters them by the maximality rules
//! directly. Only the isolation predicate is shared with the fast path.

use std::collections::{BTreeSet, HashMap};

use crate::enumerate::{ResultSet, TemporalClique};
use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, TimeWindow, Vertex};
use crate::isolation::{is_isolated, IsolationSpec};

/// Size limits for [`brute_force_enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_vertices: usize,
    pub max_layers: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_vertices: 16,
            max_layers: 8,
        }
    }
}

/// Largest clique accepted by [`brute_force_isolated_subsets`].
pub const SUBSET_CAP: usize = 20;

/// Hard ceiling on the vertex cap: masks are `u64`.
const MASK_BITS: usize = 64;

fn to_vertices(mask: u64) -> Vec<Vertex> {
    (0..MASK_BITS as Vertex).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Adjacency rows of the window intersection as bitmasks.
fn window_rows(tg: &TemporalGraph, w: TimeWindow) -> Vec<u64> {
    let n = tg.vertex_count();
    (0..n as Vertex)
        .map(|u| {
            (0..n as Vertex)
                .filter(|&v| v != u && w.layers().all(|t| tg.has_edge(t, u, v)))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

fn is_clique_mask(rows: &[u64], mask: u64) -> bool {
    to_vertices(mask)
        .into_iter()
        .all(|v| mask & !(1u64 << v) & !rows[v as usize] == 0)
}

fn all_windows(tau: usize) -> impl Iterator<Item = TimeWindow> {
    (1..=tau).flat_map(move |a| (a..=tau).map(move |b| TimeWindow::new(a, b)))
}

/// Every maximal `spec`-isolated temporal clique of `tg`, within default caps.
pub fn brute_force_enumerate(tg: &TemporalGraph, spec: &IsolationSpec) -> Result<ResultSet> {
    brute_force_enumerate_with(tg, spec, OracleCaps::default())
}

pub fn brute_force_enumerate_with(tg: &TemporalGraph, spec: &IsolationSpec, caps: OracleCaps) -> Result<ResultSet> {
    let n = tg.vertex_count();
    let tau = tg.lifetime();
    if n > caps.max_vertices.min(MASK_BITS - 1) || tau > caps.max_layers {
        return Err(Error::OracleTooLarge(format!(
            "{n} vertices and {tau} layers exceed caps of {} and {}",
            caps.max_vertices, caps.max_layers
        )));
    }

    let mut isolated: HashMap<TimeWindow, Vec<u64>> = HashMap::new();
    for w in all_windows(tau) {
        let rows = window_rows(tg, w);
        for mask in 1u64..1 << n {
            if mask.count_ones() < 2 || !is_clique_mask(&rows, mask) {
                continue;
            }
            if is_isolated(tg, spec, &to_vertices(mask), w)? {
                isolated.entry(w).or_default().push(mask);
            }
        }
    }

    let dominated_in = |w: TimeWindow, pred: &dyn Fn(u64) -> bool| {
        isolated.get(&w).is_some_and(|ms| ms.iter().any(|&m| pred(m)))
    };
    let mut out = ResultSet::new();
    for (&w, masks) in &isolated {
        for &mask in masks {
            let strict_superset = |m: u64| m != mask && m & mask == mask;
            // same vertex set on a strictly larger window
            let time_dominated = all_windows(tau)
                .filter(|&v| v != w && v.contains(&w))
                .any(|v| dominated_in(v, &|m| m == mask));
            // strict vertex superset on the same window
            let vertex_dominated = dominated_in(w, &strict_superset);
            // usually kinds also reject strict supersets on larger windows
            let wide_dominated = spec.kind.is_usually()
                && all_windows(tau)
                    .filter(|&v| v != w && v.contains(&w))
                    .any(|v| dominated_in(v, &strict_superset));
            if !(time_dominated || vertex_dominated || wide_dominated) {
                out.insert(TemporalClique::new(to_vertices(mask), w));
            }
        }
    }
    Ok(out)
}

/// All inclusion-maximal subsets `C̃ ⊆ clique`, `|C̃| ≥ 2`, with `(C̃, w)`
/// `spec`-isolated. `clique` must be a temporal clique on `w`.
pub fn brute_force_isolated_subsets(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    spec: &IsolationSpec,
) -> Result<Vec<Vec<Vertex>>> {
    let k = clique.len();
    if k > SUBSET_CAP {
        return Err(Error::OracleTooLarge(format!(
            "clique of {k} vertices exceeds cap of {SUBSET_CAP}"
        )));
    }
    let mut hits: Vec<u32> = Vec::new();
    for mask in 1u32..1 << k {
        if mask.count_ones() < 2 {
            continue;
        }
        let subset: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| clique[i]).collect();
        if is_isolated(tg, spec, &subset, w)? {
            hits.push(mask);
        }
    }
    let maximal: BTreeSet<Vec<Vertex>> = hits
        .iter()
        .filter(|&&m| !hits.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..k).filter(|i| m >> i & 1 == 1).map(|i| clique[i]).collect())
        .collect();
    Ok(maximal.into_iter().collect())
}

/// Δ-cliques `(C, [a, b])` with `|C| ≥ 2` and `b - a ≥ Δ`: `C` is complete in
/// the union of layers `t ..= t + Δ` for every `t ∈ [a, b - Δ]`.
pub fn brute_force_delta_cliques(tg: &TemporalGraph, delta: usize) -> Result<BTreeSet<TemporalClique>> {
    let n = tg.vertex_count();
    if n >= MASK_BITS {
        return Err(Error::OracleTooLarge(format!("{n} vertices")));
    }
    let tau = tg.lifetime();
    // union rows for each start t with t + Δ ≤ τ
    let unions: Vec<Vec<u64>> = (1..=tau.saturating_sub(delta))
        .map(|t| {
            (0..n as Vertex)
                .map(|u| {
                    (0..n as Vertex)
                        .filter(|&v| v != u && (t..=t + delta).any(|s| tg.has_edge(s, u, v)))
                        .fold(0u64, |m, v| m | 1 << v)
                })
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for a in 1..=tau {
        for b in a + delta..=tau {
            for mask in 1u64..1 << n {
                if mask.count_ones() < 2 {
                    continue;
                }
                if (a..=b - delta).all(|t| is_clique_mask(&unions[t - 1], mask)) {
                    out.insert(TemporalClique::new(to_vertices(mask), TimeWindow::new(a, b)));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolation::IsolationKind;

    fn graph_x() -> TemporalGraph {
        TemporalGraph::new(
            4,
            vec![
                vec![(0, 1), (0, 2), (1, 2), (0, 3)],
                vec![(0, 1), (0, 2), (1, 2)],
            ],
        )
        .unwrap()
    }

    fn spec(kind: IsolationKind, c: &str) -> IsolationSpec {
        IsolationSpec::new(kind, c.parse().unwrap())
    }

    fn listing(rs: &ResultSet) -> Vec<(Vec<u32>, usize, usize)> {
        rs.iter().map(|t| (t.vertices.clone(), t.window.a, t.window.b)).collect()
    }

    #[test]
    fn graph_x_epsilon() {
        let rs = brute_force_enumerate(&graph_x(), &spec(IsolationKind::AlltimeMax, "0.001")).unwrap();
        assert_eq!(listing(&rs), vec![(vec![0, 1, 2], 2, 2)]);
    }

    #[test]
    fn graph_x_alltime_max() {
        let rs = brute_force_enumerate(&graph_x(), &spec(IsolationKind::AlltimeMax, "1.5")).unwrap();
        assert_eq!(listing(&rs), vec![(vec![0, 1, 2], 1, 2)]);
    }

    #[test]
    fn empty_graph() {
        let tg = TemporalGraph::new(5, vec![Vec::<(u32, u32)>::new(); 2]).unwrap();
        for kind in IsolationKind::ALL {
            assert!(brute_force_enumerate(&tg, &spec(kind, "1")).unwrap().is_empty());
        }
    }

    #[test]
    fn caps_are_enforced() {
        let tg = TemporalGraph::new(17, vec![vec![(0, 1)]]).unwrap();
        let err = brute_force_enumerate(&tg, &spec(IsolationKind::AlltimeMax, "1")).unwrap_err();
        assert!(matches!(err, Error::OracleTooLarge(_)));
        let caps = OracleCaps { max_vertices: 20, max_layers: 8 };
        assert!(brute_force_enumerate_with(&tg, &spec(IsolationKind::AlltimeMax, "1"), caps).is_ok());
    }

    #[test]
    fn isolated_subsets_of_graph_x() {
        let tg = graph_x();
        let w = TimeWindow::new(1, 2);
        let s = spec(IsolationKind::AlltimeMax, "1.5");
        assert_eq!(brute_force_isolated_subsets(&tg, &[0, 1, 2], w, &s).unwrap(), vec![vec![0, 1, 2]]);
        let s = spec(IsolationKind::AlltimeMax, "1");
        // {2, 3} has outdegree 1 to vertex 1 at every layer
        assert!(brute_force_isolated_subsets(&tg, &[0, 1, 2], w, &s).unwrap().is_empty());
        let too_big: Vec<Vertex> = (0..21).collect();
        assert!(brute_force_isolated_subsets(&tg, &too_big, w, &s).is_err());
    }

    #[test]
    fn delta_cliques_small() {
        let tg = TemporalGraph::new(3, vec![vec![(0, 1)], vec![], vec![(0, 1)]]).unwrap();
        let zero = brute_force_delta_cliques(&tg, 0).unwrap();
        assert_eq!(zero.len(), 2);
        let one = brute_force_delta_cliques(&tg, 1).unwrap();
        // {0, 1} on [1, 2], [2, 3], [1, 3]
        assert_eq!(one.len(), 3);
    }
}
