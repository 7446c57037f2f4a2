//! Maximality checks for phase-one candidates.
//!
//! An isolated temporal clique `(C, [a, b])` is reported when no isolated
//! temporal clique with the same vertex set lives on a strictly larger window
//! and no strict vertex superset is isolated on `[a, b]`. For the usually
//! kinds, isolation does not pass to subwindows, so every superwindow on
//! which `C` stays a clique is scanned and must also admit no isolated strict
//! superset.

use crate::graph::{TemporalGraph, TimeWindow, Vertex};
use crate::isolation::{is_isolated_clique, IsolationKind, IsolationSpec};

use super::cliques::maximal_cliques_by;
use super::result::{ResultSet, TemporalClique};

fn clique_in_layer(tg: &TemporalGraph, set: &[Vertex], t: usize) -> bool {
    tg.layer(t).is_clique(set)
}

fn isolated_on(tg: &TemporalGraph, spec: &IsolationSpec, set: &[Vertex], w: TimeWindow) -> bool {
    tg.is_temporal_clique(set, w) && is_isolated_clique(tg, spec, set, w)
}

/// Maximality for alltime-avg, alltime-max and avg-alltime: one-step window
/// extensions, then vertex maximality. `rs` must be the complete phase-one
/// result set (only consulted for alltime-avg).
pub fn is_maximal_alltime_family(
    tg: &TemporalGraph,
    rc: &TemporalClique,
    spec: &IsolationSpec,
    rs: &ResultSet,
) -> bool {
    let TimeWindow { a, b } = rc.window;
    let wider = [
        (a > 1).then(|| TimeWindow::new(a - 1, b)),
        (b < tg.lifetime()).then(|| TimeWindow::new(a, b + 1)),
    ];
    if wider
        .into_iter()
        .flatten()
        .any(|w| isolated_on(tg, spec, &rc.vertices, w))
    {
        return false;
    }
    match spec.kind {
        IsolationKind::AlltimeAvg => is_vertex_maximal_resultset(rc, rs),
        _ => is_vertex_maximal_neighborhood(tg, rc, spec),
    }
}

/// Maximality for max-usually and usually-avg: scans every window
/// `[a', b'] ⊇ [a, b]` reachable while `C` stays a clique.
pub fn is_maximal_usually_family(tg: &TemporalGraph, rc: &TemporalClique, spec: &IsolationSpec) -> bool {
    let c = &rc.vertices;
    let TimeWindow { a, b } = rc.window;
    for start in (1..=a).rev() {
        if !clique_in_layer(tg, c, start) {
            break;
        }
        for end in b..=tg.lifetime() {
            if !clique_in_layer(tg, c, end) {
                break;
            }
            let w = TimeWindow::new(start, end);
            if w != rc.window && is_isolated_clique(tg, spec, c, w) {
                return false;
            }
            let probe = TemporalClique {
                window: w,
                vertices: c.clone(),
            };
            if !is_vertex_maximal_neighborhood(tg, &probe, spec) {
                return false;
            }
        }
    }
    true
}

/// Vertex maximality by lookup: false iff `rs` holds a strict superset of
/// `rc` on the identical window.
pub fn is_vertex_maximal_resultset(rc: &TemporalClique, rs: &ResultSet) -> bool {
    !rs.has_strict_superset(rc)
}

/// Vertex maximality through the common neighbourhood: every maximal clique
/// `D` among the vertices adjacent to all of `C` on the window is peeled,
/// highest score first, until `(C ∪ D)` is isolated or `D` is exhausted.
/// False iff some nonempty `D` survives, i.e. an isolated strict superset of
/// `C` exists on the window.
///
/// # Panics
/// For alltime-avg and usually-max.
pub fn is_vertex_maximal_neighborhood(tg: &TemporalGraph, rc: &TemporalClique, spec: &IsolationSpec) -> bool {
    let use_sum = match spec.kind {
        IsolationKind::MaxUsually | IsolationKind::UsuallyAvg => true,
        IsolationKind::AlltimeMax | IsolationKind::AvgAlltime => false,
        other => panic!("neighbourhood vertex-maximality does not apply to {other}"),
    };
    let c = &rc.vertices;
    let w = rc.window;
    let always = |u: Vertex, v: Vertex| w.layers().all(|t| tg.has_edge(t, u, v));

    // pivot: smallest degree in layer a keeps the scan short
    let Some(&anchor) = c.iter().min_by_key(|&&v| (tg.layer(w.a).degree(v), v)) else {
        return true;
    };
    let common: Vec<Vertex> = tg
        .layer(w.a)
        .neighbors(anchor)
        .iter()
        .copied()
        .filter(|u| c.binary_search(u).is_err())
        .filter(|&u| c.iter().all(|&x| always(u, x)))
        .collect();
    if common.is_empty() {
        return true;
    }
    let score = |v: Vertex| {
        let degs = w.layers().map(|t| tg.layer(t).degree(v) as i64);
        if use_sum {
            degs.sum::<i64>()
        } else {
            degs.max().unwrap_or(0)
        }
    };
    for mut extra in maximal_cliques_by(&common, 1, always) {
        loop {
            if extra.is_empty() {
                break;
            }
            let mut joined: Vec<Vertex> = c.iter().chain(&extra).copied().collect();
            joined.sort_unstable();
            if is_isolated_clique(tg, spec, &joined, w) {
                return false;
            }
            let (pos, _) = extra
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| (score(v), std::cmp::Reverse(v)))
                .expect("nonempty");
            extra.remove(pos);
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn tc(vs: &[Vertex], a: usize, b: usize) -> TemporalClique {
        TemporalClique::new(vs.to_vec(), TimeWindow::new(a, b))
    }

    #[test]
    fn alltime_family_window_extension() {
        let tg = graph_x();
        let s = spec(IsolationKind::AlltimeMax, "1.5");
        let rs = ResultSet::new();
        assert!(!is_maximal_alltime_family(&tg, &tc(&[0, 1, 2], 2, 2), &s, &rs));
        assert!(is_maximal_alltime_family(&tg, &tc(&[0, 1, 2], 1, 2), &s, &rs));
    }

    #[test]
    fn neighbourhood_finds_superset() {
        let tg = graph_x();
        let s = spec(IsolationKind::AlltimeMax, "1.5");
        assert!(!is_vertex_maximal_neighborhood(&tg, &tc(&[1, 2], 1, 2), &s));
        assert!(is_vertex_maximal_neighborhood(&tg, &tc(&[0, 1, 2], 1, 2), &s));
    }

    #[test]
    fn component_spanning_clique_is_vertex_maximal() {
        let tg = TemporalGraph::new(5, vec![vec![(0, 1), (2, 3), (3, 4), (2, 4)]]).unwrap();
        let s = spec(IsolationKind::AvgAlltime, "1");
        assert!(is_vertex_maximal_neighborhood(&tg, &tc(&[2, 3, 4], 1, 1), &s));
        assert!(is_vertex_maximal_neighborhood(&tg, &tc(&[0, 1], 1, 1), &s));
    }

    #[test]
    fn resultset_lookup() {
        let rs: ResultSet = [tc(&[0, 1, 2], 1, 2)].into_iter().collect();
        assert!(!is_vertex_maximal_resultset(&tc(&[1, 2], 1, 2), &rs));
        assert!(is_vertex_maximal_resultset(&tc(&[0, 1, 2], 1, 2), &rs));
        assert!(is_vertex_maximal_resultset(&tc(&[1, 2], 1, 1), &rs));
    }

    #[test]
    fn usually_scan_degenerates_to_one_window() {
        // C = {0, 1} is a clique only in layer 2
        let tg = TemporalGraph::new(3, vec![vec![(1, 2)], vec![(0, 1)], vec![(0, 2)]]).unwrap();
        let s = spec(IsolationKind::UsuallyAvg, "1");
        assert!(is_maximal_usually_family(&tg, &tc(&[0, 1], 2, 2), &s));
    }

    #[test]
    fn usually_avg_rejects_wider_isolated_window() {
        // layer 1 carries an outgoing edge, layer 2 is clean: the clean layer
        // pulls the average below the threshold on [1, 2]
        let tg = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2)], vec![(0, 1)]]).unwrap();
        let s = spec(IsolationKind::UsuallyAvg, "0.5");
        // [1, 2]: total 1 < 0.5 * 2 * 2 = 2; [2, 2]: total 0 < 1
        assert!(is_isolated_clique(&tg, &s, &[0, 1], TimeWindow::new(1, 2)));
        assert!(!is_maximal_usually_family(&tg, &tc(&[0, 1], 2, 2), &s));
        assert!(is_maximal_usually_family(&tg, &tc(&[0, 1], 1, 2), &s));
    }
}
