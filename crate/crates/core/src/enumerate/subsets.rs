//! Maximal isolated subsets of a clique on a fixed window.
//!
//! Each routine takes a clique `C` of the window intersection graph and its
//! minimum intersection degree `δ`, and returns every inclusion-maximal
//! `C̃ ⊆ C` with `|C̃| ≥ 2` such that `(C̃, window)` is isolated. Only the
//! highest-scored vertices are ever removal candidates: the `⌊δ - c + 2⌋`
//! lowest-scored members belong to every maximal isolated subset, which
//! leaves `d = |C| - ⌊δ - c + 2⌋ = ⌈|C| - δ + c - 2⌉` removable vertices.

use std::collections::BTreeSet;

use crate::graph::{TemporalGraph, TimeWindow, Vertex};
use crate::isolation::{IsolationKind, IsolationSpec};
use crate::param::IsolationParam;

use super::result::is_strict_subset;

/// Per-layer degrees of the clique members, `rows[r][i] = deg_{G_{a+i}}(C[r])`.
struct LayerDegrees {
    rows: Vec<Vec<i64>>,
}

impl LayerDegrees {
    fn new(tg: &TemporalGraph, clique: &[Vertex], w: TimeWindow) -> Self {
        let rows = clique
            .iter()
            .map(|&v| w.layers().map(|t| tg.layer(t).degree(v) as i64).collect())
            .collect();
        LayerDegrees { rows }
    }

    fn sum(&self, r: usize) -> i64 {
        self.rows[r].iter().sum()
    }

    fn max(&self, r: usize) -> i64 {
        self.rows[r].iter().copied().max().unwrap_or(0)
    }
}

/// `d = |C| - ⌊δ - c + 2⌋`, clamped to `0..=|C|`. Rounding the kept count
/// up instead (`⌊|C| - δ + c - 2⌋`) loses subsets when `c` is fractional.
pub fn removal_budget(size: usize, min_degree: usize, c: &IsolationParam) -> usize {
    (size as i64 - c.floor_minus(min_degree as i64 + 2)).clamp(0, size as i64) as usize
}

/// Indices `0..n` ordered by descending score, ties by ascending index.
fn by_score_desc(scores: &[i64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by_key(|&r| (std::cmp::Reverse(scores[r]), r));
    idx
}

fn keep_maximal(found: BTreeSet<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let all: Vec<Vec<Vertex>> = found.into_iter().collect();
    all.iter()
        .filter(|s| !all.iter().any(|t| is_strict_subset(s, t)))
        .cloned()
        .collect()
}

/// Greedy peeling for alltime-max and max-usually, where a single offending
/// vertex can be identified at every step. Returns at most one set.
///
/// # Panics
/// If `spec.kind` is neither alltime-max nor max-usually.
pub fn isolated_subsets_greedy(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    min_degree: usize,
    spec: &IsolationSpec,
) -> Vec<Vec<Vertex>> {
    let degrees = LayerDegrees::new(tg, clique, w);
    let (scores, mult): (Vec<i64>, i64) = match spec.kind {
        IsolationKind::AlltimeMax => ((0..clique.len()).map(|r| degrees.max(r)).collect(), 1),
        IsolationKind::MaxUsually => (
            (0..clique.len()).map(|r| degrees.sum(r)).collect(),
            w.length() as i64,
        ),
        other => panic!("greedy isolated subsets do not apply to {other}"),
    };
    let c = &spec.c;
    let floor = c.floor_minus(min_degree as i64 + 2).max(2) as usize;
    let mut alive: Vec<usize> = (0..clique.len()).collect();
    while alive.len() >= floor {
        let base = alive.len() as i64 - 1;
        // offending: s_v ≥ mult · (|C| - 1 + c)
        let worst = alive
            .iter()
            .enumerate()
            .filter(|&(_, &r)| !c.below(scores[r], mult, base))
            .max_by_key(|&(_, &r)| (scores[r], std::cmp::Reverse(r)));
        match worst {
            Some((pos, _)) => {
                alive.remove(pos);
            }
            None => return vec![alive.iter().map(|&r| clique[r]).collect()],
        }
    }
    Vec::new()
}

/// Ordered removal-set search for usually-avg and avg-alltime, where the
/// isolation test only depends on per-vertex scores.
///
/// # Panics
/// If `spec.kind` is neither usually-avg nor avg-alltime.
pub fn isolated_subsets_search(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    min_degree: usize,
    spec: &IsolationSpec,
) -> Vec<Vec<Vertex>> {
    let degrees = LayerDegrees::new(tg, clique, w);
    let (scores, mult): (Vec<i64>, i64) = match spec.kind {
        IsolationKind::UsuallyAvg => (
            (0..clique.len()).map(|r| degrees.sum(r)).collect(),
            w.length() as i64,
        ),
        IsolationKind::AvgAlltime => ((0..clique.len()).map(|r| degrees.max(r)).collect(), 1),
        other => panic!("removal-set search does not apply to {other}"),
    };
    let c = &spec.c;
    let d = removal_budget(clique.len(), min_degree, c);
    let top = &by_score_desc(&scores)[..d];

    let total: i64 = scores.iter().sum();
    let mut found = BTreeSet::new();
    // removal sets as increasing positions into `top`
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for removed in frontier {
            let size = clique.len() - removed.len();
            if size < 2 {
                continue;
            }
            let kept_score = total - removed.iter().map(|&p| scores[top[p]]).sum::<i64>();
            let size = size as i64;
            // violation: Σ s ≥ mult · |C'| · (|C'| - 1 + c)
            if c.below(kept_score, mult * size, size - 1) {
                let mut gone: Vec<usize> = removed.iter().map(|&p| top[p]).collect();
                gone.sort_unstable();
                let kept = (0..clique.len())
                    .filter(|r| gone.binary_search(r).is_err())
                    .map(|r| clique[r])
                    .collect();
                found.insert(kept);
            } else {
                let from = removed.last().map_or(0, |&p| p + 1);
                for p in from..d {
                    let mut grown = removed.clone();
                    grown.push(p);
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    keep_maximal(found)
}

/// Layer-driven search for alltime-avg: at each node the earliest layer in
/// which the current set is not avg-isolated supplies the removal candidates.
pub fn isolated_subsets_alltime_avg(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    min_degree: usize,
    c: &IsolationParam,
) -> Vec<Vec<Vertex>> {
    let degrees = LayerDegrees::new(tg, clique, w);
    let d = removal_budget(clique.len(), min_degree, c);
    // |C'| > δ - c + 2 ⇔ |C'| > ⌊δ + 2 - c⌋
    let size_guard = c.floor_minus(min_degree as i64 + 2);

    let mut found = BTreeSet::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for removed in frontier {
            if !seen.insert(removed.clone()) {
                continue;
            }
            let kept: Vec<usize> = (0..clique.len())
                .filter(|r| removed.binary_search(r).is_err())
                .collect();
            if kept.len() < 2 {
                continue;
            }
            let size = kept.len() as i64;
            let violated = (0..w.length()).find(|&i| {
                let layer_sum: i64 = kept.iter().map(|&r| degrees.rows[r][i]).sum();
                !c.below(layer_sum, size, size - 1)
            });
            match violated {
                None => {
                    found.insert(kept.iter().map(|&r| clique[r]).collect::<Vec<_>>());
                }
                Some(i) if size > size_guard => {
                    let layer_scores: Vec<i64> = kept.iter().map(|&r| degrees.rows[r][i]).collect();
                    for pos in by_score_desc(&layer_scores).into_iter().take(d) {
                        let mut grown = removed.clone();
                        grown.push(kept[pos]);
                        grown.sort_unstable();
                        next.insert(grown);
                    }
                }
                Some(_) => {}
            }
        }
        frontier = next;
    }
    keep_maximal(found)
}

/// Dispatches on the isolation kind.
///
/// # Panics
/// For usually-max, which has no bounded subset search.
pub fn isolated_subsets(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    min_degree: usize,
    spec: &IsolationSpec,
) -> Vec<Vec<Vertex>> {
    match spec.kind {
        IsolationKind::AlltimeMax | IsolationKind::MaxUsually => {
            isolated_subsets_greedy(tg, clique, w, min_degree, spec)
        }
        IsolationKind::UsuallyAvg | IsolationKind::AvgAlltime => {
            isolated_subsets_search(tg, clique, w, min_degree, spec)
        }
        IsolationKind::AlltimeAvg => isolated_subsets_alltime_avg(tg, clique, w, min_degree, &spec.c),
        IsolationKind::UsuallyMax => panic!("usually-max has no isolated-subset search"),
    }
}
