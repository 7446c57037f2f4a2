//! Fast enumeration of maximal isolated temporal cliques.
//!
//! Phase one walks every window `[a, b]` with an incrementally maintained
//! intersection graph. For each pivot it trims a candidate set, lists the
//! maximal cliques above the size threshold, and collects the maximal
//! isolated subsets of each. Phase two keeps the candidates that pass the
//! kind-specific maximality check.

mod candidates;
mod cliques;
mod maximal;
mod result;
mod subsets;

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{IntersectionView, TemporalGraph};
use crate::isolation::{IsolationKind, IsolationSpec};

pub use candidates::{candidate_set, size_threshold, untrimmed_candidate_set, CandidateSet, DegreeOrder, Trimming};
pub use cliques::{maximal_cliques_by, maximal_cliques_min_size};
pub use maximal::{
    is_maximal_alltime_family, is_maximal_usually_family, is_vertex_maximal_neighborhood,
    is_vertex_maximal_resultset,
};
pub use result::{ResultSet, TemporalClique};
pub use subsets::{
    isolated_subsets, isolated_subsets_alltime_avg, isolated_subsets_greedy, isolated_subsets_search,
    removal_budget,
};

/// Configured run of the fast enumerator.
#[derive(Clone, Debug)]
pub struct Enumerator<'g> {
    tg: &'g TemporalGraph,
    spec: IsolationSpec,
    trimming: Trimming,
    threads: Option<usize>,
    time_limit: Option<Duration>,
}

impl<'g> Enumerator<'g> {
    pub fn new(tg: &'g TemporalGraph, spec: IsolationSpec) -> Result<Self> {
        if spec.kind == IsolationKind::UsuallyMax {
            return Err(Error::UnsupportedKind);
        }
        Ok(Enumerator {
            tg,
            spec,
            trimming: Trimming::Reference,
            threads: None,
            time_limit: None,
        })
    }

    pub fn trimming(mut self, trimming: Trimming) -> Self {
        self.trimming = trimming;
        self
    }

    /// Worker count; `None` uses the global pool.
    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self
    }

    /// Both phases; the maximal isolated temporal cliques in canonical order.
    pub fn run(&self) -> Result<ResultSet> {
        self.in_pool(|| {
            let started = Instant::now();
            let candidates = self.phase_one(started)?;
            self.phase_two(&candidates, started)
        })
    }

    /// Phase one only: every isolated subset found from any pivot.
    pub fn candidates(&self) -> Result<ResultSet> {
        self.in_pool(|| self.phase_one(Instant::now()))
    }

    fn in_pool<T: Send>(&self, job: impl FnOnce() -> Result<T> + Send) -> Result<T> {
        match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?
                .install(job),
            None => job(),
        }
    }

    fn expired(&self, started: Instant) -> bool {
        self.time_limit.is_some_and(|limit| started.elapsed() > limit)
    }

    fn phase_one(&self, started: Instant) -> Result<ResultSet> {
        let timed_out = AtomicBool::new(false);
        let batches: Vec<Vec<TemporalClique>> = (1..=self.tg.lifetime())
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                let mut view = IntersectionView::start(self.tg, a).expect("valid start layer");
                loop {
                    if timed_out.load(Ordering::Relaxed) || self.expired(started) {
                        timed_out.store(true, Ordering::Relaxed);
                        break;
                    }
                    if view.graph().edge_count() == 0 {
                        break;
                    }
                    self.scan_window(&view, &mut out);
                    if view.window().b == self.tg.lifetime() {
                        break;
                    }
                    view.extend().expect("window below lifetime");
                }
                out
            })
            .collect();
        if timed_out.load(Ordering::Relaxed) {
            return Err(Error::TimeLimitExceeded(started.elapsed()));
        }
        Ok(batches.into_iter().flatten().collect())
    }

    fn scan_window(&self, view: &IntersectionView<'_>, out: &mut Vec<TemporalClique>) {
        let g = view.graph();
        let w = view.window();
        let c = &self.spec.c;
        let order = DegreeOrder::new(g);
        for &pivot in order.vertices() {
            if g.degree(pivot) == 0 {
                continue;
            }
            let cs = match self.trimming {
                Trimming::Reference => candidate_set(g, &order, pivot, c),
                Trimming::Untrimmed => untrimmed_candidate_set(g, pivot, c),
            };
            if cs.is_empty() {
                continue;
            }
            for clique in maximal_cliques_min_size(g, &cs.members, cs.min_size) {
                let delta = g.min_degree(&clique).expect("nonempty clique");
                for subset in isolated_subsets(self.tg, &clique, w, delta, &self.spec) {
                    out.push(TemporalClique::new(subset, w));
                }
            }
        }
    }

    fn phase_two(&self, candidates: &ResultSet, started: Instant) -> Result<ResultSet> {
        let timed_out = AtomicBool::new(false);
        let entries: Vec<&TemporalClique> = candidates.iter().collect();
        let kept: Vec<TemporalClique> = entries
            .par_iter()
            .filter(|rc| {
                if self.expired(started) {
                    timed_out.store(true, Ordering::Relaxed);
                    return false;
                }
                self.is_maximal(rc, candidates)
            })
            .map(|rc| (*rc).clone())
            .collect();
        if timed_out.load(Ordering::Relaxed) {
            return Err(Error::TimeLimitExceeded(started.elapsed()));
        }
        debug_assert!(kept.iter().all(|rc| self.is_sound(rc)));
        Ok(kept.into_iter().collect())
    }

    fn is_maximal(&self, rc: &TemporalClique, candidates: &ResultSet) -> bool {
        if self.spec.kind.is_usually() {
            is_maximal_usually_family(self.tg, rc, &self.spec)
        } else {
            is_maximal_alltime_family(self.tg, rc, &self.spec, candidates)
        }
    }

    fn is_sound(&self, rc: &TemporalClique) -> bool {
        rc.vertices.len() >= 2
            && crate::isolation::is_isolated(self.tg, &self.spec, &rc.vertices, rc.window).unwrap_or(false)
    }
}

/// All maximal `spec`-isolated temporal cliques of `tg`.
pub fn enumerate_maximal_isolated(tg: &TemporalGraph, spec: &IsolationSpec) -> Result<ResultSet> {
    Enumerator::new(tg, *spec)?.run()
}
