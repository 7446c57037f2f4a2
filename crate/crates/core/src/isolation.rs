//! The six temporal isolation predicates.
//!
//! Every predicate is a strict inequality over the outdegree profile of a
//! temporal clique `(C, [a, b])`: the matrix of `outdeg_{G_i}(v, C)` for
//! `v ∈ C`, `i ∈ [a, b]`, aggregated by max or sum along each axis.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{StaticGraph, TemporalGraph, TimeWindow, Vertex};
use crate::param::IsolationParam;

/// Named by aggregation order: the first word aggregates time ("alltime" is
/// max, "usually" is average), the second aggregates vertices, or the other
/// way round when the time word comes second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsolationKind {
    AlltimeAvg,
    AlltimeMax,
    AvgAlltime,
    MaxUsually,
    UsuallyAvg,
    UsuallyMax,
}

impl IsolationKind {
    pub const ALL: [IsolationKind; 6] = [
        IsolationKind::AlltimeAvg,
        IsolationKind::AlltimeMax,
        IsolationKind::AvgAlltime,
        IsolationKind::MaxUsually,
        IsolationKind::UsuallyAvg,
        IsolationKind::UsuallyMax,
    ];

    /// Kinds with a fast enumerator.
    pub const SUPPORTED: [IsolationKind; 5] = [
        IsolationKind::AlltimeAvg,
        IsolationKind::AlltimeMax,
        IsolationKind::AvgAlltime,
        IsolationKind::MaxUsually,
        IsolationKind::UsuallyAvg,
    ];

    pub fn token(self) -> &'static str {
        match self {
            IsolationKind::AlltimeAvg => "alltime-avg",
            IsolationKind::AlltimeMax => "alltime-max",
            IsolationKind::AvgAlltime => "avg-alltime",
            IsolationKind::MaxUsually => "max-usually",
            IsolationKind::UsuallyAvg => "usually-avg",
            IsolationKind::UsuallyMax => "usually-max",
        }
    }

    /// Time aggregated by average. Isolation of these kinds does not carry
    /// over to subwindows.
    pub fn is_usually(self) -> bool {
        matches!(
            self,
            IsolationKind::MaxUsually | IsolationKind::UsuallyAvg | IsolationKind::UsuallyMax
        )
    }
}

impl fmt::Display for IsolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for IsolationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IsolationKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IsolationSpec {
    pub kind: IsolationKind,
    pub c: IsolationParam,
}

impl IsolationSpec {
    pub fn new(kind: IsolationKind, c: IsolationParam) -> Self {
        IsolationSpec { kind, c }
    }
}

impl fmt::Display for IsolationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.kind, self.c)
    }
}

/// Outdegrees of a temporal clique, one row per vertex and one column per
/// layer of the window, with cached row and column aggregates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutdegProfile {
    vertices: Vec<Vertex>,
    window: TimeWindow,
    entries: Vec<i64>,
    row_sums: Vec<i64>,
    row_maxima: Vec<i64>,
    column_sums: Vec<i64>,
    column_maxima: Vec<i64>,
}

impl OutdegProfile {
    /// Builds the profile from per-layer degrees, assuming `vertices` is a
    /// clique in every layer of `window`.
    pub(crate) fn from_clique_degrees(
        tg: &TemporalGraph,
        vertices: &[Vertex],
        window: TimeWindow,
    ) -> Self {
        let len = window.length();
        let inner = vertices.len() as i64 - 1;
        let mut entries = Vec::with_capacity(vertices.len() * len);
        for &v in vertices {
            entries.extend(window.layers().map(|t| tg.layer(t).degree(v) as i64 - inner));
        }
        let rows = entries.chunks(len);
        let row_sums = rows.clone().map(|r| r.iter().sum()).collect();
        let row_maxima = rows.map(|r| r.iter().copied().max().unwrap_or(0)).collect();
        let entries_ref = &entries;
        let column = |i: usize| (0..vertices.len()).map(move |r| entries_ref[r * len + i]);
        let column_sums = (0..len).map(|i| column(i).sum()).collect();
        let column_maxima = (0..len).map(|i| column(i).max().unwrap_or(0)).collect();
        OutdegProfile {
            vertices: vertices.to_vec(),
            window,
            entries,
            row_sums,
            row_maxima,
            column_sums,
            column_maxima,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn window(&self) -> TimeWindow {
        self.window
    }

    /// `outdeg_{G_t}(v, C)`; `None` if `v ∉ C` or `t` is outside the window.
    pub fn entry(&self, v: Vertex, t: usize) -> Option<i64> {
        let r = self.vertices.binary_search(&v).ok()?;
        if !self.window.layers().contains(&t) {
            return None;
        }
        Some(self.entries[r * self.window.length() + (t - self.window.a)])
    }

    /// `Σ_i outdeg_{G_i}(v, C)` per vertex, in vertex order.
    pub fn row_sums(&self) -> &[i64] {
        &self.row_sums
    }

    /// `max_i outdeg_{G_i}(v, C)` per vertex.
    pub fn row_maxima(&self) -> &[i64] {
        &self.row_maxima
    }

    /// `Σ_v outdeg_{G_i}(v, C)` per layer.
    pub fn column_sums(&self) -> &[i64] {
        &self.column_sums
    }

    /// `max_v outdeg_{G_i}(v, C)` per layer.
    pub fn column_maxima(&self) -> &[i64] {
        &self.column_maxima
    }

    pub fn satisfies(&self, spec: &IsolationSpec) -> bool {
        let size = self.vertices.len() as i64;
        let len = self.window.length() as i64;
        let c = &spec.c;
        let max = |xs: &[i64]| xs.iter().copied().max().unwrap_or(0);
        let sum = |xs: &[i64]| xs.iter().sum::<i64>();
        match spec.kind {
            IsolationKind::AlltimeAvg => c.below_scaled(max(&self.column_sums), size),
            IsolationKind::AlltimeMax => c.below_scaled(max(&self.row_maxima), 1),
            IsolationKind::AvgAlltime => c.below_scaled(sum(&self.row_maxima), size),
            IsolationKind::MaxUsually => c.below_scaled(max(&self.row_sums), len),
            IsolationKind::UsuallyAvg => c.below_scaled(sum(&self.column_sums), size * len),
            IsolationKind::UsuallyMax => c.below_scaled(sum(&self.column_maxima), len),
        }
    }
}

fn check_clique(tg: &TemporalGraph, set: &[Vertex], w: TimeWindow) -> Result<()> {
    tg.check_window(w)?;
    let sorted = set.windows(2).all(|p| p[0] < p[1]);
    let in_range = set.iter().all(|&v| (v as usize) < tg.vertex_count());
    if !sorted || !in_range || !tg.is_temporal_clique(set, w) {
        return Err(Error::NotACliqueInWindow(w));
    }
    Ok(())
}

/// Outdegree profile of the temporal clique `(set, w)`; `set` sorted.
pub fn outdeg_profile(tg: &TemporalGraph, set: &[Vertex], w: TimeWindow) -> Result<OutdegProfile> {
    check_clique(tg, set, w)?;
    Ok(OutdegProfile::from_clique_degrees(tg, set, w))
}

/// Whether the temporal clique `(set, w)` is `spec`-isolated.
pub fn is_isolated(
    tg: &TemporalGraph,
    spec: &IsolationSpec,
    set: &[Vertex],
    w: TimeWindow,
) -> Result<bool> {
    Ok(outdeg_profile(tg, set, w)?.satisfies(spec))
}

/// Same as [`is_isolated`] for callers that already know `(set, w)` is a
/// temporal clique.
pub(crate) fn is_isolated_clique(
    tg: &TemporalGraph,
    spec: &IsolationSpec,
    set: &[Vertex],
    w: TimeWindow,
) -> bool {
    debug_assert!(tg.is_temporal_clique(set, w));
    OutdegProfile::from_clique_degrees(tg, set, w).satisfies(spec)
}

/// Static avg-c-isolation: `outdeg_G(C) < c · |C|`.
pub fn static_avg_isolated(g: &StaticGraph, set: &[Vertex], c: &IsolationParam) -> bool {
    c.below_scaled(g.outdeg_set(set) as i64, set.len() as i64)
}

/// Static max-c-isolation: `max_{v ∈ C} outdeg_G(v, C) < c`.
pub fn static_max_isolated(g: &StaticGraph, set: &[Vertex], c: &IsolationParam) -> bool {
    let worst = set.iter().map(|&v| g.outdeg_unchecked(v, set)).max().unwrap_or(0);
    c.below_scaled(worst as i64, 1)
}
