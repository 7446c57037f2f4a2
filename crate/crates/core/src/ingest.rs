//! Contact-list ingestion and synthetic instances.
//!
//! Input rows are `timestamp u v [extra columns...]`, separated by spaces or
//! tabs; blank lines and lines starting with `#` are skipped. Labels are
//! mapped to dense ids in sorted label order (numerically when a label parses
//! as an integer), so sorting by id sorts by label.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{StaticGraph, TemporalGraph, TimeWindow, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactRecord {
    pub timestamp: i64,
    pub u: Vertex,
    pub v: Vertex,
}

/// Parsed records plus the id-to-label table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactList {
    pub records: Vec<ContactRecord>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum LabelKey {
    Numeric(i64),
    Text(String),
}

fn label_key(s: &str) -> LabelKey {
    match s.parse::<i64>() {
        Ok(n) => LabelKey::Numeric(n),
        Err(_) => LabelKey::Text(s.to_string()),
    }
}

pub fn parse_contact_list<R: BufRead>(reader: R) -> Result<ContactList> {
    let mut raw: Vec<(i64, String, String)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(t), Some(u), Some(v)) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected `timestamp u v`, got {trimmed:?}"),
            });
        };
        let timestamp: i64 = t.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("bad timestamp {t:?}"),
        })?;
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop at {u:?}"),
            });
        }
        raw.push((timestamp, u.to_string(), v.to_string()));
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut keyed: Vec<(LabelKey, &str)> = raw
        .iter()
        .flat_map(|(_, u, v)| [u.as_str(), v.as_str()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|s| (label_key(s), s))
        .collect();
    keyed.sort();
    let labels: Vec<String> = keyed.iter().map(|(_, s)| s.to_string()).collect();
    let id_of = |s: &str| {
        keyed
            .binary_search_by(|(k, _)| k.cmp(&label_key(s)))
            .expect("label registered") as Vertex
    };
    let records = raw
        .iter()
        .map(|(t, u, v)| ContactRecord {
            timestamp: *t,
            u: id_of(u),
            v: id_of(v),
        })
        .collect();
    Ok(ContactList { records, labels })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IngestConfig {
    /// Seconds per layer.
    pub resolution: u64,
    /// Unscaled Δ, in the protocol's units.
    pub delta_base: u64,
    /// Shift timestamps so the earliest record starts layer 1.
    pub normalize_origin: bool,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            resolution: 20,
            delta_base: 0,
            normalize_origin: true,
        }
    }
}

/// A binned temporal graph with what is needed to map results back.
#[derive(Clone, Debug)]
pub struct BinnedGraph {
    pub graph: TemporalGraph,
    pub labels: Vec<String>,
    /// `t_max - t_min` in seconds.
    pub lifetime_seconds: i64,
    /// Second at which layer 1 starts.
    pub origin: i64,
    pub resolution: u64,
}

impl BinnedGraph {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }
}

pub fn bin_to_layers(list: &ContactList, cfg: &IngestConfig) -> Result<BinnedGraph> {
    if cfg.resolution == 0 {
        return Err(Error::InvalidGraph("resolution must be positive".into()));
    }
    let t_min = list.records.iter().map(|r| r.timestamp).min().ok_or(Error::EmptyInput)?;
    let t_max = list.records.iter().map(|r| r.timestamp).max().ok_or(Error::EmptyInput)?;
    let r = cfg.resolution as i64;
    let origin = if cfg.normalize_origin { t_min } else { 0 };
    if t_min < origin {
        return Err(Error::InvalidGraph(format!(
            "timestamp {t_min} precedes origin {origin}; enable origin normalisation"
        )));
    }
    let layer_of = |t: i64| ((t - origin).div_euclid(r) + 1) as usize;
    let tau = layer_of(t_max);
    let mut edges: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); tau];
    for rec in &list.records {
        edges[layer_of(rec.timestamp) - 1].push((rec.u, rec.v));
    }
    let n = list.labels.len();
    let layers = edges
        .into_iter()
        .map(|e| StaticGraph::from_edges(n, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(BinnedGraph {
        graph: TemporalGraph::from_layers(n, layers)?,
        labels: list.labels.clone(),
        lifetime_seconds: t_max - t_min,
        origin,
        resolution: cfg.resolution,
    })
}

/// `⌊ delta_base · L / (5 · |TE|) / r ⌋`, in layers.
pub fn scale_delta(delta_base: u64, lifetime_seconds: u64, time_edges: u64, resolution: u64) -> Result<usize> {
    if time_edges == 0 || resolution == 0 {
        return Err(Error::InvalidGraph(
            "delta scaling needs at least one time edge and a positive resolution".into(),
        ));
    }
    let num = delta_base as u128 * lifetime_seconds as u128;
    let den = 5 * time_edges as u128 * resolution as u128;
    Ok((num / den) as usize)
}

/// Writes one `second u v` row per time edge, layer by layer. Layer `t` is
/// stamped `origin + (t - 1) · resolution`.
pub fn write_contact_list<W: Write>(
    tg: &TemporalGraph,
    labels: &[String],
    origin: i64,
    resolution: u64,
    mut out: W,
) -> Result<()> {
    for (i, layer) in tg.layers().iter().enumerate() {
        let stamp = origin + i as i64 * resolution as i64;
        for (u, v) in layer.edges() {
            writeln!(out, "{stamp}\t{}\t{}", labels[u as usize], labels[v as usize])?;
        }
    }
    Ok(())
}

/// Labels `"1" ..= "n"` for graphs without a label table.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Independent G(n, p) layers from a seeded ChaCha8 stream.
pub fn generate_random_temporal_graph(n: usize, tau: usize, p: f64, seed: u64) -> Result<TemporalGraph> {
    if n < 2 || tau < 1 || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidGraph(format!(
            "need n >= 2, tau >= 1, 0 <= p <= 1 (got {n}, {tau}, {p})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layers: Vec<Vec<(Vertex, Vertex)>> = (0..tau)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n as Vertex {
                for v in u + 1..n as Vertex {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        })
        .collect();
    TemporalGraph::new(n, layers)
}

/// Makes `clique` complete on every layer of `w` and keeps at most `budget`
/// edges leaving it per layer (the lexicographically first ones).
pub fn plant_isolated_clique(
    tg: &TemporalGraph,
    clique: &[Vertex],
    w: TimeWindow,
    budget: usize,
) -> Result<TemporalGraph> {
    tg.check_window(w)?;
    let n = tg.vertex_count();
    if let Some(&bad) = clique.iter().find(|&&v| v as usize >= n) {
        return Err(Error::InvalidGraph(format!("vertex {bad} out of range")));
    }
    let inside = |v: Vertex| clique.contains(&v);
    let layers = (1..=tg.lifetime())
        .map(|t| {
            let layer = tg.layer(t);
            if !w.layers().contains(&t) {
                return Ok(layer.clone());
            }
            let mut kept_cross = 0;
            let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
            for (u, v) in layer.edges() {
                match (inside(u), inside(v)) {
                    (true, true) => {}
                    (false, false) => edges.push((u, v)),
                    _ if kept_cross < budget => {
                        kept_cross += 1;
                        edges.push((u, v));
                    }
                    _ => {}
                }
            }
            for (i, &u) in clique.iter().enumerate() {
                edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
            }
            StaticGraph::from_edges(n, edges)
        })
        .collect::<Result<Vec<_>>>()?;
    TemporalGraph::from_layers(n, layers)
}
