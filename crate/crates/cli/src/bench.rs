//! The kind x c x delta sweep behind the count and time-per-clique plots.

use std::time::{Duration, Instant};

use isotemp::{Enumerator, Error, IsolationKind, IsolationParam, IsolationSpec};

use crate::dataset::Dataset;
use crate::report::{RunReport, Status};
use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub kinds: Vec<IsolationKind>,
    pub cs: Vec<IsolationParam>,
    /// Unscaled delta values.
    pub deltas: Vec<u64>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            kinds: IsolationKind::SUPPORTED.to_vec(),
            cs: ["0.001", "1", "5", "25", "125"]
                .iter()
                .map(|c| c.parse().expect("valid grid constant"))
                .collect(),
            deltas: vec![0, 125, 3125],
        }
    }
}

/// Parses `key=v1,v2;key=...` with keys `kinds`, `c` and `delta`; keys left
/// out keep their default values.
pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let mut grid = Grid::default();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, values) = part
            .split_once('=')
            .ok_or_else(|| format!("grid entry {part:?} is not key=values"))?;
        let items = values.split(',').map(str::trim).filter(|v| !v.is_empty());
        match key.trim() {
            "kinds" | "kind" | "type" => {
                grid.kinds = items.map(|v| v.parse().map_err(|e: Error| e.to_string())).collect::<Result<_, _>>()?
            }
            "c" => grid.cs = items.map(|v| v.parse().map_err(|e: Error| e.to_string())).collect::<Result<_, _>>()?,
            "delta" => {
                grid.deltas = items
                    .map(|v| v.parse().map_err(|_| format!("bad delta {v:?}")))
                    .collect::<Result<_, _>>()?
            }
            other => return Err(format!("unknown grid key {other:?}")),
        }
    }
    if grid.kinds.is_empty() || grid.cs.is_empty() || grid.deltas.is_empty() {
        return Err("grid has an empty axis".into());
    }
    Ok(grid)
}

pub fn sweep(
    data: &Dataset,
    grid: &Grid,
    threads: Option<usize>,
    limit: Option<Duration>,
) -> Result<Vec<RunReport>, Failure> {
    let mut rows = Vec::new();
    for &delta_base in &grid.deltas {
        let delta = data.delta_layers(delta_base)?;
        let tg = if delta < data.graph().lifetime() {
            Some(data.transformed(delta)?)
        } else {
            None
        };
        for &kind in &grid.kinds {
            for &c in &grid.cs {
                let spec = IsolationSpec::new(kind, c);
                let row = RunReport::start(&data.id, &spec, delta_base, delta);
                let Some(tg) = &tg else {
                    rows.push(row.finish(0, Duration::ZERO, Status::DeltaExceedsLifetime));
                    continue;
                };
                let started = Instant::now();
                let outcome = Enumerator::new(tg, spec)?.threads(threads).time_limit(limit).run();
                let wall = started.elapsed();
                rows.push(match outcome {
                    Ok(rs) => row.finish(rs.len(), wall, Status::Ok),
                    Err(Error::TimeLimitExceeded(_)) => row.finish(0, wall, Status::Timeout),
                    Err(e) => return Err(e.into()),
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_has_75_cells() {
        let g = Grid::default();
        assert_eq!(g.kinds.len() * g.cs.len() * g.deltas.len(), 75);
    }

    #[test]
    fn grid_overrides() {
        let g = parse_grid("kinds=alltime-avg; c=0.001,1/3").unwrap();
        assert_eq!(g.kinds, vec![IsolationKind::AlltimeAvg]);
        assert_eq!(g.cs.len(), 2);
        assert_eq!(g.deltas, vec![0, 125, 3125]);
        assert!(parse_grid("c=").is_err());
        assert!(parse_grid("speed=3").is_err());
        assert!(parse_grid("kinds=sometimes").is_err());
    }
}
