use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use isotemp::IsolationSpec;
use serde::{Deserialize, Serialize};

/// One enumeration run; field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub dataset: String,
    pub kind: String,
    pub c: String,
    pub delta_base: u64,
    pub delta_layers: usize,
    pub num_cliques: usize,
    pub wall_time_s: f64,
    pub time_per_clique_s: f64,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Timeout,
    DeltaExceedsLifetime,
}

impl RunReport {
    /// A row with the run's parameters filled in and no results yet.
    pub fn start(dataset: &str, spec: &IsolationSpec, delta_base: u64, delta_layers: usize) -> Self {
        RunReport {
            dataset: dataset.to_string(),
            kind: spec.kind.to_string(),
            c: spec.c.to_string(),
            delta_base,
            delta_layers,
            num_cliques: 0,
            wall_time_s: 0.0,
            time_per_clique_s: 0.0,
            status: Status::Ok,
        }
    }

    pub fn finish(mut self, num_cliques: usize, wall: Duration, status: Status) -> Self {
        self.num_cliques = num_cliques;
        self.wall_time_s = wall.as_secs_f64();
        self.time_per_clique_s = self.wall_time_s / num_cliques.max(1) as f64;
        self.status = status;
        self
    }
}

pub fn write_reports<W: Write>(rows: &[RunReport], out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Appends rows, writing the header only into an empty or new file.
pub fn append_reports(path: &Path, rows: &[RunReport]) -> anyhow::Result<()> {
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let fresh = file.metadata()?.len() == 0;
    let mut w = csv::WriterBuilder::new().has_headers(fresh).from_writer(file);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
