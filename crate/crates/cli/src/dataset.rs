//! Loading a contact list and applying the scaled Δ.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use anyhow::Context;
use isotemp::ingest::{bin_to_layers, parse_contact_list, scale_delta, BinnedGraph, IngestConfig};
use isotemp::TemporalGraph;

use crate::Failure;

pub struct Dataset {
    pub id: String,
    pub binned: BinnedGraph,
}

impl Dataset {
    pub fn load(path: &Path, cfg: &IngestConfig, id: Option<&str>) -> Result<Self, Failure> {
        let file = File::open(path)
            .with_context(|| format!("cannot open {}", path.display()))
            .map_err(Failure::Input)?;
        let list = parse_contact_list(BufReader::new(file))
            .with_context(|| format!("reading {}", path.display()))
            .map_err(Failure::Input)?;
        let binned = bin_to_layers(&list, cfg).map_err(Failure::from)?;
        let id = id.map(str::to_string).unwrap_or_else(|| {
            path.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into())
        });
        Ok(Dataset { id, binned })
    }

    pub fn graph(&self) -> &TemporalGraph {
        &self.binned.graph
    }

    /// Δ in layers for an unscaled `delta_base`.
    pub fn delta_layers(&self, delta_base: u64) -> Result<usize, Failure> {
        let time_edges = self.graph().time_edge_count() as u64;
        scale_delta(
            delta_base,
            self.binned.lifetime_seconds.max(0) as u64,
            time_edges,
            self.binned.resolution,
        )
        .map_err(Failure::from)
    }

    /// The graph whose 0-cliques are the Δ-cliques of the input.
    pub fn transformed(&self, delta: usize) -> Result<TemporalGraph, Failure> {
        self.graph().delta_union_transform(delta).map_err(Failure::from)
    }
}
