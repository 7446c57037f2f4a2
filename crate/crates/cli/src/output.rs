//! Clique listings in JSON, CSV or plain text, with original labels.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use isotemp::ResultSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// One reported clique: labels in id order, window in input layer indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Listing {
    pub vertices: Vec<String>,
    pub start: usize,
    pub end: usize,
}

/// Maps a result on the Δ-transformed graph back to input layers.
pub fn listings(rs: &ResultSet, labels: &[String], delta: usize) -> Vec<Listing> {
    rs.iter()
        .map(|t| Listing {
            vertices: t.vertices.iter().map(|&v| labels[v as usize].clone()).collect(),
            start: t.window.a,
            end: t.window.b + delta,
        })
        .collect()
}

/// Numeric labels are written as JSON numbers.
#[derive(Serialize)]
struct JsonEntry {
    vertices: Vec<Value>,
    start: usize,
    end: usize,
}

fn label_value(label: &str) -> Value {
    label.parse::<i64>().map_or_else(|_| Value::String(label.to_string()), Value::from)
}

pub fn write_listings<W: Write>(items: &[Listing], format: Format, mut out: W) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            let json: Vec<JsonEntry> = items
                .iter()
                .map(|l| JsonEntry {
                    vertices: l.vertices.iter().map(|s| label_value(s)).collect(),
                    start: l.start,
                    end: l.end,
                })
                .collect();
            serde_json::to_writer_pretty(&mut out, &json)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["start", "end", "vertices"])?;
            for l in items {
                w.write_record([l.start.to_string(), l.end.to_string(), l.vertices.join(" ")])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for l in items {
                writeln!(out, "{} {} {}", l.start, l.end, l.vertices.join(" "))?;
            }
        }
    }
    Ok(())
}
