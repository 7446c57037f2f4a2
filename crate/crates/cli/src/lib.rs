//! Command-line front end: enumerate, run the oracle, compare the two, sweep
//! the parameter grid, and generate random instances.
//!
//! Exit codes: 0 ok, 1 usage, 2 input error, 3 mismatch, 4 timeout.

mod bench;
mod dataset;
mod output;
mod report;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use isotemp::ingest::{default_labels, generate_random_temporal_graph, write_contact_list, IngestConfig};
use isotemp::oracle::brute_force_enumerate;
use isotemp::{Enumerator, Error, IsolationKind, IsolationParam, IsolationSpec, ResultSet, TemporalClique};

pub use bench::{parse_grid, Grid};
pub use dataset::Dataset;
pub use output::{listings, write_listings, Format, Listing};
pub use report::{append_reports, write_reports, RunReport, Status};

#[derive(Debug, Parser)]
#[command(name = "isotemp", version, about = "Maximal isolated temporal cliques")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the maximal isolated temporal cliques of a contact list.
    Enumerate(EnumerateArgs),
    /// Same as `enumerate --oracle`: exhaustive search, small inputs only.
    Oracle(RunArgs),
    /// Run the fast enumerator and the oracle and diff their outputs.
    Compare(CompareArgs),
    /// Sweep kind x c x delta and write one CSV row per cell.
    Bench(BenchArgs),
    /// Write a random temporal graph as a contact list.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Contact list: `timestamp u v [extra columns]` per line.
    #[arg(long)]
    pub input: PathBuf,
    /// Seconds per layer.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub resolution: u64,
    /// Bin absolute timestamps instead of shifting the earliest to zero.
    #[arg(long)]
    pub no_normalize: bool,
    /// Dataset id for reports; defaults to the input file stem.
    #[arg(long)]
    pub dataset: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<Dataset, Failure> {
        let cfg = IngestConfig {
            resolution: self.resolution,
            delta_base: 0,
            normalize_origin: !self.no_normalize,
        };
        Dataset::load(&self.input, &cfg, self.dataset.as_deref())
    }
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    /// Unscaled delta, converted to layers by lifetime / (5 |TE|) / resolution.
    #[arg(long, default_value_t = 0)]
    pub delta: u64,
    /// Delta in layers, bypassing the scaling.
    #[arg(long, conflicts_with = "delta")]
    pub delta_layers: Option<usize>,
}

impl DeltaArgs {
    fn resolve(&self, data: &Dataset) -> Result<usize, Failure> {
        match self.delta_layers {
            Some(d) => Ok(d),
            None => data.delta_layers(self.delta),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Isolation kind, e.g. alltime-avg.
    #[arg(long = "type", value_parser = parse_kind)]
    pub kind: IsolationKind,
    /// Isolation parameter: decimal (0.001) or fraction (1/3).
    #[arg(long, value_parser = parse_param)]
    pub c: IsolationParam,
    #[command(flatten)]
    pub delta: DeltaArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the listing here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to available parallelism.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Abort after this many seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Append a run report row to this CSV file.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Use the exhaustive oracle (required for usually-max).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Kind to compare; all five supported kinds when omitted.
    #[arg(long = "type", value_parser = parse_kind)]
    pub kind: Option<IsolationKind>,
    #[arg(long, value_parser = parse_param)]
    pub c: IsolationParam,
    #[command(flatten)]
    pub delta: DeltaArgs,
    /// Harness self-test: drop the first clique of the fast output.
    #[arg(long, hide = true)]
    pub corrupt_fast_path: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Grid override, e.g. "kinds=alltime-avg,usually-avg;c=0.001,1;delta=0,125".
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<Grid>,
    /// Per-cell limit in seconds.
    #[arg(long, default_value_t = 3600.0)]
    pub time_limit: f64,
    /// Worker threads per cell.
    #[arg(long)]
    pub threads: Option<usize>,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    /// Vertex count.
    #[arg(long)]
    pub n: usize,
    /// Layer count.
    #[arg(long)]
    pub tau: usize,
    /// Edge probability per vertex pair and layer.
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Seconds per layer in the written timestamps.
    #[arg(long, default_value_t = 20)]
    pub resolution: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<IsolationKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_param(s: &str) -> Result<IsolationParam, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Input(anyhow::Error),
    Mismatch(usize),
    Timeout(Duration),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Mismatch(_) => 3,
            Failure::Timeout(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(e) | Failure::Input(e) => write!(f, "{e:#}"),
            Failure::Mismatch(n) => write!(f, "fast path and oracle differ in {n} entries"),
            Failure::Timeout(d) => write!(f, "time limit exceeded after {:.1} s", d.as_secs_f64()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TimeLimitExceeded(d) => Failure::Timeout(d),
            Error::UnsupportedKind | Error::UnknownKind(_) | Error::InvalidParam(_) => Failure::Usage(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

fn io_failure(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Input(e.into())
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(&args.run, args.oracle),
        Command::Oracle(args) => cmd_enumerate(&args, true),
        Command::Compare(args) => cmd_compare(&args),
        Command::Bench(args) => cmd_bench(&args),
        Command::Generate(args) => cmd_generate(&args),
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(io_failure)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn seconds(limit: Option<f64>) -> Result<Option<Duration>, Failure> {
    limit
        .map(|s| Duration::try_from_secs_f64(s).map_err(|e| Failure::Usage(anyhow::anyhow!("--time-limit: {e}"))))
        .transpose()
}

fn cmd_enumerate(args: &RunArgs, oracle: bool) -> Result<(), Failure> {
    let spec = IsolationSpec::new(args.kind, args.c);
    if spec.kind == IsolationKind::UsuallyMax && !oracle {
        return Err(Error::UnsupportedKind.into());
    }
    let limit = seconds(args.time_limit)?;
    let data = args.input.load()?;
    let delta_base = if args.delta.delta_layers.is_some() { 0 } else { args.delta.delta };
    let delta = args.delta.resolve(&data)?;
    let tg = data.transformed(delta)?;

    let pending = RunReport::start(&data.id, &spec, delta_base, delta);
    let started = Instant::now();
    let result = if oracle {
        brute_force_enumerate(&tg, &spec)
    } else {
        Enumerator::new(&tg, spec)?.threads(args.threads).time_limit(limit).run()
    };
    let wall = started.elapsed();

    let rs = match result {
        Ok(rs) => rs,
        Err(Error::TimeLimitExceeded(d)) => {
            if let Some(path) = &args.report {
                append_reports(path, &[pending.finish(0, wall, Status::Timeout)]).map_err(Failure::Input)?;
                eprintln!("partial report written to {}", path.display());
            }
            return Err(Failure::Timeout(d));
        }
        Err(e) => return Err(e.into()),
    };
    let items = listings(&rs, &data.binned.labels, delta);
    write_listings(&items, args.format, sink(args.out.as_deref())?).map_err(Failure::Input)?;
    if let Some(path) = &args.report {
        append_reports(path, &[pending.finish(rs.len(), wall, Status::Ok)]).map_err(Failure::Input)?;
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), Failure> {
    let kinds = match args.kind {
        Some(IsolationKind::UsuallyMax) => return Err(Error::UnsupportedKind.into()),
        Some(kind) => vec![kind],
        None => IsolationKind::SUPPORTED.to_vec(),
    };
    let data = args.input.load()?;
    let delta = args.delta.resolve(&data)?;
    let tg = data.transformed(delta)?;
    let labels = &data.binned.labels;
    let shown = |t: &TemporalClique| {
        let vs: Vec<&str> = t.vertices.iter().map(|&v| labels[v as usize].as_str()).collect();
        format!("{} {} {}", t.window.a, t.window.b + delta, vs.join(" "))
    };

    let mut differing = 0;
    for kind in kinds {
        let spec = IsolationSpec::new(kind, args.c);
        let oracle = brute_force_enumerate(&tg, &spec)?;
        let mut fast = Enumerator::new(&tg, spec)?.run()?;
        if args.corrupt_fast_path {
            fast = fast.iter().skip(1).cloned().collect::<ResultSet>();
        }
        let fast_only: Vec<&TemporalClique> = fast.difference(&oracle).collect();
        let oracle_only: Vec<&TemporalClique> = oracle.difference(&fast).collect();
        println!(
            "{spec}: fast {} oracle {} {}",
            fast.len(),
            oracle.len(),
            if fast_only.is_empty() && oracle_only.is_empty() { "equal" } else { "DIFFER" }
        );
        for t in &fast_only {
            println!("  fast only: {}", shown(t));
        }
        for t in &oracle_only {
            println!("  oracle only: {}", shown(t));
        }
        differing += fast_only.len() + oracle_only.len();
    }
    if differing > 0 {
        return Err(Failure::Mismatch(differing));
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), Failure> {
    let limit = seconds(Some(args.time_limit))?;
    let grid = args.grid.clone().unwrap_or_default();
    if grid.kinds.contains(&IsolationKind::UsuallyMax) {
        return Err(Error::UnsupportedKind.into());
    }
    let data = args.input.load()?;
    let rows = bench::sweep(&data, &grid, args.threads, limit)?;
    write_reports(&rows, sink(args.out.as_deref())?).map_err(Failure::Input)?;
    Ok(())
}

fn cmd_generate(args: &GenerateArgs) -> Result<(), Failure> {
    if args.resolution == 0 {
        return Err(Failure::Usage(anyhow::anyhow!("--resolution must be positive")));
    }
    let tg = generate_random_temporal_graph(args.n, args.tau, args.p, args.seed)
        .map_err(|e| Failure::Usage(e.into()))?;
    let labels = default_labels(args.n);
    let mut out = sink(args.out.as_deref())?;
    write_contact_list(&tg, &labels, 0, args.resolution, &mut out)?;
    out.flush().map_err(io_failure)?;
    Ok(())
}
