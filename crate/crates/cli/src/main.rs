//! `cvcluster`: entanglement of Gaussian cluster states from the command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 resource cap.

mod cuts;
mod format;
mod reproduce;
mod source;
mod sweep;

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cvcluster::measures::PURITY_TOL;
use cvcluster::width::{
    brute_force_width, diagonal_decomposition, exact_width_with, rectangular_decomposition,
    ExactWidthOptions, BRUTE_FORCE_MAX, DEFAULT_CAP,
};

use crate::cuts::parse_cut;
use crate::format::{default_b_grid, parse_sizes, sig12};
use crate::reproduce::{suboptimal_points, Figure};
use crate::source::{build_state, cut_function, CutKind, Family, Measure, Source};
use crate::sweep::{write_csv, SweepSpec, Task};

#[derive(Parser)]
#[command(name = "cvcluster", version, about = "Entanglement and entanglement width of Gaussian cluster states")]
struct Cli {
    /// Size of the worker pool (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entanglement across one cut.
    Measure(MeasureArgs),
    /// Width of a decomposition, or the minimum over all of them.
    Width(WidthArgs),
    /// Evaluate tasks over a grid of sizes, B and η and write CSV.
    Sweep(SweepArgs),
    /// Write the data series of one figure as CSV.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: a `modes N` header, then one `i j strength` edge per line.
    #[arg(long, conflicts_with_all = ["family", "size"])]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Vertex count, or the side l for grids.
    #[arg(long)]
    size: Option<usize>,
}

#[derive(Args)]
struct StateArgs {
    /// Squeezing parameter B = e^(−2ζ).
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    /// Transmissivity of the loss applied to every mode.
    #[arg(long, default_value_t = 1.0)]
    eta: f64,
    #[arg(long, value_enum, default_value_t = Measure::Ee)]
    measure: Measure,
    /// Use the GF(2) cut-rank of the qubit graph state instead.
    #[arg(long)]
    qubit: bool,
}

#[derive(Args)]
struct MeasureArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    state: StateArgs,
    /// Modes `0,2,5`, or `diagonal`, `row:k`, `odd-even`.
    #[arg(long)]
    cut: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum WidthMode {
    Exact,
    Diagonal,
    Rectangular,
    Brute,
}

#[derive(Args)]
struct WidthArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, value_enum, default_value_t = WidthMode::Exact)]
    mode: WidthMode,
    /// Largest mode count accepted by the exact search.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, conflicts_with_all = ["family", "sizes"])]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Sizes such as `3,4` or `2..15`.
    #[arg(long, value_parser = parse_sizes)]
    sizes: Option<std::vec::Vec<usize>>,
    /// B values (default: 25 points log-spaced over [0.25, 8]).
    #[arg(long, value_delimiter = ',')]
    b: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    eta: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Measure::Ee)]
    measure: Measure,
    #[arg(long)]
    qubit: bool,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    task: Vec<Task>,
    /// The cut for task `cut`.
    #[arg(long)]
    cut: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write 0 in the seconds column so reruns are bit-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    figure: Figure,
    /// Output directory; the file is `<figure>.csv`.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Override the figure's B values.
    #[arg(long, value_delimiter = ',')]
    b: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Serialize)]
struct MeasureReport {
    measure: &'static str,
    cut: Vec<usize>,
    value: f64,
    units: &'static str,
    modes: usize,
    edges: usize,
    b: f64,
    eta: f64,
    /// Largest |λ − 1| over the global symplectic spectrum.
    purity_deviation: Option<f64>,
    pure: Option<bool>,
}

#[derive(Serialize)]
struct WidthReport {
    measure: &'static str,
    mode: &'static str,
    width: f64,
    units: &'static str,
    maximizing_cut: Vec<usize>,
    cut_evaluations: u64,
    modes: usize,
    seconds: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<cvcluster::Error>() {
            return if matches!(e, cvcluster::Error::CapExceeded { .. }) { 3 } else { 2 };
        }
        if cause.is::<io::Error>() || cause.is::<csv::Error>() {
            return 1;
        }
    }
    2
}

fn run(cli: Cli) -> Result<()> {
    if let Some(k) = cli.threads {
        if k == 0 {
            bail!("--threads needs at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    match cli.command {
        Command::Measure(args) => cmd_measure(args),
        Command::Width(args) => cmd_width(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    }
}

fn print_report<T: Serialize>(report: &T, json: bool) -> Result<()> {
    let value = serde_json::to_value(report)?;
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        return Ok(());
    }
    for (key, v) in value.as_object().expect("reports are structs") {
        match v {
            serde_json::Value::Null => {}
            serde_json::Value::String(text) => writeln!(out, "{key:<16} {text}")?,
            _ => writeln!(out, "{key:<16} {v}")?,
        }
    }
    Ok(())
}

fn cmd_measure(args: MeasureArgs) -> Result<()> {
    let source = Source::resolve(args.graph.graph.as_deref(), args.graph.family, args.graph.size)?;
    let s = &args.state;
    let kind = CutKind::new(s.measure, s.qubit);
    let cut = parse_cut(&args.cut, &source)?;
    let value = cut_function(kind, &source.graph, s.b, s.eta)?.evaluate(&cut)?;
    let deviation = match kind {
        CutKind::Qubit => None,
        _ => Some(build_state(&source.graph, s.b, s.eta)?.symplectic_spectrum()?.purity_deviation()),
    };
    let report = MeasureReport {
        measure: kind.name(),
        cut: cut.side_a(),
        value: sig12(value),
        units: kind.units(),
        modes: source.graph.n_vertices(),
        edges: source.graph.edges().len(),
        b: s.b,
        eta: s.eta,
        purity_deviation: deviation.map(sig12),
        pure: deviation.map(|d| d <= PURITY_TOL),
    };
    print_report(&report, args.json)
}

fn cmd_width(args: WidthArgs) -> Result<()> {
    let source = Source::resolve(args.graph.graph.as_deref(), args.graph.family, args.graph.size)?;
    let s = &args.state;
    let kind = CutKind::new(s.measure, s.qubit);
    let n = source.graph.n_vertices();
    // Caps are checked before the state is built.
    let cap = args.cap.min(63);
    match args.mode {
        WidthMode::Exact if n > cap => return Err(cvcluster::Error::CapExceeded { n_modes: n, cap }.into()),
        WidthMode::Brute if n > BRUTE_FORCE_MAX => {
            return Err(cvcluster::Error::CapExceeded { n_modes: n, cap: BRUTE_FORCE_MAX }.into())
        }
        _ => {}
    }
    let cut = cut_function(kind, &source.graph, s.b, s.eta)?;
    let start = Instant::now();
    let (width, maximizing, evaluations, mode) = match args.mode {
        WidthMode::Exact | WidthMode::Brute => {
            let r = if args.mode == WidthMode::Exact {
                exact_width_with(cut.as_ref(), ExactWidthOptions { cap, ..ExactWidthOptions::default() })?
            } else {
                brute_force_width(cut.as_ref())?
            };
            let mode = if args.mode == WidthMode::Exact { "exact" } else { "brute" };
            (r.width, r.maximizing_cut, r.cut_evaluations, mode)
        }
        WidthMode::Diagonal | WidthMode::Rectangular => {
            let l = source.require_grid("a named decomposition")?;
            let (tree, mode) = if args.mode == WidthMode::Diagonal {
                (diagonal_decomposition(l)?, "diagonal")
            } else {
                (rectangular_decomposition(l)?, "rectangular")
            };
            let (w, arg) = tree.width_with_argmax(cut.as_ref())?;
            let distinct = tree.edge_bipartitions().into_iter().collect::<std::collections::BTreeSet<_>>();
            (w, arg, distinct.len() as u64, mode)
        }
    };
    let report = WidthReport {
        measure: kind.name(),
        mode,
        width: sig12(width),
        units: kind.units(),
        maximizing_cut: maximizing.side_a(),
        cut_evaluations: evaluations,
        modes: n,
        seconds: start.elapsed().as_secs_f64(),
    };
    print_report(&report, args.json)
}

/// Reports progress on stderr at most once per second, and at the end.
fn progress_line(label: &str) -> impl Fn(usize, usize, f64) + Sync + '_ {
    let last = AtomicU64::new(0);
    move |done, total, elapsed| {
        let second = elapsed as u64 + 1;
        if done < total && last.fetch_max(second, Ordering::Relaxed) >= second {
            return;
        }
        let remaining = elapsed / done as f64 * (total - done) as f64;
        eprintln!("{label}: {done}/{total} points, {elapsed:.1} s elapsed, about {remaining:.0} s left");
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let sources = match (&args.graph, args.family, &args.sizes) {
        (Some(path), None, None) => vec![Source::from_file(path)?],
        (None, Some(family), Some(sizes)) => {
            sizes.iter().map(|&l| Source::from_family(family, l)).collect::<Result<_>>()?
        }
        (None, Some(_), None) => bail!("--family needs --sizes"),
        _ => bail!("give either --graph FILE or --family NAME --sizes LIST"),
    };
    let spec = SweepSpec {
        sources,
        b_values: if args.b.is_empty() { default_b_grid() } else { args.b },
        eta_values: args.eta,
        kind: CutKind::new(args.measure, args.qubit),
        tasks: args.task,
        cut: args.cut,
        cap: args.cap,
    };
    spec.validate()?;
    let out = open_output(&args.out)?;
    let rows = spec.run(&progress_line("sweep"))?;
    write_csv(out, &rows, !args.no_timing)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<()> {
    let fig = args.figure;
    let b_values = if args.b.is_empty() { fig.default_b() } else { args.b };
    let spec = fig.spec(b_values, args.cap)?;
    spec.validate()?;
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let path = args.out.join(format!("{}.csv", fig.name()));
    let out = open_output(&Some(path.clone()))?;
    let rows = spec.run(&progress_line(fig.name()))?;
    write_csv(out, &rows, !args.no_timing)?;
    for (l, b, eta) in suboptimal_points(&rows) {
        eprintln!(
            "note: {l}×{l} grid, B = {}, η = {}: the minimum width is below both named decompositions",
            sig12(b),
            sig12(eta)
        );
    }
    eprintln!("wrote {}", path.display());
    Ok(())
}
