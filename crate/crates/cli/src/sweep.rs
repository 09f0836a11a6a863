//! Parameter sweeps and figure reproduction, written as CSV.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use rayon::prelude::*;

use cvcluster::width::{
    diagonal_decomposition, exact_width_with, rectangular_decomposition, ExactWidthOptions,
};

use crate::cuts::parse_cut;
use crate::format::sig12;
use crate::source::{cut_function, CutKind, Source};

pub const CSV_HEADER: [&str; 8] = ["family", "l_or_n", "b", "eta", "measure", "task", "value", "seconds"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Task {
    /// The value of one cut, given by --cut.
    Cut,
    #[value(name = "diagonal-width")]
    DiagonalWidth,
    #[value(name = "rectangular-width")]
    RectangularWidth,
    #[value(name = "exact-width")]
    ExactWidth,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Cut => "cut",
            Task::DiagonalWidth => "diagonal-width",
            Task::RectangularWidth => "rectangular-width",
            Task::ExactWidth => "exact-width",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub sources: Vec<Source>,
    pub b_values: Vec<f64>,
    pub eta_values: Vec<f64>,
    pub kind: CutKind,
    pub tasks: Vec<Task>,
    pub cut: Option<String>,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub family: String,
    pub l_or_n: usize,
    pub b: f64,
    pub eta: f64,
    pub measure: String,
    pub task: String,
    pub value: f64,
    pub seconds: f64,
}

struct Point<'a> {
    source: &'a Source,
    b: f64,
    eta: f64,
    task: Task,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.sources.is_empty() || self.b_values.is_empty() || self.eta_values.is_empty() || self.tasks.is_empty() {
            bail!("the sweep grid is empty: every list of sizes, B, η and tasks needs a value");
        }
        for &eta in &self.eta_values {
            if !(0.0..=1.0).contains(&eta) {
                bail!("transmissivity must lie in [0, 1], got {eta}");
            }
        }
        for &b in &self.b_values {
            if !(b.is_finite() && b > 0.0) {
                bail!("squeezing parameter must be positive and finite, got {b}");
            }
        }
        if self.kind == CutKind::Ee && self.eta_values.iter().any(|&e| e != 1.0) {
            bail!("entropic entanglement needs a pure state; use --measure ln with η < 1");
        }
        let cap = self.cap.min(63);
        for source in &self.sources {
            let n = source.graph.n_vertices();
            if self.tasks.contains(&Task::ExactWidth) && n > cap {
                return Err(cvcluster::Error::CapExceeded { n_modes: n, cap }.into());
            }
            if source.grid_side.is_none()
                && self.tasks.iter().any(|t| matches!(t, Task::DiagonalWidth | Task::RectangularWidth))
            {
                bail!("diagonal and rectangular widths are only defined for --family grid");
            }
            match (&self.cut, self.tasks.contains(&Task::Cut)) {
                (Some(spec), _) => {
                    parse_cut(spec, source)?;
                }
                (None, true) => bail!("task `cut` needs --cut"),
                (None, false) => {}
            }
        }
        Ok(())
    }

    /// Grid points in lexicographic order: source, B, η, task.
    fn points(&self) -> Vec<Point<'_>> {
        let mut points = Vec::new();
        for source in &self.sources {
            for &b in &self.b_values {
                for &eta in &self.eta_values {
                    for &task in &self.tasks {
                        points.push(Point { source, b, eta, task });
                    }
                }
            }
        }
        points
    }

    /// Evaluates every grid point on the rayon pool; rows keep grid order.
    /// `progress` receives `(done, total, elapsed seconds)` after each point.
    pub fn run(&self, progress: &(dyn Fn(usize, usize, f64) + Sync)) -> Result<Vec<Row>> {
        self.validate()?;
        let points = self.points();
        let total = points.len();
        let done = AtomicUsize::new(0);
        let start = Instant::now();
        points
            .par_iter()
            .map(|p| {
                let row = self.evaluate(p);
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                progress(k, total, start.elapsed().as_secs_f64());
                row
            })
            .collect()
    }

    fn evaluate(&self, p: &Point<'_>) -> Result<Row> {
        let start = Instant::now();
        let cut = cut_function(self.kind, &p.source.graph, p.b, p.eta)?;
        let value = match p.task {
            Task::Cut => {
                let spec = self.cut.as_deref().expect("validated");
                cut.evaluate(&parse_cut(spec, p.source)?)?
            }
            Task::DiagonalWidth => diagonal_decomposition(p.source.size)?.width(cut.as_ref())?,
            Task::RectangularWidth => rectangular_decomposition(p.source.size)?.width(cut.as_ref())?,
            Task::ExactWidth => {
                let options = ExactWidthOptions {
                    cap: self.cap,
                    ..ExactWidthOptions::default()
                };
                exact_width_with(cut.as_ref(), options)?.width
            }
        };
        Ok(Row {
            family: p.source.family.to_string(),
            l_or_n: p.source.size,
            b: p.b,
            eta: p.eta,
            measure: self.kind.name().to_string(),
            task: p.task.name().to_string(),
            value,
            seconds: start.elapsed().as_secs_f64(),
        })
    }
}

/// Writes the rows as CSV. With `timing` off the seconds column is 0, which
/// makes the output bit-identical across runs.
pub fn write_csv<W: Write>(out: W, rows: &[Row], timing: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let seconds = if timing { format!("{:.6}", r.seconds) } else { "0".to_string() };
        w.write_record([
            r.family.clone(),
            r.l_or_n.to_string(),
            sig12(r.b).to_string(),
            sig12(r.eta).to_string(),
            r.measure.clone(),
            r.task.clone(),
            sig12(r.value).to_string(),
            seconds,
        ])?;
    }
    w.flush()?;
    Ok(())
}
