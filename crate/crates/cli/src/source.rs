//! Graphs, states and cut functions built from command-line arguments.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use cvcluster::cluster::{apply_loss, canonical_cluster, physical_cluster, SqueezingParams};
use cvcluster::graph::{complete_graph, grid_graph, path_graph, star_graph, WeightedGraph};
use cvcluster::qubit::QubitGraph;
use cvcluster::width::{CutFunction, EntropicCut, LogNegativityCut, QubitCut};
use cvcluster::GaussianState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    Complete,
    Grid,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Grid => "grid",
        }
    }

    /// Unit-strength member of the family; `size` is the side for grids.
    pub fn graph(self, size: usize) -> Result<WeightedGraph> {
        Ok(match self {
            Family::Path => path_graph(size, 1.0)?,
            Family::Star => star_graph(size, 1.0)?,
            Family::Complete => complete_graph(size, 1.0)?,
            Family::Grid => grid_graph(size, 1.0)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Ee,
    Ln,
}

/// What is evaluated across each cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    Ee,
    Ln,
    /// GF(2) cut-rank of the underlying simple graph.
    Qubit,
}

impl CutKind {
    pub fn new(measure: Measure, qubit: bool) -> Self {
        match (qubit, measure) {
            (true, _) => CutKind::Qubit,
            (false, Measure::Ee) => CutKind::Ee,
            (false, Measure::Ln) => CutKind::Ln,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CutKind::Ee => "ee",
            CutKind::Ln => "ln",
            CutKind::Qubit => "qubit",
        }
    }

    pub fn units(self) -> &'static str {
        match self {
            CutKind::Qubit => "bits",
            _ => "nats",
        }
    }
}

/// A graph together with where it came from.
#[derive(Debug, Clone)]
pub struct Source {
    pub family: &'static str,
    /// Grid side `l` for grids, vertex count otherwise.
    pub size: usize,
    pub grid_side: Option<usize>,
    pub graph: WeightedGraph,
}

impl Source {
    pub fn from_family(family: Family, size: usize) -> Result<Self> {
        Ok(Self {
            family: family.name(),
            size,
            grid_side: (family == Family::Grid).then_some(size),
            graph: family.graph(size)?,
        })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let graph: WeightedGraph = text.parse().with_context(|| format!("parsing {}", path.display()))?;
        Ok(Self {
            family: "file",
            size: graph.n_vertices(),
            grid_side: None,
            graph,
        })
    }

    pub fn resolve(graph: Option<&Path>, family: Option<Family>, size: Option<usize>) -> Result<Self> {
        match (graph, family, size) {
            (Some(path), None, None) => Self::from_file(path),
            (None, Some(family), Some(size)) => Self::from_family(family, size),
            (None, Some(_), None) => bail!("--family needs --size"),
            (None, None, _) => bail!("give either --graph FILE or --family NAME --size L"),
            _ => bail!("--graph cannot be combined with --family/--size"),
        }
    }

    pub fn require_grid(&self, what: &str) -> Result<usize> {
        self.grid_side
            .with_context(|| format!("{what} is only defined for --family grid"))
    }
}

/// Unit-strength graphs use squeezed vacua joined by unit controlled-Z gates,
/// followed by loss. Weighted graphs use the vacuum construction with every
/// strength multiplied by `b`, which admits no loss.
pub fn build_state(graph: &WeightedGraph, b: f64, eta: f64) -> Result<GaussianState> {
    if graph.has_unit_strengths() {
        let pure = physical_cluster(graph, SqueezingParams::from_b(b)?)?;
        return Ok(apply_loss(&pure, eta)?);
    }
    if eta != 1.0 {
        bail!("loss needs the squeezed-vacuum construction, which needs unit-strength edges");
    }
    if !(b.is_finite() && b > 0.0) {
        bail!("squeezing parameter must be positive and finite, got {b}");
    }
    let scaled = graph.edges().iter().map(|e| (e.a, e.b, e.strength * b)).collect();
    Ok(canonical_cluster(&WeightedGraph::new(graph.n_vertices(), scaled)?))
}

pub fn cut_function(kind: CutKind, graph: &WeightedGraph, b: f64, eta: f64) -> Result<Box<dyn CutFunction>> {
    Ok(match kind {
        CutKind::Qubit => Box::new(QubitCut::new(QubitGraph::from_graph(graph))),
        CutKind::Ee => {
            let state = build_state(graph, b, eta)?;
            Box::new(EntropicCut::new(state).context("entropic entanglement needs a pure state; use --measure ln with loss")?)
        }
        CutKind::Ln => Box::new(LogNegativityCut::new(build_state(graph, b, eta)?)),
    })
}
