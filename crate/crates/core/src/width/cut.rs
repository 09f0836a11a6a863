use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measures::{check_pure, log_negativity, reduced_entropy};
use crate::modes::Bipartition;
use crate::phase_space::GaussianState;
use crate::qubit::{qubit_cut_rank, QubitGraph};

/// A nonnegative function of bipartitions, such as the entanglement across them.
pub trait CutFunction: Sync {
    fn n_modes(&self) -> usize;

    fn evaluate(&self, cut: &Bipartition) -> Result<f64>;

    /// Whether `evaluate(A) == evaluate(complement(A))` always holds, which
    /// lets callers evaluate only one side.
    fn is_symmetric(&self) -> bool {
        false
    }
}

/// Entropic entanglement of a pure state. The marginal of the smaller side
/// is the one diagonalized.
#[derive(Debug, Clone)]
pub struct EntropicCut {
    state: GaussianState,
}

impl EntropicCut {
    /// Checks purity once, up front.
    pub fn new(state: GaussianState) -> Result<Self> {
        check_pure(&state)?;
        Ok(Self { state })
    }

    pub fn state(&self) -> &GaussianState {
        &self.state
    }
}

impl CutFunction for EntropicCut {
    fn n_modes(&self) -> usize {
        self.state.n_modes()
    }

    fn evaluate(&self, cut: &Bipartition) -> Result<f64> {
        check_size(self.n_modes(), cut)?;
        reduced_entropy(&self.state, &cut.smaller_side())
    }

    fn is_symmetric(&self) -> bool {
        true
    }
}

/// Logarithmic negativity, flipping the momenta of `side_a`.
#[derive(Debug, Clone)]
pub struct LogNegativityCut {
    state: GaussianState,
}

impl LogNegativityCut {
    pub fn new(state: GaussianState) -> Self {
        Self { state }
    }

    pub fn state(&self) -> &GaussianState {
        &self.state
    }
}

impl CutFunction for LogNegativityCut {
    fn n_modes(&self) -> usize {
        self.state.n_modes()
    }

    fn evaluate(&self, cut: &Bipartition) -> Result<f64> {
        log_negativity(&self.state, cut)
    }
}

/// GF(2) cut-rank of a qubit graph, in bits.
#[derive(Debug, Clone)]
pub struct QubitCut {
    graph: QubitGraph,
}

impl QubitCut {
    pub fn new(graph: QubitGraph) -> Self {
        Self { graph }
    }
}

impl CutFunction for QubitCut {
    fn n_modes(&self) -> usize {
        self.graph.n_vertices()
    }

    fn evaluate(&self, cut: &Bipartition) -> Result<f64> {
        Ok(qubit_cut_rank(&self.graph, cut)? as f64)
    }

    fn is_symmetric(&self) -> bool {
        true
    }
}

/// A cut function backed by a closure.
pub struct FnCut<F> {
    n_modes: usize,
    symmetric: bool,
    f: F,
}

impl<F> FnCut<F>
where
    F: Fn(&Bipartition) -> Result<f64> + Sync,
{
    /// `symmetric` must only be set when `f` agrees on every cut and its complement.
    pub fn new(n_modes: usize, symmetric: bool, f: F) -> Self {
        Self {
            n_modes,
            symmetric,
            f,
        }
    }
}

impl<F> CutFunction for FnCut<F>
where
    F: Fn(&Bipartition) -> Result<f64> + Sync,
{
    fn n_modes(&self) -> usize {
        self.n_modes
    }

    fn evaluate(&self, cut: &Bipartition) -> Result<f64> {
        check_size(self.n_modes, cut)?;
        (self.f)(cut)
    }

    fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

fn check_size(n_modes: usize, cut: &Bipartition) -> Result<()> {
    if cut.n_modes() != n_modes {
        return Err(Error::DimensionMismatch {
            expected: n_modes,
            found: cut.n_modes(),
        });
    }
    Ok(())
}

/// Cut values for every nonempty proper subset of `n` modes, indexed by bit mask.
///
/// For symmetric cuts only masks without the top mode are evaluated and the
/// rest are mirrored. Evaluation runs on the rayon pool; values land by
/// index, so the table does not depend on scheduling.
pub(crate) struct CutTable {
    pub values: Vec<f64>,
    pub evaluations: u64,
}

impl CutTable {
    pub fn build<C: CutFunction + ?Sized>(cut: &C) -> Result<Self> {
        let n = cut.n_modes();
        let full: u64 = (1u64 << n) - 1;
        let symmetric = cut.is_symmetric();
        let keys: Vec<u64> = if symmetric {
            (1..1u64 << (n - 1)).collect()
        } else {
            (1..full).collect()
        };
        let computed: Vec<f64> = keys
            .par_iter()
            .map(|&mask| {
                let v = cut.evaluate(&Bipartition::from_mask(n, mask)?)?;
                if !(v.is_finite() && v >= 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "cut value {v} for mask {mask:#x} is not a finite nonnegative number"
                    )));
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        let mut values = vec![f64::NAN; 1usize << n];
        for (&mask, &v) in keys.iter().zip(&computed) {
            values[mask as usize] = v;
            if symmetric {
                values[(full ^ mask) as usize] = v;
            }
        }
        Ok(Self {
            values,
            evaluations: keys.len() as u64,
        })
    }
}
