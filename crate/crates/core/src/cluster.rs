//! Gaussian cluster states built from weighted graphs, and uniform photon loss.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::phase_space::{GaussianState, SymplecticMatrix};

/// Initial single-mode squeezing. `zeta < 0` squeezes momentum, and the
/// squeezing parameter is `B = e^{-2ζ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezingParams {
    zeta: f64,
}

impl SqueezingParams {
    pub fn from_zeta(zeta: f64) -> Result<Self> {
        if !zeta.is_finite() {
            return Err(Error::InvalidParameter(format!("squeezing ζ = {zeta}")));
        }
        Ok(Self { zeta })
    }

    pub fn from_b(b: f64) -> Result<Self> {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "squeezing parameter B must be positive, got {b}"
            )));
        }
        Ok(Self { zeta: -0.5 * b.ln() })
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn b(&self) -> f64 {
        (-2.0 * self.zeta).exp()
    }

    /// Momentum variance `e^{-2|ζ|}/2` of the momentum-squeezed vacuum.
    pub fn momentum_variance(&self) -> f64 {
        (-2.0 * self.zeta.abs()).exp() / 2.0
    }
}

/// Symplectic matrix of `exp(i·s·X_i X_j)`: a shear `P_i += s X_j`, `P_j += s X_i`.
pub fn cz_symplectic(i: usize, j: usize, strength: f64, n_modes: usize) -> Result<SymplecticMatrix> {
    if i >= n_modes || j >= n_modes {
        return Err(Error::ModeOutOfRange {
            index: i.max(j),
            n_modes,
        });
    }
    if i == j {
        return Err(Error::InvalidParameter(format!(
            "controlled-Z needs two distinct modes, got {i} twice"
        )));
    }
    if !strength.is_finite() {
        return Err(Error::InvalidParameter(format!("bond strength {strength}")));
    }
    let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
    s[(n_modes + j, i)] = strength;
    s[(n_modes + i, j)] = strength;
    Ok(SymplecticMatrix::new_unchecked(s))
}

/// Product of the controlled-Z shears for every edge of `graph`.
///
/// Each shear is `I + E` with `E` supported on the lower-left block, and any
/// product `E₁E₂` vanishes, so the product is the identity plus the weighted
/// adjacency in that block, whatever the order.
pub fn cz_network(graph: &WeightedGraph) -> SymplecticMatrix {
    let n = graph.n_vertices();
    let mut s = DMatrix::identity(2 * n, 2 * n);
    for e in graph.edges() {
        s[(n + e.b, e.a)] += e.strength;
        s[(n + e.a, e.b)] += e.strength;
    }
    SymplecticMatrix::new_unchecked(s)
}

/// Vacuum on every vertex, then a controlled-Z of the edge's strength per edge.
pub fn canonical_cluster(graph: &WeightedGraph) -> GaussianState {
    GaussianState::vacuum(graph.n_vertices())
        .apply_symplectic(&cz_network(graph))
        .expect("network dimension matches vertex count")
}

/// Momentum-squeezed vacua `diag(B, 1/B)` joined by unit-strength controlled-Z gates.
pub fn physical_cluster(graph: &WeightedGraph, squeeze: SqueezingParams) -> Result<GaussianState> {
    if !graph.has_unit_strengths() {
        return Err(Error::InvalidGraph(
            "physical construction needs unit-strength edges".into(),
        ));
    }
    let n = graph.n_vertices();
    let b = squeeze.b();
    let mut gamma = DMatrix::zeros(2 * n, 2 * n);
    for q in 0..n {
        gamma[(q, q)] = b;
        gamma[(n + q, n + q)] = 1.0 / b;
    }
    GaussianState::from_covariance(gamma)?.apply_symplectic(&cz_network(graph))
}

/// Independent loss of transmissivity `eta` on every mode:
/// `Γ ↦ ηΓ + (1-η)I`, `d ↦ √η d`.
pub fn apply_loss(state: &GaussianState, eta: f64) -> Result<GaussianState> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidParameter(format!(
            "transmissivity must lie in [0, 1], got {eta}"
        )));
    }
    let dim = state.gamma().nrows();
    let gamma = state.gamma() * eta + DMatrix::identity(dim, dim) * (1.0 - eta);
    GaussianState::new(gamma, state.displacement() * eta.sqrt())
}
