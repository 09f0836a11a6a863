//! Covariance-matrix description of Gaussian states.
//!
//! Quadratures are ordered X-major: indices `0..N` hold the positions
//! `X_1..X_N` and `N..2N` the momenta `P_1..P_N`. Covariances are normalized
//! so the vacuum has `Γ = I`.

use nalgebra::{Cholesky, DMatrix, DVector, Schur};

use crate::error::{Error, Result};

/// Slack below 1 tolerated on symplectic eigenvalues of physical states.
pub const PHYSICAL_SLACK: f64 = 1e-8;
/// Relative asymmetry tolerated in a covariance matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Relative residual tolerated when matching eigenvalues into ± pairs.
pub const PAIRING_TOL: f64 = 1e-8;
/// Residual tolerated in `SᵗΣS = Σ`, relative to the largest entry of `S` squared.
pub const SYMPLECTIC_TOL: f64 = 1e-10;

/// The symplectic form `[[0, I], [-I, 0]]` for `n_modes` modes.
pub fn symplectic_form(n_modes: usize) -> DMatrix<f64> {
    let dim = 2 * n_modes;
    let mut sigma = DMatrix::zeros(dim, dim);
    for i in 0..n_modes {
        sigma[(i, n_modes + i)] = 1.0;
        sigma[(n_modes + i, i)] = -1.0;
    }
    sigma
}

/// `Σ·M` without a matrix product: Σ only swaps and negates row blocks.
fn sigma_times(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows() / 2;
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        if i < n {
            m[(n + i, j)]
        } else {
            -m[(i - n, j)]
        }
    })
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

fn check_square_even(m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    if m.nrows() == 0 || m.nrows() % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "phase-space matrices need a positive even dimension, got {}",
            m.nrows()
        )));
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(m.nrows() / 2)
}

/// A real matrix satisfying `SᵗΣS = Σ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticMatrix {
    s: DMatrix<f64>,
}

impl SymplecticMatrix {
    pub fn new(s: DMatrix<f64>) -> Result<Self> {
        let n = check_square_even(&s)?;
        let sigma = symplectic_form(n);
        let residual = max_abs(&(s.transpose() * &sigma * &s - &sigma));
        let scale = max_abs(&s).max(1.0);
        if residual > SYMPLECTIC_TOL * scale * scale {
            return Err(Error::NotSymplectic { residual });
        }
        Ok(Self { s })
    }

    /// Wraps a matrix already known to be symplectic by construction.
    pub(crate) fn new_unchecked(s: DMatrix<f64>) -> Self {
        Self { s }
    }

    pub fn identity(n_modes: usize) -> Self {
        Self::new_unchecked(DMatrix::identity(2 * n_modes, 2 * n_modes))
    }

    /// Single-mode squeezer with real parameter ζ: `X ↦ e^{-ζ}X`, `P ↦ e^{ζ}P`.
    ///
    /// ζ < 0 squeezes momentum; acting on vacuum it gives `diag(B, 1/B)` with
    /// `B = e^{-2ζ}`.
    pub fn single_mode_squeeze(n_modes: usize, mode: usize, zeta: f64) -> Result<Self> {
        if mode >= n_modes {
            return Err(Error::ModeOutOfRange {
                index: mode,
                n_modes,
            });
        }
        if !zeta.is_finite() {
            return Err(Error::InvalidParameter(format!("squeezing ζ = {zeta}")));
        }
        let mut s = DMatrix::identity(2 * n_modes, 2 * n_modes);
        s[(mode, mode)] = (-zeta).exp();
        s[(n_modes + mode, n_modes + mode)] = zeta.exp();
        Ok(Self::new_unchecked(s))
    }

    pub fn n_modes(&self) -> usize {
        self.s.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.s
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &SymplecticMatrix) -> Result<Self> {
        if self.s.nrows() != other.s.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.s.nrows(),
                found: other.s.nrows(),
            });
        }
        Ok(Self::new_unchecked(&self.s * &other.s))
    }
}

/// Symplectic eigenvalues `λ_1 ≥ … ≥ λ_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpectrum {
    values: Vec<f64>,
}

impl SymplecticSpectrum {
    fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    /// Largest `|λ - 1|`.
    pub fn purity_deviation(&self) -> f64 {
        self.values
            .iter()
            .fold(0.0f64, |acc, &l| acc.max((l - 1.0).abs()))
    }

    /// Values with those in `[1 - PHYSICAL_SLACK, 1)` snapped to exactly 1.
    pub fn clamped(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|&l| {
                if (1.0 - PHYSICAL_SLACK..1.0).contains(&l) {
                    1.0
                } else {
                    l
                }
            })
            .collect()
    }
}

/// How the symplectic spectrum is extracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpectrumRoute {
    /// The Cholesky route.
    #[default]
    Auto,
    /// Nonsymmetric eigensolve of `ΣΓ`, whose eigenvalues are `±iλ_k`.
    ///
    /// nalgebra's Schur iteration can stall on exactly structured input
    /// (the vacuum, many pure-state marginals and partial transposes) and
    /// then reports [`Error::NoConvergence`]. Useful as a cross-check on
    /// generic matrices.
    General,
    /// With `Γ = LLᵗ`, the skew matrix `A = LᵗΣL` is similar to `ΣΓ`; the
    /// eigenvalues of the symmetric `AᵗA` are `λ_k²`, each twice.
    Cholesky,
}

/// Symplectic eigenvalues of a covariance matrix, via [`SpectrumRoute::Auto`].
pub fn symplectic_eigenvalues(gamma: &DMatrix<f64>) -> Result<SymplecticSpectrum> {
    symplectic_eigenvalues_with(gamma, SpectrumRoute::Auto)
}

pub fn symplectic_eigenvalues_with(
    gamma: &DMatrix<f64>,
    route: SpectrumRoute,
) -> Result<SymplecticSpectrum> {
    check_square_even(gamma)?;
    match route {
        SpectrumRoute::General => general_route(gamma),
        SpectrumRoute::Auto | SpectrumRoute::Cholesky => {
            // The Cholesky factor only reads one triangle, so check the other.
            let asymmetry = max_abs(&(gamma - gamma.transpose()));
            if asymmetry > SYMMETRY_TOL * (1.0 + max_abs(gamma)) {
                return Err(Error::NotSymmetric { asymmetry });
            }
            cholesky_route(gamma)
        }
    }
}

fn general_route(gamma: &DMatrix<f64>) -> Result<SymplecticSpectrum> {
    let n = gamma.nrows() / 2;
    let m = sigma_times(gamma);
    // Iteration budget as in LAPACK's Hessenberg QR.
    let max_iter = 30 * m.nrows().max(10);
    let schur = Schur::try_new(m, f64::EPSILON, max_iter).ok_or(Error::NoConvergence)?;
    let eig = schur.complex_eigenvalues();
    let scale = eig.iter().fold(1.0f64, |acc, z| acc.max(z.norm()));
    let tol = PAIRING_TOL * scale;

    let worst_real = eig.iter().fold(0.0f64, |acc, z| acc.max(z.re.abs()));
    if worst_real > tol {
        return Err(Error::SpectrumPairing {
            residual: worst_real / scale,
        });
    }
    let mut im: Vec<f64> = eig.iter().map(|z| z.im).collect();
    im.sort_by(|a, b| b.total_cmp(a));
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let (pos, neg) = (im[k], im[2 * n - 1 - k]);
        if pos < -tol || (pos + neg).abs() > tol {
            return Err(Error::SpectrumPairing {
                residual: (pos + neg).abs().max(-pos) / scale,
            });
        }
        values.push(0.5 * (pos - neg));
    }
    Ok(SymplecticSpectrum::from_unsorted(values))
}

fn cholesky_route(gamma: &DMatrix<f64>) -> Result<SymplecticSpectrum> {
    let n = gamma.nrows() / 2;
    let l = Cholesky::new(gamma.clone())
        .ok_or(Error::NotPositiveDefinite)?
        .unpack();
    let a = l.transpose() * sigma_times(&l);
    let gram = a.transpose() * &a;
    let mut mu: Vec<f64> = gram.symmetric_eigenvalues().iter().copied().collect();
    mu.sort_by(|a, b| a.total_cmp(b));
    let scale = mu.last().copied().unwrap_or(0.0).abs().max(1.0);
    let mut values = Vec::with_capacity(n);
    for pair in mu.chunks_exact(2) {
        let residual = (pair[1] - pair[0]).abs();
        if residual > PAIRING_TOL * scale {
            return Err(Error::SpectrumPairing {
                residual: residual / scale,
            });
        }
        values.push((0.5 * (pair[0] + pair[1])).max(0.0).sqrt());
    }
    Ok(SymplecticSpectrum::from_unsorted(values))
}

/// A Gaussian state: covariance matrix plus displacement.
///
/// The displacement is carried through transformations but no entanglement
/// quantity depends on it.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    gamma: DMatrix<f64>,
    displacement: DVector<f64>,
}

impl GaussianState {
    pub fn new(gamma: DMatrix<f64>, displacement: DVector<f64>) -> Result<Self> {
        check_square_even(&gamma)?;
        if displacement.len() != gamma.nrows() {
            return Err(Error::DimensionMismatch {
                expected: gamma.nrows(),
                found: displacement.len(),
            });
        }
        if displacement.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asymmetry = max_abs(&(&gamma - gamma.transpose()));
        if asymmetry > SYMMETRY_TOL * (1.0 + max_abs(&gamma)) {
            return Err(Error::NotSymmetric { asymmetry });
        }
        Ok(Self {
            gamma,
            displacement,
        })
    }

    /// A zero-displacement state with covariance `gamma`.
    pub fn from_covariance(gamma: DMatrix<f64>) -> Result<Self> {
        let dim = gamma.nrows();
        Self::new(gamma, DVector::zeros(dim))
    }

    pub fn vacuum(n_modes: usize) -> Self {
        let dim = 2 * n_modes;
        Self {
            gamma: DMatrix::identity(dim, dim),
            displacement: DVector::zeros(dim),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.gamma.nrows() / 2
    }

    pub fn gamma(&self) -> &DMatrix<f64> {
        &self.gamma
    }

    pub fn displacement(&self) -> &DVector<f64> {
        &self.displacement
    }

    /// `Γ ↦ SΓSᵗ`, `d ↦ Sd`.
    pub fn apply_symplectic(&self, s: &SymplecticMatrix) -> Result<Self> {
        if s.matrix().nrows() != self.gamma.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.gamma.nrows(),
                found: s.matrix().nrows(),
            });
        }
        let s = s.matrix();
        let mut gamma = s * &self.gamma * s.transpose();
        // Symmetrize away rounding so downstream checks see an exact mirror.
        let t = gamma.transpose();
        gamma += t;
        gamma *= 0.5;
        Ok(Self {
            gamma,
            displacement: s * &self.displacement,
        })
    }

    /// The reduced state on `keep`, in ascending mode order.
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        let n = self.n_modes();
        let mut modes = keep.to_vec();
        modes.sort_unstable();
        modes.dedup();
        if modes.is_empty() {
            return Err(Error::EmptyModeSet);
        }
        if let Some(&index) = modes.iter().find(|&&i| i >= n) {
            return Err(Error::ModeOutOfRange { index, n_modes: n });
        }
        let k = modes.len();
        let rows: Vec<usize> = modes
            .iter()
            .copied()
            .chain(modes.iter().map(|&i| n + i))
            .collect();
        let gamma = DMatrix::from_fn(2 * k, 2 * k, |i, j| self.gamma[(rows[i], rows[j])]);
        let displacement = DVector::from_fn(2 * k, |i, _| self.displacement[rows[i]]);
        Ok(Self {
            gamma,
            displacement,
        })
    }

    pub fn symplectic_spectrum(&self) -> Result<SymplecticSpectrum> {
        symplectic_eigenvalues(&self.gamma)
    }

    /// True iff every symplectic eigenvalue is at least `1 - PHYSICAL_SLACK`.
    pub fn is_physical(&self) -> Result<bool> {
        // A non positive-definite Γ has no Williamson form and is unphysical.
        if Cholesky::new(self.gamma.clone()).is_none() {
            return Ok(false);
        }
        Ok(self.symplectic_spectrum()?.min() >= 1.0 - PHYSICAL_SLACK)
    }
}
