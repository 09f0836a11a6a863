//! Entropic entanglement and logarithmic negativity across a bipartition.
//!
//! Both are reported in nats.

use nalgebra::DMatrix;

use crate::analytic::ee_term;
use crate::error::{Error, Result};
use crate::modes::Bipartition;
use crate::phase_space::{symplectic_eigenvalues, GaussianState};

/// Largest deviation of a global symplectic eigenvalue from 1 for which a
/// state still counts as pure.
pub const PURITY_TOL: f64 = 1e-6;

fn check_cut(state: &GaussianState, cut: &Bipartition) -> Result<()> {
    if cut.n_modes() != state.n_modes() {
        return Err(Error::DimensionMismatch {
            expected: state.n_modes(),
            found: cut.n_modes(),
        });
    }
    Ok(())
}

/// Fails with [`Error::NotPure`] unless every global symplectic eigenvalue
/// is within [`PURITY_TOL`] of 1.
pub fn check_pure(state: &GaussianState) -> Result<()> {
    let deviation = state.symplectic_spectrum()?.purity_deviation();
    if deviation > PURITY_TOL {
        return Err(Error::NotPure { deviation });
    }
    Ok(())
}

/// Von Neumann entropy of the reduced state on `modes`.
///
/// This is the entanglement across `modes | rest` only when the global state
/// is pure; [`entropic_entanglement`] checks that, this does not.
pub fn reduced_entropy(state: &GaussianState, modes: &[usize]) -> Result<f64> {
    let spectrum = state.reduce(modes)?.symplectic_spectrum()?;
    spectrum.clamped().into_iter().map(ee_term).sum()
}

/// Entropic entanglement of a pure state: the entropy of the `side_a` marginal.
pub fn entropic_entanglement(state: &GaussianState, cut: &Bipartition) -> Result<f64> {
    check_cut(state, cut)?;
    check_pure(state)?;
    reduced_entropy(state, &cut.side_a())
}

/// `PΓP` with `P` negating the momentum rows of `side_a`.
pub fn partial_transpose(state: &GaussianState, cut: &Bipartition) -> Result<DMatrix<f64>> {
    check_cut(state, cut)?;
    let n = state.n_modes();
    let sign = |i: usize| {
        if i >= n && cut.contains(i - n) {
            -1.0
        } else {
            1.0
        }
    };
    let g = state.gamma();
    Ok(DMatrix::from_fn(2 * n, 2 * n, |i, j| sign(i) * sign(j) * g[(i, j)]))
}

/// Logarithmic negativity `Σ max(-ln λ^PT, 0)` over the partially transposed spectrum.
pub fn log_negativity(state: &GaussianState, cut: &Bipartition) -> Result<f64> {
    let spectrum = symplectic_eigenvalues(&partial_transpose(state, cut)?)?;
    let mut total = 0.0;
    for &l in spectrum.values() {
        if l <= 0.0 {
            return Err(Error::NonPositiveSpectrum(l));
        }
        if l < 1.0 {
            total -= l.ln();
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{single_bond_lambda, star_effective_b};
    use crate::cluster::{apply_loss, canonical_cluster, physical_cluster, SqueezingParams};
    use crate::graph::{path_graph, star_graph, WeightedGraph};
    use approx::assert_abs_diff_eq;

    #[test]
    fn single_bond_entropy() {
        let st = canonical_cluster(&path_graph(2, 1.0).unwrap());
        let cut = Bipartition::new(2, [0]).unwrap();
        let ee = entropic_entanglement(&st, &cut).unwrap();
        assert_abs_diff_eq!(ee, 0.553_303_299_720_515_7, epsilon = 1e-12);
    }

    #[test]
    fn product_state_has_no_entanglement() {
        let st = GaussianState::vacuum(2);
        let cut = Bipartition::new(2, [1]).unwrap();
        assert_eq!(entropic_entanglement(&st, &cut).unwrap(), 0.0);
        assert_eq!(log_negativity(&st, &cut).unwrap(), 0.0);
        let sq = physical_cluster(
            &WeightedGraph::new(2, vec![]).unwrap(),
            SqueezingParams::from_b(3.0).unwrap(),
        )
        .unwrap();
        assert_abs_diff_eq!(entropic_entanglement(&sq, &cut).unwrap(), 0.0, epsilon = 1e-12);
        assert_eq!(log_negativity(&sq, &cut).unwrap(), 0.0);
    }

    #[test]
    fn star_centre_matches_effective_bond() {
        let st = canonical_cluster(&star_graph(4, 1.0).unwrap());
        let cut = Bipartition::new(4, [0]).unwrap();
        let b = star_effective_b(4, 1.0).unwrap();
        assert_abs_diff_eq!(b, 3f64.sqrt(), epsilon = 1e-15);
        let expected = ee_term(single_bond_lambda(b)).unwrap();
        assert_abs_diff_eq!(entropic_entanglement(&st, &cut).unwrap(), expected, epsilon = 1e-10);
    }

    #[test]
    fn mixed_state_rejected() {
        let st = apply_loss(&canonical_cluster(&path_graph(2, 1.0).unwrap()), 0.9).unwrap();
        let cut = Bipartition::new(2, [0]).unwrap();
        assert!(matches!(
            entropic_entanglement(&st, &cut),
            Err(Error::NotPure { .. })
        ));
        assert!(log_negativity(&st, &cut).is_ok());
    }

    #[test]
    fn cut_size_must_match() {
        let st = GaussianState::vacuum(3);
        let cut = Bipartition::new(2, [0]).unwrap();
        assert!(entropic_entanglement(&st, &cut).is_err());
        assert!(log_negativity(&st, &cut).is_err());
    }

    #[test]
    fn single_bond_negativity() {
        // PΓP for the unit bond has symplectic eigenvalues √2 ∓ 1, so the
        // only contributing term is -ln(√2 - 1) = asinh(1).
        let st = canonical_cluster(&path_graph(2, 1.0).unwrap());
        let cut = Bipartition::new(2, [0]).unwrap();
        let ln = log_negativity(&st, &cut).unwrap();
        assert_abs_diff_eq!(ln, 0.881_373_587_019_543, epsilon = 1e-12);
        assert_abs_diff_eq!(ln, log_negativity(&st, &cut.complement()).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn loss_lowers_negativity() {
        let st = canonical_cluster(&path_graph(3, 1.0).unwrap());
        let cut = Bipartition::new(3, [1]).unwrap();
        let clean = log_negativity(&st, &cut).unwrap();
        let lossy = log_negativity(&apply_loss(&st, 0.9).unwrap(), &cut).unwrap();
        assert!(lossy < clean && lossy > 0.0);
        let gone = log_negativity(&apply_loss(&st, 0.0).unwrap(), &cut).unwrap();
        assert_eq!(gone, 0.0);
    }
}
