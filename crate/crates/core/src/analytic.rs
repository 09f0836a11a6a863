//! Closed forms for wires, stars, complete graphs and grid decompositions.
//!
//! All entropies are in nats.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::phase_space::PHYSICAL_SLACK;

/// Entropy of one symplectic normal mode:
/// `h(λ) = ((λ+1)/2)ln((λ+1)/2) − ((λ−1)/2)ln((λ−1)/2)`, with `h(1) = 0`.
pub fn ee_term(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda < 1.0 - PHYSICAL_SLACK {
        return Err(Error::Unphysical(lambda));
    }
    if lambda <= 1.0 {
        return Ok(0.0);
    }
    // Written in a = (λ−1)/2 so the λ → 1 limit keeps full precision.
    let a = 0.5 * (lambda - 1.0);
    Ok((1.0 + a) * a.ln_1p() - a * a.ln())
}

/// High-squeezing form `ln(λ/2) + 1`; bounds [`ee_term`] from above for λ > 1.
pub fn ee_approx(lambda: f64) -> f64 {
    (lambda / 2.0).ln() + 1.0
}

/// Reduced symplectic eigenvalue `√(1+B²)` of a single bond.
pub fn single_bond_lambda(b: f64) -> f64 {
    (1.0 + b * b).sqrt()
}

/// Effective bond of a star cut at its centre: `√(n−1)·B`.
pub fn star_effective_b(n: usize, b: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("star needs n ≥ 2, got {n}")));
    }
    Ok(((n - 1) as f64).sqrt() * b)
}

/// Effective bond of a complete graph cut into `r` and `n − r` modes: `√r·√(n−r)·B`.
pub fn complete_effective_b(r: usize, n: usize, b: f64) -> Result<f64> {
    if n < 2 || r == 0 || r >= n {
        return Err(Error::InvalidParameter(format!(
            "complete-graph cut needs 1 ≤ r ≤ n−1, got r = {r}, n = {n}"
        )));
    }
    Ok((r as f64).sqrt() * ((n - r) as f64).sqrt() * b)
}

/// Symplectic spectrum of the odd/even cut of an `n`-mode wire.
#[derive(Debug, Clone, PartialEq)]
pub struct ZigzagSpectrum {
    pub n: usize,
    pub b: f64,
    pub values: Vec<f64>,
}

/// Number of nontrivial modes across the odd/even cut of an `n`-mode wire.
pub fn zigzag_mode_count(n: usize) -> usize {
    n / 2
}

/// `Λ_k = √(1 + 2B²(1 + cos(2kπ/(n+1))))` for `k = 1..⌊n/2⌋`.
pub fn zigzag_spectrum(n: usize, b: f64) -> Result<ZigzagSpectrum> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("wire needs n ≥ 2, got {n}")));
    }
    let values = (1..=zigzag_mode_count(n))
        .map(|k| {
            let c = (2.0 * k as f64 * PI / (n as f64 + 1.0)).cos();
            (1.0 + 2.0 * b * b * (1.0 + c)).sqrt()
        })
        .collect();
    Ok(ZigzagSpectrum { n, b, values })
}

pub fn zigzag_ee_exact(n: usize, b: f64) -> Result<f64> {
    zigzag_spectrum(n, b)?
        .values
        .iter()
        .map(|&l| ee_term(l))
        .sum()
}

/// Large-wire approximation for odd `n`. With the constant it is
/// `N₀[1 − (3/2)ln2 + ln√(1+2B²+√(1+4B²))]`; without, `N₀·ln√(1+2B²+√(1+4B²))`.
pub fn zigzag_ee_approx(n: usize, b: f64, with_constant: bool) -> Result<f64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "zigzag approximation is for odd n ≥ 3, got {n}"
        )));
    }
    let n0 = zigzag_mode_count(n) as f64;
    let b2 = b * b;
    let core = (1.0 + 2.0 * b2 + (1.0 + 4.0 * b2).sqrt()).sqrt().ln();
    let constant = if with_constant { 1.0 - 1.5 * LN_2 } else { 0.0 };
    Ok(n0 * (constant + core))
}

fn check_grid(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("grid needs l ≥ 2, got {l}")));
    }
    Ok(())
}

/// Diagonal-decomposition width estimate `(l−1)·ln√(1+4B²+√(1+8B²))`.
pub fn diag_width_approx(l: usize, b: f64) -> Result<f64> {
    check_grid(l)?;
    Ok((l - 1) as f64 * diag_slope(b))
}

fn diag_slope(b: f64) -> f64 {
    let b2 = b * b;
    (1.0 + 4.0 * b2 + (1.0 + 8.0 * b2).sqrt()).sqrt().ln()
}

/// Rectangular-decomposition width estimate `l·[ln√(1+2B²) + 1 − ln2]`.
pub fn rect_width_approx(l: usize, b: f64) -> Result<f64> {
    check_grid(l)?;
    Ok(l as f64 * ee_approx(single_bond_lambda(2f64.sqrt() * b)))
}

/// Compact rectangular estimate `l·ln√(1+2B²)`.
pub fn rect_width_approx_compact(l: usize, b: f64) -> Result<f64> {
    check_grid(l)?;
    Ok(l as f64 * (1.0 + 2.0 * b * b).sqrt().ln())
}

/// Qubits per mode obtainable from the diagonal width slope:
/// `ln√(1+4B²+√(1+8B²)) / ln2`.
pub fn conversion_rate(b: f64) -> f64 {
    diag_slope(b) / LN_2
}

/// The squeezing parameter at which [`conversion_rate`] is exactly one.
pub fn unit_rate_root() -> f64 {
    let (mut lo, mut hi) = (0.1f64, 2.0f64);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if conversion_rate(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn nats_to_bits(nats: f64) -> f64 {
    nats / LN_2
}

/// Number of subcubic trees with `n` labelled leaves: 1 for n ∈ {2, 3},
/// `(2n−5)!!` beyond.
pub fn count_decompositions(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "decompositions need at least 2 modes, got {n}"
        )));
    }
    let mut count = BigUint::from(1u32);
    let mut k = 3usize;
    while n >= 4 && k <= 2 * n - 5 {
        count *= k;
        k += 2;
    }
    Ok(count)
}
