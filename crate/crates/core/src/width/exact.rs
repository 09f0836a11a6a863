use rayon::prelude::*;

use super::cut::{CutFunction, CutTable};
use super::decomposition::{Decomposition, Split};
use crate::error::{Error, Result};
use crate::modes::Bipartition;

/// Default largest mode count accepted by [`exact_width`].
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactWidthOptions {
    pub cap: usize,
    /// Process each cardinality layer on the rayon pool.
    pub parallel: bool,
}

impl Default for ExactWidthOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WidthResult {
    pub width: f64,
    pub witness: Decomposition,
    pub cut_evaluations: u64,
    /// The witness edge bipartition whose value is the width.
    pub maximizing_cut: Bipartition,
}

/// Minimum width over all decompositions, by the subset recursion
///
/// ```text
/// w(X) = cut(X)                                                   |X| = 1
/// w(X) = min_{∅≠Y⊊X} max{cut(Y), cut(X∖Y), w(Y), w(X∖Y)}          |X| ≥ 2
/// ```
///
/// with every cut taken against the full mode set, and the answer `w(Q)`.
pub fn exact_width<C: CutFunction + ?Sized>(cut: &C) -> Result<WidthResult> {
    exact_width_with(cut, ExactWidthOptions::default())
}

pub fn exact_width_with<C: CutFunction + ?Sized>(
    cut: &C,
    options: ExactWidthOptions,
) -> Result<WidthResult> {
    let n = cut.n_modes();
    let cap = options.cap.min(63);
    if n > cap {
        return Err(Error::CapExceeded { n_modes: n, cap });
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "width needs at least 2 modes, got {n}"
        )));
    }
    let table = CutTable::build(cut)?;
    let (w, best) = solve(n, &table.values, options.parallel);

    let full = (1u64 << n) - 1;
    let witness = Decomposition::from_rooted(&rebuild(full, &best))?;
    let parts = witness.edge_bipartitions();
    let (_, maximizing_cut) = parts
        .into_iter()
        .map(|p| (table.values[p.mask().expect("n ≤ 63") as usize], p))
        .fold(None, |acc: Option<(f64, Bipartition)>, (v, p)| match acc {
            Some((bv, bp)) if bv >= v => Some((bv, bp)),
            _ => Some((v, p)),
        })
        .expect("a decomposition has at least one edge");
    Ok(WidthResult {
        width: w[full as usize],
        witness,
        cut_evaluations: table.evaluations,
        maximizing_cut,
    })
}

/// Runs the recursion over all subsets by increasing size. Returns the value
/// table and, for `|X| ≥ 2`, the chosen `Y`.
fn solve(n: usize, cut: &[f64], parallel: bool) -> (Vec<f64>, Vec<u64>) {
    let size = 1usize << n;
    let mut w = vec![f64::NAN; size];
    let mut best = vec![0u64; size];
    for i in 0..n {
        w[1 << i] = cut[1 << i];
    }
    let mut layers: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for x in 1..size as u64 {
        layers[x.count_ones() as usize].push(x);
    }
    for layer in &layers[2..] {
        let step = |&x: &u64| best_split(x, cut, &w);
        let results: Vec<(f64, u64)> = if parallel {
            layer.par_iter().map(step).collect()
        } else {
            layer.iter().map(step).collect()
        };
        for (&x, (v, y)) in layer.iter().zip(results) {
            w[x as usize] = v;
            best[x as usize] = y;
        }
    }
    (w, best)
}

/// Minimizes over splits `Y | X∖Y` with `Y` holding the lowest bit of `X`.
/// Submasks are visited in decreasing order and the first minimum wins.
fn best_split(x: u64, cut: &[f64], w: &[f64]) -> (f64, u64) {
    let low = x & x.wrapping_neg();
    let rest = x ^ low;
    let mut best_v = f64::INFINITY;
    let mut best_y = 0;
    let mut sub = rest;
    loop {
        sub = sub.wrapping_sub(1) & rest;
        let y = sub | low;
        let z = x ^ y;
        let (y, z) = (y as usize, z as usize);
        let v = cut[y].max(cut[z]).max(w[y]).max(w[z]);
        if v < best_v {
            best_v = v;
            best_y = y as u64;
        }
        if sub == 0 {
            break;
        }
    }
    (best_v, best_y)
}

fn rebuild(x: u64, best: &[u64]) -> Split {
    if x.count_ones() == 1 {
        return Split::Leaf(x.trailing_zeros() as usize);
    }
    let y = best[x as usize];
    Split::join(rebuild(y, best), rebuild(x ^ y, best))
}
