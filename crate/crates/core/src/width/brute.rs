use std::collections::BTreeMap;

use super::cut::CutFunction;
use super::decomposition::Decomposition;
use super::exact::WidthResult;
use crate::error::{Error, Result};
use crate::modes::Bipartition;

/// Largest mode count accepted by [`brute_force_width`].
pub const BRUTE_FORCE_MAX: usize = 7;

/// Every decomposition of `n` modes, grown one leaf at a time: leaf `k` is
/// attached to a new node subdividing each edge of each tree on `k` leaves.
///
/// Node `m < n` is the leaf of mode `m`; internal nodes follow.
pub fn enumerate_decompositions(n: usize) -> Result<Vec<Decomposition>> {
    if !(2..=BRUTE_FORCE_MAX).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 2..={BRUTE_FORCE_MAX} modes, got {n}"
        )));
    }
    let mut trees: Vec<Vec<(usize, usize)>> = vec![vec![(0, 1)]];
    for k in 2..n {
        let joint = n + k - 2;
        let mut next = Vec::with_capacity(trees.len() * (2 * k - 3));
        for tree in &trees {
            for (i, &(a, b)) in tree.iter().enumerate() {
                let mut t = tree.clone();
                t[i] = (a, joint);
                t.push((joint, b));
                t.push((joint, k));
                next.push(t);
            }
        }
        trees = next;
    }
    let labels: Vec<Option<usize>> = (0..2 * n - 2).map(|v| (v < n).then_some(v)).collect();
    trees
        .iter()
        .map(|edges| Decomposition::new(edges, labels.clone()))
        .collect()
}

/// Minimum width by checking every decomposition; the first minimizer in
/// enumeration order is the witness.
pub fn brute_force_width<C: CutFunction + ?Sized>(cut: &C) -> Result<WidthResult> {
    let trees = enumerate_decompositions(cut.n_modes())?;
    let mut memo: BTreeMap<Bipartition, f64> = BTreeMap::new();
    let mut best: Option<(f64, usize, Bipartition)> = None;
    for (index, tree) in trees.iter().enumerate() {
        let mut tree_max: Option<(f64, Bipartition)> = None;
        for part in tree.edge_bipartitions() {
            let v = match memo.get(&part) {
                Some(&v) => v,
                None => {
                    let v = cut.evaluate(&part)?;
                    memo.insert(part.clone(), v);
                    v
                }
            };
            if tree_max.as_ref().map_or(true, |(m, _)| v > *m) {
                tree_max = Some((v, part));
            }
        }
        let (v, part) = tree_max.expect("a decomposition has at least one edge");
        if best.as_ref().map_or(true, |(b, _, _)| v < *b) {
            best = Some((v, index, part));
        }
    }
    let (width, index, maximizing_cut) = best.expect("at least one tree");
    Ok(WidthResult {
        width,
        witness: trees[index].clone(),
        cut_evaluations: memo.len() as u64,
        maximizing_cut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::count_decompositions;
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_closed_form() {
        for n in 2..=BRUTE_FORCE_MAX {
            let trees = enumerate_decompositions(n).unwrap();
            assert_eq!(
                num_bigint::BigUint::from(trees.len()),
                count_decompositions(n).unwrap()
            );
        }
        assert!(enumerate_decompositions(8).is_err());
        assert!(enumerate_decompositions(1).is_err());
    }

    #[test]
    fn enumerated_trees_are_distinct() {
        // Two trees are the same decomposition iff they induce the same
        // set of bipartitions.
        let trees = enumerate_decompositions(6).unwrap();
        let signatures: BTreeSet<BTreeSet<Bipartition>> = trees
            .iter()
            .map(|t| t.edge_bipartitions().into_iter().collect())
            .collect();
        assert_eq!(signatures.len(), trees.len());
    }
}
