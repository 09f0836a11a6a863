//! Qubit graph states, where the entanglement across a cut is a GF(2) rank.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::modes::Bipartition;

/// Simple undirected graph stored as adjacency rows over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitGraph {
    rows: Vec<FixedBitSet>,
}

impl QubitGraph {
    /// Builds the graph from a 0/1 adjacency matrix given row by row.
    pub fn from_adjacency(adjacency: &[Vec<u8>]) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if i == j => {
                        return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")))
                    }
                    1 => rows[i].insert(j),
                    _ => {
                        return Err(Error::InvalidGraph(format!(
                            "adjacency entry ({i}, {j}) is {x}, not 0 or 1"
                        )))
                    }
                }
            }
        }
        for i in 0..n {
            for j in rows[i].ones() {
                if !rows[j].contains(i) {
                    return Err(Error::InvalidGraph(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    /// The underlying simple graph; bond strengths are ignored.
    pub fn from_graph(graph: &WeightedGraph) -> Self {
        let n = graph.n_vertices();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for e in graph.edges() {
            rows[e.a].insert(e.b);
            rows[e.b].insert(e.a);
        }
        Self { rows }
    }

    pub fn n_vertices(&self) -> usize {
        self.rows.len()
    }

    pub fn neighbours(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }
}

/// GF(2) rank of the adjacency block with rows in `side_a` and columns in the
/// complement: the entanglement across the cut in bits.
pub fn qubit_cut_rank(graph: &QubitGraph, cut: &Bipartition) -> Result<usize> {
    if cut.n_modes() != graph.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: graph.n_vertices(),
            found: cut.n_modes(),
        });
    }
    let mut side_b = cut.as_set().clone();
    side_b.toggle_range(..);

    // Row reduction; each basis row is already reduced against earlier pivots.
    let mut basis: Vec<(usize, FixedBitSet)> = Vec::new();
    for i in cut.as_set().ones() {
        let mut row = graph.rows[i].clone();
        row.intersect_with(&side_b);
        for (pivot, b) in &basis {
            if row.contains(*pivot) {
                row.symmetric_difference_with(b);
            }
        }
        if let Some(pivot) = row.minimum() {
            basis.push((pivot, row));
        }
    }
    Ok(basis.len())
}
