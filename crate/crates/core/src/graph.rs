//! Weighted graphs defining cluster states, plus the edge-list file format.
//!
//! The file format is line oriented:
//!
//! ```text
//! # comment
//! modes 3
//! 0 1 1.0
//! 1 2 0.5   # trailing comments are allowed
//! ```
//!
//! The `modes N` header must come before any edge. Each edge line holds two
//! distinct vertex indices and a positive bond strength.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub strength: f64,
}

/// An undirected graph whose edges carry positive bond strengths.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n_vertices: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (i, j, strength) in edges {
            if i >= n_vertices || j >= n_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) out of range for {n_vertices} vertices"
                )));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
            }
            if !(strength.is_finite() && strength > 0.0) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) has strength {strength}; strengths must be positive"
                )));
            }
            let (a, b) = (i.min(j), i.max(j));
            if !seen.insert((a, b)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            out.push(Edge { a, b, strength });
        }
        Ok(Self {
            n_vertices,
            edges: out,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The same edges, all with strength `strength`.
    pub fn with_strength(&self, strength: f64) -> Result<Self> {
        Self::new(
            self.n_vertices,
            self.edges.iter().map(|e| (e.a, e.b, strength)).collect(),
        )
    }

    pub fn has_unit_strengths(&self) -> bool {
        self.edges.iter().all(|e| e.strength == 1.0)
    }

    /// Symmetric matrix of bond strengths.
    pub fn adjacency(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n_vertices, self.n_vertices);
        for e in &self.edges {
            a[(e.a, e.b)] = e.strength;
            a[(e.b, e.a)] = e.strength;
        }
        a
    }

    /// Disjoint union, with `other`'s vertices shifted after ours.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> Self {
        let shift = self.n_vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            a: e.a + shift,
            b: e.b + shift,
            strength: e.strength,
        }));
        Self {
            n_vertices: self.n_vertices + other.n_vertices,
            edges,
        }
    }
}

fn check_size(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "{what} needs size at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// `l × l` grid, vertices numbered row-major from the top-left corner.
pub fn grid_graph(l: usize, strength: f64) -> Result<WeightedGraph> {
    check_size("grid", l, 2)?;
    let mut edges = Vec::with_capacity(2 * l * (l - 1));
    for r in 0..l {
        for c in 0..l {
            let v = r * l + c;
            if c + 1 < l {
                edges.push((v, v + 1, strength));
            }
            if r + 1 < l {
                edges.push((v, v + l, strength));
            }
        }
    }
    WeightedGraph::new(l * l, edges)
}

pub fn path_graph(n: usize, strength: f64) -> Result<WeightedGraph> {
    check_size("path", n, 2)?;
    WeightedGraph::new(n, (0..n - 1).map(|i| (i, i + 1, strength)).collect())
}

/// Star centred on vertex 0.
pub fn star_graph(n: usize, strength: f64) -> Result<WeightedGraph> {
    check_size("star", n, 2)?;
    WeightedGraph::new(n, (1..n).map(|i| (0, i, strength)).collect())
}

pub fn complete_graph(n: usize, strength: f64) -> Result<WeightedGraph> {
    check_size("complete graph", n, 2)?;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j, strength));
        }
    }
    WeightedGraph::new(n, edges)
}

impl FromStr for WeightedGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut n_modes: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "modes" {
                if n_modes.is_some() {
                    return Err(parse_err("repeated `modes` header".into()));
                }
                if fields.len() != 2 {
                    return Err(parse_err("expected `modes N`".into()));
                }
                let n = fields[1]
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("bad mode count: {e}")))?;
                n_modes = Some(n);
                continue;
            }
            if n_modes.is_none() {
                return Err(parse_err("edge before the `modes N` header".into()));
            }
            if fields.len() != 3 {
                return Err(parse_err(format!(
                    "expected `i j strength`, found {} fields",
                    fields.len()
                )));
            }
            let i = fields[0]
                .parse::<usize>()
                .map_err(|e| parse_err(format!("bad vertex `{}`: {e}", fields[0])))?;
            let j = fields[1]
                .parse::<usize>()
                .map_err(|e| parse_err(format!("bad vertex `{}`: {e}", fields[1])))?;
            let s = fields[2]
                .parse::<f64>()
                .map_err(|e| parse_err(format!("bad strength `{}`: {e}", fields[2])))?;
            edges.push((i, j, s));
        }
        let n = n_modes.ok_or(Error::Parse {
            line: 0,
            message: "missing `modes N` header".into(),
        })?;
        WeightedGraph::new(n, edges)
    }
}

impl fmt::Display for WeightedGraph {
    /// Writes the edge-list file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modes {}", self.n_vertices)?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.a, e.b, e.strength)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(grid_graph(3, 1.0).unwrap().edges().len(), 12);
        assert_eq!(grid_graph(15, 1.0).unwrap().edges().len(), 2 * 15 * 14);
        assert_eq!(path_graph(5, 1.0).unwrap().edges().len(), 4);
        assert_eq!(complete_graph(4, 1.0).unwrap().edges().len(), 6);
        let star = star_graph(4, 1.0).unwrap();
        let pairs: Vec<_> = star.edges().iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn families_reject_small_sizes() {
        assert!(grid_graph(1, 1.0).is_err());
        assert!(path_graph(1, 1.0).is_err());
        assert!(star_graph(1, 1.0).is_err());
        assert!(complete_graph(0, 1.0).is_err());
    }

    #[test]
    fn grid_is_row_major() {
        let g = grid_graph(3, 1.0).unwrap();
        let a = g.adjacency();
        assert_eq!(a[(4, 1)], 1.0);
        assert_eq!(a[(4, 3)], 1.0);
        assert_eq!(a[(4, 5)], 1.0);
        assert_eq!(a[(4, 7)], 1.0);
        assert_eq!(a[(2, 3)], 0.0);
    }

    #[test]
    fn validation() {
        assert!(WeightedGraph::new(2, vec![(0, 0, 1.0)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 2, 1.0)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 1, 0.0)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 1, -1.0)]).is_err());
        assert!(WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 0, 2.0)]).is_err());
    }

    #[test]
    fn parses_edge_list() {
        let text = "# two bonds\r\nmodes 3\r\n0 1 1.5\r\n\r\n1 2 0.25 # weak\n";
        let g: WeightedGraph = text.parse().unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.edges()[1].strength, 0.25);
        let again: WeightedGraph = g.to_string().parse().unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = "0 1 1.0\nmodes 2\n".parse::<WeightedGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = "modes 2\n0 1\n".parse::<WeightedGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "modes 2\n0 x 1\n".parse::<WeightedGraph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!("# nothing\n".parse::<WeightedGraph>().is_err());
        assert!("modes 2\n0 1 0\n".parse::<WeightedGraph>().is_err());
    }
}
