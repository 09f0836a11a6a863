use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::cut::CutFunction;
use crate::error::{Error, Result};
use crate::modes::Bipartition;

/// A subcubic tree whose leaves are labelled by the modes `0..n_modes`.
///
/// Every node has degree 1 or 3, and each leaf carries a distinct mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n_modes: usize,
    adjacency: Vec<Vec<usize>>,
    leaf_mode: Vec<Option<usize>>,
}

/// A rooted binary tree over modes, the shape the width recursion produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    Leaf(usize),
    Node(Box<Split>, Box<Split>),
}

impl Split {
    pub fn join(left: Split, right: Split) -> Split {
        Split::Node(Box::new(left), Box::new(right))
    }
}

impl Decomposition {
    /// Validates and wraps a tree given by its edges. `leaf_mode[v]` is the
    /// mode carried by node `v`, `None` for internal nodes.
    pub fn new(edges: &[(usize, usize)], leaf_mode: Vec<Option<usize>>) -> Result<Self> {
        let n_nodes = leaf_mode.len();
        let mut adjacency = vec![Vec::new(); n_nodes];
        for &(a, b) in edges {
            if a >= n_nodes || b >= n_nodes || a == b {
                return Err(Error::InvalidDecomposition(format!(
                    "bad edge ({a}, {b}) for {n_nodes} nodes"
                )));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let d = Self {
            n_modes: leaf_mode.iter().flatten().count(),
            adjacency,
            leaf_mode,
        };
        d.validate(edges.len())?;
        Ok(d)
    }

    fn validate(&self, n_edges: usize) -> Result<()> {
        let n_nodes = self.adjacency.len();
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.n_modes < 2 {
            return bad(format!("needs at least 2 leaves, found {}", self.n_modes));
        }
        if n_edges + 1 != n_nodes {
            return bad(format!("{n_nodes} nodes but {n_edges} edges"));
        }
        let mut seen = vec![false; n_nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("tree is disconnected".into());
        }
        let mut modes_seen = FixedBitSet::with_capacity(self.n_modes);
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            match (nbrs.len(), self.leaf_mode[v]) {
                (1, Some(m)) => {
                    if m >= self.n_modes || modes_seen.put(m) {
                        return bad(format!("leaf labels are not a bijection onto 0..{}", self.n_modes));
                    }
                }
                (3, None) => {}
                (deg, label) => {
                    return bad(format!("node {v} has degree {deg} and label {label:?}"));
                }
            }
        }
        Ok(())
    }

    /// The decomposition obtained from a rooted binary tree by removing the
    /// root and merging its two edges into one.
    pub fn from_rooted(root: &Split) -> Result<Self> {
        let Split::Node(left, right) = root else {
            return Err(Error::InvalidDecomposition(
                "a single leaf is not a decomposition".into(),
            ));
        };
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        let l = Self::build(left, &mut edges, &mut labels);
        let r = Self::build(right, &mut edges, &mut labels);
        edges.push((l, r));
        Self::new(&edges, labels)
    }

    fn build(split: &Split, edges: &mut Vec<(usize, usize)>, labels: &mut Vec<Option<usize>>) -> usize {
        match split {
            Split::Leaf(m) => {
                labels.push(Some(*m));
                labels.len() - 1
            }
            Split::Node(a, b) => {
                labels.push(None);
                let v = labels.len() - 1;
                let ca = Self::build(a, edges, labels);
                let cb = Self::build(b, edges, labels);
                edges.push((v, ca));
                edges.push((v, cb));
                v
            }
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn leaf_mode(&self, v: usize) -> Option<usize> {
        self.leaf_mode[v]
    }

    /// Tree edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n_nodes() - 1);
        for (a, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    /// Modes on the `b` side of edge `(a, b)`.
    fn side_of(&self, a: usize, b: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.n_modes);
        let mut stack = vec![(b, a)];
        while let Some((v, from)) = stack.pop() {
            if let Some(m) = self.leaf_mode[v] {
                set.insert(m);
            }
            stack.extend(self.adjacency[v].iter().filter(|&&w| w != from).map(|&w| (w, v)));
        }
        set
    }

    /// One bipartition per edge, in [`edges`](Self::edges) order, each with
    /// the side containing mode 0.
    pub fn edge_bipartitions(&self) -> Vec<Bipartition> {
        self.edges()
            .into_iter()
            .map(|(a, b)| {
                Bipartition::from_set(self.side_of(a, b))
                    .expect("every tree edge separates leaves")
                    .canonical()
            })
            .collect()
    }

    pub fn width<C: CutFunction + ?Sized>(&self, cut: &C) -> Result<f64> {
        Ok(self.width_with_argmax(cut)?.0)
    }

    /// The width and the least bipartition (in `Ord` order) attaining it.
    pub fn width_with_argmax<C: CutFunction + ?Sized>(&self, cut: &C) -> Result<(f64, Bipartition)> {
        if cut.n_modes() != self.n_modes {
            return Err(Error::DimensionMismatch {
                expected: self.n_modes,
                found: cut.n_modes(),
            });
        }
        // Distinct bipartitions only, each evaluated once.
        let parts: BTreeSet<Bipartition> = self.edge_bipartitions().into_iter().collect();
        let mut best: Option<(f64, Bipartition)> = None;
        for part in parts {
            let v = cut.evaluate(&part)?;
            if best.as_ref().map_or(true, |(b, _)| v > *b) {
                best = Some((v, part));
            }
        }
        Ok(best.expect("a decomposition has at least one edge"))
    }
}

/// Strings blocks of modes together: each block becomes a caterpillar whose
/// edges cut off the block's prefixes, and the blocks hang in order off a
/// spine whose edges cut off unions of leading blocks.
pub fn string_decomposition(blocks: &[Vec<usize>]) -> Result<Decomposition> {
    let n_modes: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = FixedBitSet::with_capacity(n_modes);
    for block in blocks {
        if block.is_empty() {
            return Err(Error::InvalidParameter("blocks must be nonempty".into()));
        }
        for &m in block {
            if m >= n_modes || seen.put(m) {
                return Err(Error::InvalidParameter(format!(
                    "blocks do not partition 0..{n_modes}"
                )));
            }
        }
    }
    if n_modes < 2 {
        return Err(Error::InvalidParameter("need at least 2 modes".into()));
    }

    let mut labels: Vec<Option<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    fn node(labels: &mut Vec<Option<usize>>, label: Option<usize>) -> usize {
        labels.push(label);
        labels.len() - 1
    }
    let mut prev_spine: Option<usize> = None;
    for block in blocks {
        let mut top = node(&mut labels, Some(block[0]));
        for &m in &block[1..] {
            let leaf = node(&mut labels, Some(m));
            let joint = node(&mut labels, None);
            edges.push((joint, top));
            edges.push((joint, leaf));
            top = joint;
        }
        let spine = node(&mut labels, None);
        edges.push((spine, top));
        if let Some(p) = prev_spine {
            edges.push((p, spine));
        }
        prev_spine = Some(spine);
    }
    let (edges, labels) = suppress_degree_two(edges, labels);
    Decomposition::new(&edges, labels)
}

/// Removes unlabelled nodes of degree 1 and merges the two edges at each
/// unlabelled node of degree 2, then renumbers the survivors.
fn suppress_degree_two(
    edges: Vec<(usize, usize)>,
    labels: Vec<Option<usize>>,
) -> (Vec<(usize, usize)>, Vec<Option<usize>>) {
    let n = labels.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive = vec![true; n];
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !alive[v] || labels[v].is_some() {
                continue;
            }
            let nbrs: Vec<usize> = adj[v].iter().copied().collect();
            match nbrs.len() {
                0 | 1 => {
                    for w in nbrs {
                        adj[w].remove(&v);
                    }
                }
                2 => {
                    adj[nbrs[0]].remove(&v);
                    adj[nbrs[1]].remove(&v);
                    adj[nbrs[0]].insert(nbrs[1]);
                    adj[nbrs[1]].insert(nbrs[0]);
                }
                _ => continue,
            }
            adj[v].clear();
            alive[v] = false;
            changed = true;
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut new_labels = Vec::new();
    for v in (0..n).filter(|&v| alive[v]) {
        index[v] = new_labels.len();
        new_labels.push(labels[v]);
    }
    let mut new_edges = Vec::new();
    for v in (0..n).filter(|&v| alive[v]) {
        for &w in adj[v].iter().filter(|&&w| v < w) {
            new_edges.push((index[v], index[w]));
        }
    }
    (new_edges, new_labels)
}

/// Anti-diagonals `r + c = d` of the row-major `l × l` grid, `d = 0..2l−2`,
/// each in ascending index order.
pub fn diagonal_blocks(l: usize) -> Vec<Vec<usize>> {
    (0..2 * l - 1)
        .map(|d| {
            (0..l)
                .filter(|&r| d >= r && d - r < l)
                .map(|r| r * l + (d - r))
                .collect()
        })
        .collect()
}

/// Rows of the row-major `l × l` grid.
pub fn rectangular_blocks(l: usize) -> Vec<Vec<usize>> {
    (0..l).map(|r| (r * l..(r + 1) * l).collect()).collect()
}

pub fn diagonal_decomposition(l: usize) -> Result<Decomposition> {
    check_grid(l)?;
    string_decomposition(&diagonal_blocks(l))
}

pub fn rectangular_decomposition(l: usize) -> Result<Decomposition> {
    check_grid(l)?;
    string_decomposition(&rectangular_blocks(l))
}

fn check_grid(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("grid needs l ≥ 2, got {l}")));
    }
    Ok(())
}
