//! Entanglement width: the least, over subcubic-tree decompositions of the
//! modes, of the largest cut value across a tree edge.

mod brute;
mod cut;
mod decomposition;
mod exact;

pub use brute::{brute_force_width, enumerate_decompositions, BRUTE_FORCE_MAX};
pub use cut::{CutFunction, EntropicCut, FnCut, LogNegativityCut, QubitCut};
pub use decomposition::{
    diagonal_blocks, diagonal_decomposition, rectangular_blocks, rectangular_decomposition,
    string_decomposition, Decomposition, Split,
};
pub use exact::{exact_width, exact_width_with, ExactWidthOptions, WidthResult, DEFAULT_CAP};
