//! Entanglement of Gaussian continuous-variable cluster states.
//!
//! States are covariance matrices in X-major quadrature order, normalized so
//! the vacuum is the identity. Cluster states are built from weighted graphs
//! ([`cluster`]), their entanglement across a cut is measured in nats
//! ([`measures`]), and the entanglement width over tree decompositions is
//! computed exactly for small mode counts ([`width`]). Closed forms for
//! wires, stars, complete graphs and grids live in [`analytic`].

pub mod analytic;
pub mod cluster;
pub mod error;
pub mod graph;
pub mod measures;
pub mod modes;
pub mod phase_space;
pub mod qubit;
pub mod width;

pub use error::{Error, Result};
pub use modes::Bipartition;
pub use phase_space::GaussianState;
