//! Exact Lin-Lu-Yau curvature on small graphs, and an exhaustive classifier
//! for generalized Halin graphs whose curvature is positive on every edge.
//!
//! All masses, transport costs and curvatures are exact rationals, so the
//! sign of a curvature value (in particular whether it is exactly zero) is
//! decided without tolerance.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable simple connected graphs with a precomputed distance
//!   table, plus the edge-list and graph6 text formats and canonical labeling.
//! - [`transport`]: exact Wasserstein distance between finitely supported
//!   probability measures on a graph.
//! - [`curvature`]: α-curvature, Lin-Lu-Yau curvature, its Laplacian dual and
//!   certificate checking.
//! - [`halin`]: plane trees, the tree-plus-leaf-cycle construction, wheel
//!   families and structural predicates.
//! - [`enumerate`]: exhaustive generation, isomorphism deduplication and the
//!   classification check.

pub mod curvature;
pub mod enumerate;
pub mod graph;
pub mod halin;
pub mod rational;
pub mod transport;

pub use curvature::{
    curvature_report, kappa_alpha, kappa_lly, kappa_lly_dual, CurvatureError, CurvatureReport,
};
pub use enumerate::{
    enumerate_halin, enumerate_halin_with, recognize_family, verify_theorem, ClassificationResult,
    EnumerateError, EnumerateOptions, FamilyLabel, TheoremReport,
};
pub use graph::{CanonicalForm, Edge, Graph, GraphError};
pub use halin::{build_halin, HalinGraph, PlaneTree};
pub use rational::Rational;
pub use transport::{wasserstein, Coupling, Measure, TransportError, TransportResult};
