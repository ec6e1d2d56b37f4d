//! Threshold-based influence spread in undirected graphs.
//!
//! A vertex becomes active once at least `thr(v)` of its neighbours are
//! active. This crate computes the resulting spread for a seed set, solves
//! Max Open/Closed k-Influence and (k,ell)-Influence exactly by enumeration,
//! provides the twin, bounded-degree and fpt-ratio approximations, the
//! fixed-parameter decision procedure for unanimity thresholds on bounded
//! degree graphs, and generators for the gadget reductions from Dominating
//! Set, Clique and Densest k-Subgraph together with a verification harness.

pub mod approx;
pub mod bench;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod fpt;
pub mod graph;
pub mod oracles;
pub mod propagation;
pub mod record;
pub mod reductions;
pub mod threshold;
pub mod twins;

pub use error::{Error, GraphError, ParseErrorKind, Result};
pub use graph::{Graph, GraphBuilder, Vertex};
pub use oracles::{DecisionResult, SearchConfig, SolveResult};
pub use propagation::{propagate, sigma_closed, sigma_open, ActivationTrace, SeedSet};
pub use threshold::{Instance, Scheme, ThresholdAssignment};
pub use twins::{false_twin_classes, TwinClass, TwinPartition};
