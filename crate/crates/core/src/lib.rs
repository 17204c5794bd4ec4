//! Graphs, closedness, and graded Betti numbers of binomial edge ideals.
//!
//! Closed-form Betti tables for complete graphs, paths, lollipops and their
//! free-cut-edge extensions live in [`betti`]. [`hochster`] computes Betti
//! tables of monomial edge ideals from simplicial homology and serves as an
//! independent check on the closed forms through the initial graph of a
//! closed graph.

pub mod betti;
pub mod classifier;
pub mod closedness;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod verify;

pub use betti::{BettiTable, IdealBettiTable, Purity, StrandPrediction, StrandStatus};
pub use classifier::{classify_pure, has_linear_resolution, obstruction_scan, Obstruction, PureClass};
pub use closedness::{find_closed_labeling, in_graph, is_closed, BipartiteInitialGraph, ClosedLabeling};
pub use error::{Error, Result};
pub use format::{parse_graph, Format, GraphDocument};
pub use graph::{CliqueCensus, Edge, Graph};
pub use hochster::{closed_strand_check, hochster_betti, roth_van_tuyl, HochsterConfig};
pub use linalg::Coefficients;
