//! Graph diameter approximation.
//!
//! The crate provides an immutable CSR [`Graph`], the search primitives the
//! estimators are built from, an exact oracle, the estimator family in
//! [`estimators`], a generator of hard 2-vs-3 diameter instances in
//! [`hardness`], seeded instance generators, and a small benchmark harness.

pub mod bench;
pub mod estimators;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod search;

pub use estimators::{Estimate, EstimateError, Method, Params, Witness};
pub use exact::{exact_apsp, exact_diameter, DistanceMatrix, ExactResult};
pub use graph::{finite_diameter_check, Diameter, Direction, Dist, Graph, GraphError, UNREACHABLE};
pub use io::{parse_edge_list, write_edge_list, ParseError, ParseOptions};
