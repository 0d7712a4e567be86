//! Exact graph coloring for small graphs.
//!
//! The crate lists the maximal independent sets of bounded size in a graph
//! ([`mis::small_mis`]), evaluates the matching counting bound
//! ([`bound::mis_bound`]), and drives both from a dynamic program over vertex
//! subsets that yields the chromatic number and an optimal coloring
//! ([`chromatic::solve`]). Brute-force references live in [`oracles`].

pub mod bound;
pub mod chromatic;
pub mod coloring;
pub mod dimacs;
pub mod error;
pub mod generate;
pub mod graph;
pub mod mis;
pub mod oracles;
pub mod small_chi;
pub mod vertex_set;

#[cfg(test)]
mod test_support;

pub use bound::{mis_bound, BoundValue};
pub use chromatic::{
    chromatic_number, extract_coloring, solve, DpTable, DEFAULT_DP_CAP, MAX_DP_CAP,
};
pub use coloring::{is_proper_coloring, Coloring};
pub use dimacs::{from_dimacs, from_dimacs_with_cap, to_dimacs};
pub use error::{DpError, GraphError, OracleError};
pub use graph::{Graph, DEFAULT_VERTEX_CAP, MAX_VERTICES};
pub use mis::{is_maximal_independent, small_mis, small_mis_filtered, EnumStats};
pub use small_chi::chi_at_most_3;
pub use vertex_set::VertexSet;
