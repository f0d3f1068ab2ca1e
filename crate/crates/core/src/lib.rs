//! Exact maximum k-plex search.
//!
//! A k-plex is a vertex set in which every member is non-adjacent to at most
//! `k` members of the set, itself included. This crate implements an exact
//! branch-and-bound solver for the maximum k-plex problem, built around two
//! families of candidate-set upper bounds: greedy-coloring bounds (the plain
//! color bound and its relaxed variants, which let independent sets absorb
//! extra vertices without raising their contribution) and partition bounds
//! (non-neighborhood extractions ranked by density). The seesaw bound picks
//! the better extraction of the two families each round.
//!
//! The crate also ships instance parsers, a degeneracy-based heuristic lower
//! bound, degree peeling, and a brute-force oracle used as ground truth in
//! tests.
//!
//! `no_std`-compatible (`alloc` required); disabling the default `std`
//! feature drops the wall-clock entry points in [`solver`].

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bitset;
pub mod bounds;
pub mod graph;
pub mod kplex;
pub mod oracle;
pub mod solver;

pub use bitset::VertexSet;
pub use bounds::{BoundKind, BoundResult, Extraction, ExtractionKind};
pub use graph::{
    degeneracy_order, induced_subgraph, parse_auto, parse_dimacs, parse_edge_list, Graph,
    InstanceFormat, ParseError,
};
pub use kplex::{is_kplex, SearchState};
pub use oracle::{max_extension_bruteforce, max_kplex_bruteforce, OracleError, OracleResult};
#[cfg(feature = "std")]
pub use solver::solve;
pub use solver::{
    heuristic_lb, omega_upper_check, peel, solve_with_stop, SolveError, SolveReport,
};
