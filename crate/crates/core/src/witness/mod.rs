//! Witness-producing constructions: long paths and cycles through
//! strong-clique matchings, `S`-minimal reductions, special matchings and
//! `(x, M)`-paths.

mod digraph;
mod minimal;
mod paths;
mod special;

pub use digraph::{semicomplete_hamiltonian_path, SemiCompleteDigraph, EXHAUSTIVE_MAX_VERTICES};
pub use minimal::{
    check_minimal_properties, s_minimal_reduce, Counterexample, MinimalityReport, PropertyOutcome,
    Reduction,
};
pub use paths::{
    auxiliary_digraph, matching_cycle, matching_path, AuxiliaryDigraph, MatchingCycle, PathWitness,
};
pub use special::{find_xm_path, is_special, is_x_special, XmPath};
