//! Exact strong clique numbers for small graphs, with certificates.
//!
//! A *strong clique* of a graph is a set of edges in which every two edges
//! are within distance 2 in the line graph: they share an endpoint or are
//! joined by a third edge. `SC(G)` is the size of a largest one.
//!
//! ```
//! use strongclique::{strong_clique_number, Graph};
//!
//! let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
//! assert_eq!(strong_clique_number(&c5).size, 5);
//! ```

mod clique;
pub mod codec;
pub mod cycles;
mod error;
pub mod generators;
mod graph;
pub mod matching;
pub mod strong;
pub mod verifier;
pub mod witness;

pub use clique::maximum_clique;
pub use cycles::{find_cycle_of_length, girth, is_free, CycleWitness, Freeness};
pub use error::{Error, Result};
pub use graph::{Bipartition, Distance, EdgeId, Graph, Side, Subgraph};
pub use matching::{konig_cover, maximum_matching, vertex_cover_number, Matching, VertexCover};
pub use strong::{
    brute_force_sc, conflict_graph, edge_distance, is_strong_clique, strong_clique_number,
    CliqueCheck, ConflictGraph, StrongCliqueWitness,
};
