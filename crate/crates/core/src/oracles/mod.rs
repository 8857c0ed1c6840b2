//! Exhaustive ground-truth computations on small graphs.

mod chain;
mod degeneracy;
mod eat;
mod equivalence;
mod induced;

use thiserror::Error;

pub use chain::{chain_index, chain_index_graph, ChainIndex, ChainWitness, DEFAULT_CHAIN_CAP};
pub use degeneracy::{degeneracy, forward_degree, Degeneracy};
pub use eat::{find_edge_asteroid_triple, EatWitness, NeighbourhoodMode};
pub use equivalence::{biclique_ids, equivalence_partition, is_equivalence_graph, Biclique};
pub use induced::{contains_induced, contains_induced_bipartite, is_induced_embedding, Embedding, MAX_PATTERN};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("pattern has {0} vertices, at most 12 supported")]
    PatternTooLarge(usize),
}
