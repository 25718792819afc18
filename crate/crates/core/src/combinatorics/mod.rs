//! Permutations, partitions, standard Young tableaux, RSK and dual
//! equivalence graphs.

mod de_graph;
mod partition;
mod perm;
mod rsk;
mod tableau;

pub use de_graph::{de_distance, dkt_edges, DeEdge, DeGraph};
pub use partition::Partition;
pub use perm::{bruhat_leq, Permutation};
pub use rsk::{rsk, rsk_inverse, rsk_perm};
pub use tableau::{canonical_cmp, syt_enumerate, Convention, Tableau};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("not a valid tableau: {0}")]
    InvalidTableau(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
