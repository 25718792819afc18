//! The Hecke algebra of S_r over A = Z[u, u^-1], its Kazhdan-Lusztig bases,
//! cells of modules with basis, and the Temperley-Lieb quotient.

mod cells;
mod element;
mod group;
mod kl;
mod store;
mod tl;

pub use cells::{cells, cells_from_edges, right_cells, CellPartition};
pub use element::{Basis, HeckeElement};
pub use group::SymmetricGroup;
pub use kl::{KlCache, KlTable, Sparse};
pub use store::{kl_table, set_cache_dir};
pub use tl::{TemperleyLieb, TlElement};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("expected an element of rank {expected}, got rank {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("elements are expressed in different bases")]
    BasisMismatch,
    #[error("s_{0} is not a generator of H_{1}")]
    BadGenerator(usize, usize),
    #[error("bad KL cache: {0}")]
    Cache(String),
}

#[cfg(test)]
mod tests;
