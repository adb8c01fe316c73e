//! Stabilizer lego blocks and conjoining at the check-matrix level.

mod block;
mod legos;
mod network;

pub use block::{self_trace, tensor_product, LegoBlock, Membership};
pub use legos::{iceberg_642, push_through, spider, xn_lego, zn_lego, LogicalBlock, GAUGE_LEG};
pub use network::{contract_network, ConjoinNetwork, LegRef};

use thiserror::Error;

use crate::gf2::Gf2Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjoinError {
    #[error("null contraction: gluing legs {a} and {b} gives the zero tensor")]
    NullContraction { a: usize, b: usize },
    #[error("cannot glue leg {0} to itself")]
    SameLeg(usize),
    #[error("leg {leg} out of range for a block with {legs} legs")]
    LegOutOfRange { leg: usize, legs: usize },
    #[error("generator has {found} legs, expected {expected}")]
    WordLength { expected: usize, found: usize },
    #[error("{generators} generators on {legs} legs")]
    TooManyGenerators { legs: usize, generators: usize },
    #[error("generators {first} and {second} anticommute")]
    Anticommuting { first: usize, second: usize },
    #[error("generator {index} depends on the earlier ones")]
    Dependent { index: usize },
    #[error("{found} labels for {expected} legs")]
    LabelCount { expected: usize, found: usize },
    #[error("leg order is not a permutation")]
    BadPermutation,
    #[error("no group element matches the requested legs")]
    NotPushable,
    #[error("network refers to missing block {0}")]
    UnknownBlock(usize),
    #[error("leg {leg} of block {block} is used twice")]
    LegReused { block: usize, leg: usize },
    #[error("leg {leg} of block {block} is neither contracted nor open")]
    DanglingLeg { block: usize, leg: usize },
    #[error(transparent)]
    Parse(#[from] Gf2Error),
}
