//! Iterative growth of sparse CSS-like subsystem codes.

mod driver;
mod phases;
mod stabilizer;

pub use driver::{
    grow, grow_iteration, grow_round, round_schedule, scaling_envelope, DistanceBounds,
    GrowthConfig, GrowthLog, Phase, PhaseRecord,
};
pub use phases::{concatenate_on, concatenate_support, nonisometric_reduce, shift_checks, ConcatRecord};
pub use stabilizer::{carve_x_stabilizer, reduce_generator_weights, stabilizer_nonisometry, Lattice};

use thiserror::Error;

use crate::code::{CodeError, WeightProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowError {
    #[error("invalid growth configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("seed has no tracked logical qubits")]
    NoLogicals,
    #[error("seed profile {profile:?} exceeds the configured caps")]
    SeedExceedsCaps { profile: WeightProfile },
    #[error("logical index {index} out of range for k = {k}")]
    LogicalIndex { index: usize, k: usize },
    #[error("bare logical has empty support")]
    EmptySupport,
    #[error("qubit {qubit} out of range for n = {n}")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("row {row} has weight {weight} but no fresh pairs left to reach cap {cap}")]
    Unreducible { row: usize, weight: usize, cap: usize },
    #[error("round {round} left profile {profile:?} outside the caps")]
    CapViolation { round: usize, profile: WeightProfile },
    #[error("operation needs commuting checks")]
    NotStabilizer,
    #[error("measurement would reveal logical {logical}")]
    LogicalMeasured { logical: usize },
    #[error("geometry precondition failed: {0}")]
    Geometry(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}
