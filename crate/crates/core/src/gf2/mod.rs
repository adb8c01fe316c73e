//! Bit-packed linear algebra over GF(2) and the symplectic Pauli representation.

mod bitvec;
mod matrix;
mod pauli;

pub use bitvec::BitVector;
pub use matrix::{BinaryMatrix, EchelonBasis};
pub use pauli::{Pauli, PauliType, PauliWord};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid bit character {0:?}")]
    BadBitChar(char),
    #[error("invalid Pauli character {0:?}")]
    BadPauliChar(char),
}
