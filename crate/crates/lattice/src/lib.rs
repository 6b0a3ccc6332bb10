//! The Enriques lattice `U ⊕ E8` (with `E8` negative definite) in the fixed
//! basis `(e, f, v1..v8)`, plus exact signature computations and the search
//! for isotropic sequences.

mod form;
mod search;
mod vector;

pub use form::{congruence_diagonal, determinant, signature, Signature};
pub use search::{search_sequences, search_sequences_capped, IsotropicSequence, DEFAULT_CAP};
pub use vector::{e8_cartan, gram, inner, reflect, validate_sequence, Vector10, RANK};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("reflection vector has square {0}, expected -2")]
    NotARoot(i64),
    #[error("sequence length {0} is out of range 1..=10")]
    LengthOutOfRange(usize),
    #[error("coordinate bound must be at least 1, got {0}")]
    BadBound(i64),
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
}
