//! Configurations of singular fibers on genus one pencils: the Euler budget
//! `e(S) = 12`, the extremality bound `Σ(m − 1) ≤ 8`, the bielliptic filters
//! and the shared-eight-components overlay search.

mod bielliptic;
mod config;
mod pairs;
mod shared8;
mod smooth;

pub use bielliptic::{
    bielliptic_filter, FilterVerdict, SharedPair, CONNECTOR_TOO_HEAVY, DEFICIT, MULTIPLICATIVE_TOO_BIG,
};
pub use config::{CharMode, Configuration, Entry, Marker, EULER_BUDGET, SHIODA_TATE_ROOM};
pub use pairs::{enumerate_pairs, realizable_filter, FilterOutcome, RejectedPair, ALLOW_LIST, NOT_IN_LIST};
pub use shared8::{
    pin_normalization, search as shared_eight_search_with, shared_eight_search, Overlay, SearchResult, FF_NORMALIZATION,
};
pub use smooth::{odd_order_alternatives, odd_order_smooth_case};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("order must be odd and at least 3, got {0}")]
    BadOrder(u32),
    #[error("malformed configuration: {0}")]
    Malformed(String),
    #[error("shared-eight search needs nine-component additive fibers, got {0}")]
    NotNineComponents(String),
    #[error(transparent)]
    Fiber(#[from] enriques_fibers::FiberError),
    #[error(transparent)]
    Ec(#[from] enriques_ecaut::EcError),
    #[error(transparent)]
    Lattice(#[from] enriques_lattice::LatticeError),
}
