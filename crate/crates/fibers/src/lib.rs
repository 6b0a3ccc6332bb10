//! Singular fibers of genus one fibrations: Kodaira types, incidence models,
//! Euler numbers, numerical 2-connectedness and fixed loci of tame actions
//! that fix every component.

mod action;
mod model;
mod tag;

pub use action::{
    admissible_actions, check_admissible, fixed_euler, fixed_locus_check, ComponentAction, FiberAction,
    FixedLocusReport, Slot,
};
pub use model::{
    catalog, euler, two_connected_min, Branch, CatalogEntry, Component, FiberKind, FiberModel, SingularPoint,
};
pub use tag::FiberTag;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiberError {
    #[error("invalid fiber tag {0}")]
    InvalidTag(String),
    #[error("smooth fibers have no incidence model")]
    Smooth,
    #[error("model is irreducible")]
    Irreducible,
    #[error("malformed model: {0}")]
    Malformed(String),
    #[error("action order must be at least 2, got {0}")]
    BadOrder(u32),
    #[error("inadmissible action: {0}")]
    Inadmissible(String),
}
