//! Exact symbolic checks over F2 on the quartic del Pezzo surfaces `D1`, `D2`,
//! `D3`: their automorphism families, the induced actions on the two pencils
//! of conics, and composition within each family.

mod maps;
mod poly;
mod surface;
mod verify;

pub use maps::{aut, compose, recover, unit_normalizer, Params, ProjMap};
pub use poly::{unit_power, Monomial, ParamPoly, Var};
pub use surface::{pencils, surface, Kind, Pencil, QuadricPair};
pub use verify::{
    compose_matrix, eval, is_identity_action, mul_action, pencil_action, pencil_action_matrix, quadratic_monomials,
    same_action, sample_matrix, verify_preserves, Coeff, Fq, PencilAction, Verification,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DpError {
    #[error("{kind} takes different parameters (given {given})")]
    WrongArity { kind: Kind, given: usize },
    #[error("map is not invertible: determinant {0}")]
    NotInvertible(String),
    #[error("{0} is not a unit monomial")]
    NotAUnit(String),
    #[error("not a linear form: {0}")]
    NotLinear(String),
    #[error("pencil forms are dependent: {0}")]
    DegeneratePencil(String),
    #[error("no value for {0}")]
    Unassigned(String),
}
