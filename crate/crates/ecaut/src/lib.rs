//! Automorphism groups of elliptic curves and fixed-point counts, computed by
//! norms in the endomorphism order and, independently, by enumeration on
//! explicit curves over finite fields.

mod class;
pub mod curve;
pub mod field;
mod order;
mod table;

pub use class::{
    aut_group, element_orders, fixed_count, norm_values, separable_rule, units, AutGroup, Characteristic, CurveClass,
    GroupStructure, JClass, Reduction,
};
pub use curve::{
    automorphisms, brute_force_count, preserves_curve, representative, Curve, CurveAut, Point, Representative,
};
pub use field::Field;
pub use order::EndElt;
pub use table::{printed_rows, reproduce, PrintedRow, ReproRow, ReproStatus, TableReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EcError {
    #[error("inconsistent curve class: {0}")]
    InconsistentClass(String),
    #[error("no automorphism of order {0} in the group")]
    OrderNotRealized(u32),
    #[error("no separable-degree rule for order {0}")]
    MissingRule(u32),
    #[error("N(1-g) depends on the chosen root: {0:?}")]
    NormNotConstant(Vec<u64>),
    #[error("automorphism does not preserve the curve")]
    NotPreserved,
    #[error("unsupported field F_{p}^{k}")]
    BadField { p: u32, k: u32 },
    #[error("singular Weierstrass equation")]
    Singular,
}
