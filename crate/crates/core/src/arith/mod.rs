//! Coefficient fields, their automorphisms, and fixed-field membership.

mod automorphism;
mod field;
pub(crate) mod gfpoly;

pub use automorphism::{Automorphism, AutomorphismGroup, MAX_GROUP_ORDER};
pub use field::{
    Coeff, FieldDescriptor, FieldElement, FieldKind, MAX_CHARACTERISTIC, MAX_RADICAND,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("value is not a canonical element of {0}")]
    NotInField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u64),
    #[error("radicand {0} must be a squarefree integer other than 0 and 1")]
    BadRadicand(i64),
    #[error("radicand {0} exceeds the supported magnitude 10^6")]
    RadicandTooLarge(i64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("automorphism group exceeds {0} elements")]
    GroupTooLarge(usize),
}
