//! Monomials, term orders, and exact multivariate polynomials.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use parse::parse_polynomial;
pub(crate) use polynomial::merge_sub;
pub use polynomial::{Polynomial, Ring, Term};

use std::cmp::Ordering;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("monomial length mismatch: expected {0}, got {1}")]
    LengthMismatch(usize, usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient does not belong to the ring's field")]
    CoefficientOutsideField,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` clashes with the field generator")]
    VariableShadowsGenerator(String),
    #[error("unknown term order `{0}` (expected lex, deglex or degrevlex)")]
    UnknownOrder(String),
    #[error("variable precedence is not a permutation")]
    BadPrecedence,
    #[error("{message} at offset {offset}")]
    Parse { offset: usize, message: String },
}

pub fn compare_monomials(
    order: &TermOrder,
    a: &Monomial,
    b: &Monomial,
) -> Result<Ordering, PolyError> {
    order.try_compare(a, b)
}

/// The largest term of `f` under `order`.
pub fn leading_term(order: &TermOrder, f: &Polynomial) -> Result<Term, PolyError> {
    f.terms()
        .iter()
        .max_by(|a, b| order.compare(&a.monomial, &b.monomial))
        .cloned()
        .ok_or(PolyError::ZeroPolynomial)
}
