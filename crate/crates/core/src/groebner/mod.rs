//! Multivariate division, Buchberger's algorithm, reduced bases, and ideal
//! membership and equality.

mod basis;
mod buchberger;
mod division;
mod ideal;

pub use basis::{
    ideal_equal, ideal_membership, initial_ideal_member, is_groebner, is_reduced, reduce_basis,
    reduced_groebner_basis, GroebnerBasis,
};
pub use buchberger::{buchberger, MAX_PAIR_REDUCTIONS};
pub use division::{reduce, remainder, s_polynomial, Division};
pub use ideal::Ideal;

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the zero ideal is not supported")]
    ZeroIdeal,
    #[error("polynomials belong to different rings or orders")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gave up after {0} S-pair reductions")]
    ResourceExhausted(usize),
    #[error("input is not a Groebner basis")]
    NotGroebner,
}
