//! Exact Groebner basis computations over fields with automorphisms, and a
//! check that an automorphism-invariant ideal is defined over the fixed field.

pub mod arith;
pub mod cli;
pub mod descent;
pub mod groebner;
pub mod poly;
