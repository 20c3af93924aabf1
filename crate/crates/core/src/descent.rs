//! Automorphism action on polynomials and ideals, invariance testing, and the
//! descent check.
//!
//! For an ideal `I` stable under a finite group `A` of field automorphisms,
//! conjugating the reduced Groebner basis of `I` gives the reduced Groebner
//! basis of the conjugate ideal, which is `I` again. Elements cannot be
//! permuted since their leading monomials are distinct and conjugation leaves
//! monomials alone, so each element is fixed and every coefficient lies in
//! the fixed field of `A`. [`descent_check`] runs that argument on concrete
//! data and reports every step.

use thiserror::Error;

use crate::arith::{ArithError, Automorphism, AutomorphismGroup, Coeff};
use crate::groebner::{reduced_groebner_basis, GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, Polynomial, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("generator {index} is not homogeneous: {polynomial}")]
    NonHomogeneous { index: usize, polynomial: String },
    /// Conjugating the reduced basis of an invariant ideal changed it. This
    /// cannot happen for correct arithmetic and Groebner code.
    #[error("internal error: {automorphism} moved an element of the reduced basis of an invariant ideal")]
    BasisNotFixed { automorphism: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    DefinedOverFixedField,
    NotInvariant,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::DefinedOverFixedField => "DEFINED OVER FIXED FIELD",
            Verdict::NotInvariant => "NOT INVARIANT",
        }
    }
}

/// A generator `g` of `I` with `σg ∉ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub generator: Polynomial,
    pub image: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariance {
    pub automorphism: Automorphism,
    pub invariant: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientCheck {
    /// Index into the reduced basis.
    pub element: usize,
    pub monomial: Monomial,
    pub coeff: Coeff,
    pub fixed: bool,
}

#[derive(Debug, Clone)]
pub struct DescentReport {
    pub order: TermOrder,
    pub projective: bool,
    pub invariance: Vec<Invariance>,
    pub basis: GroebnerBasis,
    pub coefficients: Vec<CoefficientCheck>,
    pub verdict: Verdict,
}

impl DescentReport {
    pub fn all_coefficients_fixed(&self) -> bool {
        self.coefficients.iter().all(|c| c.fixed)
    }

    /// A positive verdict must agree with the coefficient table.
    pub fn is_consistent(&self) -> bool {
        self.verdict != Verdict::DefinedOverFixedField || self.all_coefficients_fixed()
    }
}

fn check_field(sigma: &Automorphism, f: &Polynomial) -> Result<(), DescentError> {
    if sigma.field() != f.field() {
        return Err(
            ArithError::FieldMismatch(sigma.field().to_string(), f.field().to_string()).into(),
        );
    }
    Ok(())
}

/// Applies `σ` to every coefficient of `f`.
pub fn conjugate_poly(sigma: &Automorphism, f: &Polynomial) -> Result<Polynomial, DescentError> {
    check_field(sigma, f)?;
    let out = f.map_coeffs(|c| sigma.apply(c));
    // Conjugation never touches monomials, so the leading term stays put.
    assert_eq!(out.leading_monomial(), f.leading_monomial());
    Ok(out)
}

/// The conjugate ideal `σI`, generator by generator.
pub fn conjugate_ideal(sigma: &Automorphism, ideal: &Ideal) -> Result<Ideal, DescentError> {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| conjugate_poly(sigma, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(gens)?)
}

fn invariance_under(
    sigma: &Automorphism,
    ideal: &Ideal,
    basis: &GroebnerBasis,
    order: &TermOrder,
) -> Result<Invariance, DescentError> {
    let conj = conjugate_ideal(sigma, ideal)?;
    // Equal ideals have equal reduced bases.
    let invariant = reduced_groebner_basis(&conj, order)?.elements() == basis.elements();
    let witness = if invariant {
        None
    } else {
        let mut found = None;
        for (g, image) in ideal.generators().iter().zip(conj.generators()) {
            if !basis.contains(image)? {
                found = Some(Witness {
                    generator: g.clone(),
                    image: image.clone(),
                });
                break;
            }
        }
        // σ has finite order, so σI ⊆ I forces σI = I.
        Some(found.expect("a non-invariant ideal has a generator leaving it"))
    };
    Ok(Invariance {
        automorphism: sigma.clone(),
        invariant,
        witness,
    })
}

/// Per-generator invariance of `ideal` under the group. Checking generators
/// suffices since conjugation is a group action.
pub fn is_invariant(
    ideal: &Ideal,
    group: &AutomorphismGroup,
    order: &TermOrder,
) -> Result<(bool, Vec<Invariance>), DescentError> {
    let basis = reduced_groebner_basis(ideal, order)?;
    let results = group
        .generators()
        .iter()
        .map(|s| invariance_under(s, ideal, &basis, order))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((results.iter().all(|r| r.invariant), results))
}

/// Decides whether `ideal` is invariant under `group`, and if so exhibits its
/// reduced Groebner basis with every coefficient checked against the fixed
/// field.
pub fn descent_check(
    ideal: &Ideal,
    group: &AutomorphismGroup,
    order: &TermOrder,
    projective: bool,
) -> Result<DescentReport, DescentError> {
    if projective {
        if let Some((index, g)) = ideal
            .generators()
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_homogeneous())
        {
            return Err(DescentError::NonHomogeneous {
                index,
                polynomial: g.to_string(),
            });
        }
    }
    if group.field() != ideal.ring().field() {
        return Err(ArithError::FieldMismatch(
            group.field().to_string(),
            ideal.ring().field().to_string(),
        )
        .into());
    }

    let basis = reduced_groebner_basis(ideal, order)?;
    let invariance = group
        .generators()
        .iter()
        .map(|s| invariance_under(s, ideal, &basis, order))
        .collect::<Result<Vec<_>, _>>()?;
    let invariant = invariance.iter().all(|r| r.invariant);

    if invariant {
        // σG = G elementwise; the basis is sorted by leading monomial and σ
        // preserves leading monomials, so position-wise comparison is exact.
        for sigma in group.generators() {
            for g in basis.elements() {
                if &conjugate_poly(sigma, g)? != g {
                    return Err(DescentError::BasisNotFixed {
                        automorphism: sigma.name().to_string(),
                    });
                }
            }
        }
    }

    let coefficients = basis
        .elements()
        .iter()
        .enumerate()
        .flat_map(|(element, g)| {
            g.terms().iter().map(move |t| CoefficientCheck {
                element,
                monomial: t.monomial.clone(),
                coeff: t.coeff.clone(),
                fixed: group.fixes(&t.coeff),
            })
        })
        .collect();

    let report = DescentReport {
        order: order.clone(),
        projective,
        invariance,
        basis,
        coefficients,
        verdict: if invariant {
            Verdict::DefinedOverFixedField
        } else {
            Verdict::NotInvariant
        },
    };
    assert!(
        report.is_consistent(),
        "fixed basis with a non-fixed coefficient"
    );
    Ok(report)
}

/// Compares the reduced basis of `σI` with `σ` applied to the reduced basis
/// of `I`.
pub fn lemma_check(
    ideal: &Ideal,
    sigma: &Automorphism,
    order: &TermOrder,
) -> Result<bool, DescentError> {
    let direct = reduced_groebner_basis(&conjugate_ideal(sigma, ideal)?, order)?;
    let conjugated = reduced_groebner_basis(ideal, order)?
        .elements()
        .iter()
        .map(|g| conjugate_poly(sigma, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(direct.elements() == conjugated.as_slice())
}
