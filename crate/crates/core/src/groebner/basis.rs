use crate::poly::{Monomial, Polynomial, TermOrder};

use super::buchberger;
use super::division::{divide_prepared, remainder, s_polynomial_prepared};
use super::{GroebnerError, Ideal};

/// A Groebner basis of an ideal under a fixed term order.
///
/// Elements are monic and sorted by increasing leading monomial. When
/// `reduced` is set they also form the unique reduced basis: leading
/// monomials are pairwise non-divisible and no trailing term is divisible by
/// any leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: TermOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
    certificate: Option<Vec<Vec<Polynomial>>>,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(
        ideal: Ideal,
        order: TermOrder,
        elements: Vec<Polynomial>,
        reduced: bool,
        certificate: Option<Vec<Vec<Polynomial>>>,
    ) -> Self {
        GroebnerBasis {
            ideal,
            order,
            elements,
            reduced,
            certificate,
        }
    }

    /// Wraps an arbitrary generating set after checking the S-pair criterion.
    /// Elements are made monic and sorted; the `reduced` flag is computed.
    pub fn from_polynomials(
        polys: Vec<Polynomial>,
        order: &TermOrder,
    ) -> Result<Self, GroebnerError> {
        let ideal = Ideal::new(polys)?;
        if !is_groebner(ideal.generators(), order)? {
            return Err(GroebnerError::NotGroebner);
        }
        let mut elements = ideal
            .generators()
            .iter()
            .map(|g| g.with_order(order).make_monic())
            .collect::<Result<Vec<_>, _>>()?;
        elements.sort_by(|a, b| order.compare(lm(a), lm(b)));
        let reduced = is_reduced(ideal.generators(), order)?;
        Ok(GroebnerBasis::from_parts(
            ideal,
            order.clone(),
            elements,
            reduced,
            None,
        ))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Cofactors `c[k][j]` with `elements[k] = Σ_j c[k][j]·generators[j]`,
    /// when tracked.
    pub fn certificate(&self) -> Option<&[Vec<Polynomial>]> {
        self.certificate.as_deref()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().map(lm).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_constant)
    }

    /// Normal form of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        remainder(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        if f.ring() != self.ideal.ring() {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether `m` lies in the initial ideal, i.e. some leading monomial of
    /// the basis divides it.
    pub fn initial_ideal_contains(&self, m: &Monomial) -> bool {
        self.elements.iter().any(|g| lm(g).divides(m))
    }
}

fn lm(p: &Polynomial) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

/// Minimalizes, normalizes and inter-reduces a Groebner basis into the
/// reduced Groebner basis. Certificates are not carried over.
pub fn reduce_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis, GroebnerError> {
    let order = basis.order();
    let mut sorted: Vec<Polynomial> = basis
        .elements()
        .iter()
        .map(|g| g.with_order(order).make_monic())
        .collect::<Result<_, _>>()?;
    sorted.sort_by(|a, b| order.compare(lm(a), lm(b)));

    // A divisor of a monomial never exceeds it, so scanning upward and keeping
    // only elements not divisible by a kept one yields a minimal basis.
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|k| lm(k).divides(lm(&g))) {
            kept.push(g);
        }
    }

    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<&Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p)
                .collect();
            let r = divide_prepared(&kept[i], &others, None)?;
            debug_assert_eq!(r.leading_monomial(), kept[i].leading_monomial());
            if r != kept[i] {
                kept[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    assert!(
        kept.windows(2).all(|w| lm(&w[0]) != lm(&w[1])),
        "reduced Groebner basis elements share a leading monomial"
    );
    Ok(GroebnerBasis::from_parts(
        basis.ideal().clone(),
        order.clone(),
        kept,
        true,
        None,
    ))
}

/// The unique reduced Groebner basis of `ideal` under `order`.
pub fn reduced_groebner_basis(
    ideal: &Ideal,
    order: &TermOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    reduce_basis(&buchberger::run(ideal, order, false)?)
}

fn prepared(polys: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>, GroebnerError> {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    if order.nvars() != ring.nvars() {
        return Err(GroebnerError::RingMismatch);
    }
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            if p.ring() != ring {
                Err(GroebnerError::RingMismatch)
            } else {
                Ok(p.with_order(order))
            }
        })
        .collect()
}

/// Buchberger's criterion: every S-pair reduces to zero. Zero elements are
/// ignored.
pub fn is_groebner(polys: &[Polynomial], order: &TermOrder) -> Result<bool, GroebnerError> {
    let g = prepared(polys, order)?;
    for j in 0..g.len() {
        for i in 0..j {
            let s = s_polynomial_prepared(&g[i], &g[j])?;
            if !divide_prepared(&s, &g, None)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Groebner, monic, minimal, and with no trailing term in the initial ideal.
pub fn is_reduced(polys: &[Polynomial], order: &TermOrder) -> Result<bool, GroebnerError> {
    let g = prepared(polys, order)?;
    if g.is_empty() || !g.iter().all(Polynomial::is_monic) {
        return Ok(false);
    }
    let lms: Vec<&Monomial> = g.iter().map(lm).collect();
    for (i, a) in lms.iter().enumerate() {
        for (j, b) in lms.iter().enumerate() {
            if i != j && a.divides(b) {
                return Ok(false);
            }
        }
    }
    let trailing_clean = g.iter().all(|p| {
        p.terms()[1..]
            .iter()
            .all(|t| !lms.iter().any(|m| m.divides(&t.monomial)))
    });
    if !trailing_clean {
        return Ok(false);
    }
    is_groebner(&g, order)
}

/// `f ∈ ideal`, decided by reduction modulo the reduced Groebner basis.
pub fn ideal_membership(
    f: &Polynomial,
    ideal: &Ideal,
    order: &TermOrder,
) -> Result<bool, GroebnerError> {
    if f.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    reduced_groebner_basis(ideal, order)?.contains(f)
}

/// Equality of ideals via equality of their reduced Groebner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: &TermOrder) -> Result<bool, GroebnerError> {
    if a.ring() != b.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let ga = reduced_groebner_basis(a, order)?;
    let gb = reduced_groebner_basis(b, order)?;
    Ok(ga.elements() == gb.elements())
}

/// Membership of `m` in the initial ideal of the ideal `basis` generates.
pub fn initial_ideal_member(m: &Monomial, basis: &GroebnerBasis) -> Result<bool, GroebnerError> {
    let n = basis.ideal().ring().nvars();
    if m.nvars() != n {
        return Err(crate::poly::PolyError::LengthMismatch(n, m.nvars()).into());
    }
    Ok(basis.initial_ideal_contains(m))
}
