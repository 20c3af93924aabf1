use std::borrow::Borrow;
use std::sync::Arc;

use crate::poly::{merge_sub, Polynomial, Term, TermOrder};

use super::GroebnerError;

/// Result of multivariate division: `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

fn prepare(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &TermOrder,
) -> Result<(Polynomial, Vec<Polynomial>), GroebnerError> {
    let ring = f.ring();
    let mut out = Vec::with_capacity(divisors.len());
    for g in divisors {
        if !Arc::ptr_eq(g.ring(), ring) && g.ring() != ring {
            return Err(GroebnerError::RingMismatch);
        }
        if g.is_zero() {
            return Err(GroebnerError::ZeroDivisor);
        }
        out.push(g.with_order(order));
    }
    if order.nvars() != ring.nvars() {
        return Err(GroebnerError::RingMismatch);
    }
    Ok((f.with_order(order), out))
}

/// Division core. Divisors must be sorted under `order`. Quotient terms are
/// collected when `quotients` is given.
pub(crate) fn divide_prepared<P: Borrow<Polynomial>>(
    f: &Polynomial,
    divisors: &[P],
    mut quotients: Option<&mut Vec<Vec<Term>>>,
) -> Result<Polynomial, GroebnerError> {
    let field = f.field().clone();
    let order = f.order().clone();
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut head = 0;
    let mut remainder: Vec<Term> = Vec::new();
    while head < rest.len() {
        let lead = &rest[head];
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let lt = g.borrow().leading_term().expect("divisors are nonzero");
            lt.monomial.quotient_of(&lead.monomial).map(|m| (i, m, lt))
        });
        match hit {
            Some((i, shift, lt)) => {
                let c = field
                    .div(&lead.coeff, &lt.coeff)
                    .expect("leading coefficient is nonzero");
                rest = merge_sub(
                    &field,
                    &order,
                    &rest[head..],
                    &c,
                    Some(&shift),
                    divisors[i].borrow().terms(),
                )?;
                head = 0;
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push(Term {
                        coeff: c,
                        monomial: shift,
                    });
                }
            }
            None => {
                remainder.push(lead.clone());
                head += 1;
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(
        f.ring(),
        &order,
        remainder,
    ))
}

/// Full multivariate division of `f` by `divisors` under `order`.
///
/// Divisors are tried in list order and the first whose leading monomial
/// divides the current leading term wins. No monomial of the remainder is
/// divisible by any divisor's leading monomial.
pub fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &TermOrder,
) -> Result<Division, GroebnerError> {
    let (f, divisors) = prepare(f, divisors, order)?;
    let mut q: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let remainder = divide_prepared(&f, &divisors, Some(&mut q))?;
    let quotients = q
        .into_iter()
        .map(|terms| Polynomial::from_sorted_unchecked(f.ring(), order, terms))
        .collect();
    Ok(Division {
        remainder,
        quotients,
    })
}

/// Remainder only.
pub fn remainder(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &TermOrder,
) -> Result<Polynomial, GroebnerError> {
    let (f, divisors) = prepare(f, divisors, order)?;
    divide_prepared(&f, &divisors, None)
}

/// `(lcm/lt(f))·f − (lcm/lt(g))·g` with `lcm` the lcm of the leading monomials.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: &TermOrder,
) -> Result<Polynomial, GroebnerError> {
    let (f, gs) = prepare(f, std::slice::from_ref(g), order)?;
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    s_polynomial_prepared(&f, &gs[0])
}

pub(crate) fn s_polynomial_prepared(
    f: &Polynomial,
    g: &Polynomial,
) -> Result<Polynomial, GroebnerError> {
    let field = f.field();
    let (ltf, ltg) = (
        f.leading_term().expect("nonzero"),
        g.leading_term().expect("nonzero"),
    );
    let lcm = ltf.monomial.lcm(&ltg.monomial);
    let uf = ltf.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let ug = ltg.monomial.quotient_of(&lcm).expect("lcm is a multiple");
    let cf = field.inv(&ltf.coeff).expect("nonzero");
    let cg = field.inv(&ltg.coeff).expect("nonzero");
    let left = f.mul_term(&cf, &uf)?;
    Ok(left.sub_scaled(&cg, &ug, g)?)
}
