use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::{Coeff, FieldDescriptor, FieldElement};

use super::monomial::Monomial;
use super::order::TermOrder;
use super::PolyError;

/// Coefficient field plus named variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Arc<FieldDescriptor>,
    vars: Vec<String>,
}

impl Ring {
    pub fn new(field: Arc<FieldDescriptor>, vars: Vec<String>) -> Result<Arc<Self>, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
            if field.symbol() == Some(v.as_str()) {
                return Err(PolyError::VariableShadowsGenerator(v.clone()));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    /// Convenience constructor from string slices.
    pub fn with_vars(field: Arc<FieldDescriptor>, vars: &[&str]) -> Result<Arc<Self>, PolyError> {
        Self::new(field, vars.iter().map(|v| v.to_string()).collect())
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

/// A polynomial whose terms are kept strictly decreasing under `order`, with
/// no zero coefficients. The empty term list is zero.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    order: TermOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>, order: &TermOrder) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, order: &TermOrder, c: Coeff) -> Self {
        let monomial = Monomial::one(ring.nvars());
        Self::from_sorted_unchecked(ring, order, vec![Term { coeff: c, monomial }])
    }

    pub fn one(ring: &Arc<Ring>, order: &TermOrder) -> Self {
        Self::constant(ring, order, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring>, order: &TermOrder, index: usize) -> Self {
        let monomial = Monomial::var(ring.nvars(), index);
        Polynomial {
            ring: ring.clone(),
            order: order.clone(),
            terms: vec![Term {
                coeff: ring.field().one(),
                monomial,
            }],
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs,
    /// combining like terms and dropping zeros.
    pub fn from_terms(
        ring: &Arc<Ring>,
        order: &TermOrder,
        terms: impl IntoIterator<Item = (Coeff, Monomial)>,
    ) -> Result<Self, PolyError> {
        if order.nvars() != ring.nvars() {
            return Err(PolyError::LengthMismatch(ring.nvars(), order.nvars()));
        }
        let field = ring.field();
        let mut raw = Vec::new();
        for (coeff, monomial) in terms {
            if monomial.nvars() != ring.nvars() {
                return Err(PolyError::LengthMismatch(ring.nvars(), monomial.nvars()));
            }
            if !field.contains(&coeff) {
                return Err(PolyError::CoefficientOutsideField);
            }
            raw.push(Term { coeff, monomial });
        }
        Ok(Self::normalize(ring, order, raw))
    }

    fn normalize(ring: &Arc<Ring>, order: &TermOrder, mut raw: Vec<Term>) -> Self {
        let field = ring.field();
        raw.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !field.is_zero(&t.coeff));
        Polynomial {
            ring: ring.clone(),
            order: order.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_unchecked(
        ring: &Arc<Ring>,
        order: &TermOrder,
        mut terms: Vec<Term>,
    ) -> Self {
        let field = ring.field();
        terms.retain(|t| !field.is_zero(&t.coeff));
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            order: order.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        self.ring.field()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Terms in strictly decreasing order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|t| &t.monomial == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    /// The same polynomial sorted under another order.
    pub fn with_order(&self, order: &TermOrder) -> Polynomial {
        if &self.order == order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial {
            ring: self.ring.clone(),
            order: order.clone(),
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let other = other.with_order(&self.order);
        let one = self.field().one();
        Ok(self.with_terms(merge_sub(
            self.field(),
            &self.order,
            &self.terms,
            &self.field().neg(&one),
            None,
            &other.terms,
        )?))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let other = other.with_order(&self.order);
        let one = self.field().one();
        Ok(self.with_terms(merge_sub(
            self.field(),
            &self.order,
            &self.terms,
            &one,
            None,
            &other.terms,
        )?))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        self.with_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let other = other.with_order(&self.order);
        let field = self.field();
        let mut acc = Polynomial::zero(&self.ring, &self.order);
        // Accumulating row by row keeps every partial result sorted.
        for t in &self.terms {
            let neg = field.neg(&t.coeff);
            acc.terms = merge_sub(
                field,
                &self.order,
                &acc.terms,
                &neg,
                Some(&t.monomial),
                &other.terms,
            )?;
        }
        Ok(acc)
    }

    /// `c·self`; zero when `c` is zero.
    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring, &self.order);
        }
        self.with_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(c, &t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        )
    }

    pub fn scale_element(&self, c: &FieldElement) -> Result<Polynomial, PolyError> {
        if c.field() != self.field() {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.scale(c.value()))
    }

    /// `c·m·self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Result<Polynomial, PolyError> {
        let field = self.field();
        if field.is_zero(c) {
            return Ok(Polynomial::zero(&self.ring, &self.order));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: field.mul(c, &t.coeff),
                    monomial: t.monomial.checked_mul(m)?,
                })
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(self.with_terms(terms))
    }

    /// `self − c·m·other`, with `other` already sorted under `self`'s order.
    pub(crate) fn sub_scaled(
        &self,
        c: &Coeff,
        m: &Monomial,
        other: &Polynomial,
    ) -> Result<Polynomial, PolyError> {
        debug_assert_eq!(self.order, other.order);
        Ok(self.with_terms(merge_sub(
            self.field(),
            &self.order,
            &self.terms,
            c,
            Some(m),
            &other.terms,
        )?))
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Result<Polynomial, PolyError> {
        let lc = self.leading_coeff().ok_or(PolyError::ZeroPolynomial)?;
        let inv = self
            .field()
            .inv(lc)
            .expect("leading coefficient is nonzero");
        Ok(self.scale(&inv))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.field().is_one(c))
    }

    /// Applies `f` to every coefficient; monomials are untouched.
    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: f(&t.coeff),
                monomial: t.monomial.clone(),
            })
            .filter(|t| !field.is_zero(&t.coeff))
            .collect();
        self.with_terms(terms)
    }

    pub fn pow(&self, exp: u32) -> Result<Polynomial, PolyError> {
        let mut acc = Polynomial::one(&self.ring, &self.order);
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn with_terms(&self, terms: Vec<Term>) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            order: self.order.clone(),
            terms,
        }
    }
}

/// `a − c·m·b` for sorted term lists (`m = None` means 1).
pub(crate) fn merge_sub(
    field: &FieldDescriptor,
    order: &TermOrder,
    a: &[Term],
    c: &Coeff,
    m: Option<&Monomial>,
    b: &[Term],
) -> Result<Vec<Term>, PolyError> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.iter().peekable();
    let neg_c = field.neg(c);
    let mut shifted = b.iter().map(|t| -> Result<Term, PolyError> {
        Ok(Term {
            coeff: field.mul(&neg_c, &t.coeff),
            monomial: match m {
                Some(m) => t.monomial.checked_mul(m)?,
                None => t.monomial.clone(),
            },
        })
    });
    let mut next_b = shifted.next().transpose()?;
    loop {
        match (ai.peek(), next_b.take()) {
            (None, None) => break,
            (Some(_), None) => {
                out.extend(ai.by_ref().cloned());
                break;
            }
            (None, Some(tb)) => {
                out.push(tb);
                next_b = shifted.next().transpose()?;
            }
            (Some(ta), Some(tb)) => match order.compare(&ta.monomial, &tb.monomial) {
                Ordering::Greater => {
                    out.push((*ta).clone());
                    ai.next();
                    next_b = Some(tb);
                }
                Ordering::Less => {
                    out.push(tb);
                    next_b = shifted.next().transpose()?;
                }
                Ordering::Equal => {
                    let sum = field.add(&ta.coeff, &tb.coeff);
                    if !field.is_zero(&sum) {
                        out.push(Term {
                            coeff: sum,
                            monomial: tb.monomial,
                        });
                    }
                    ai.next();
                    next_b = shifted.next().transpose()?;
                }
            },
        }
    }
    Ok(out)
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(&self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    /// Canonical text: `y^2 - 1/2*x`, `(1 + i)*x + 3`, `-i*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (i, t) in self.terms.iter().enumerate() {
            let parts = field.parts(&t.coeff);
            let mono = (!t.monomial.is_one()).then(|| t.monomial.format(self.ring.vars()));
            let (negative, body) = if parts.len() == 1 {
                (parts[0].negative, parts[0].body())
            } else {
                (false, format!("({})", field.format(&t.coeff)))
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match mono {
                None => f.write_str(&body)?,
                Some(m) if body == "1" => f.write_str(&m)?,
                Some(m) => write!(f, "{body}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring_q() -> Arc<Ring> {
        Ring::with_vars(FieldDescriptor::rationals(), &["x", "y"]).unwrap()
    }

    #[test]
    fn sum_difference_product() {
        let r = ring_q();
        let o = TermOrder::lex(2);
        let p = |s: &str| parse_polynomial(&r, &o, s).unwrap();
        assert_eq!(p("x + y").add(&p("x - y")).unwrap(), p("2*x"));
        assert_eq!(p("x + y").mul(&p("x - y")).unwrap(), p("x^2 - y^2"));
        assert!(p("x + y").sub(&p("x + y")).unwrap().is_zero());
        assert!(p("x^3 + 1").scale(&r.field().zero()).is_zero());
    }

    #[test]
    fn leading_terms_depend_on_order() {
        let r = ring_q();
        let x_first = TermOrder::with_precedence(crate::poly::OrderKind::Lex, vec![0, 1]).unwrap();
        let f = parse_polynomial(&r, &x_first, "x + y^2").unwrap();
        assert_eq!(f.leading_monomial(), Some(&Monomial::new(vec![1, 0])));
        let g = f.with_order(&TermOrder::deglex(2));
        assert_eq!(g.leading_monomial(), Some(&Monomial::new(vec![0, 2])));
        assert_eq!(f, g);
    }

    #[test]
    fn monic_scaling() {
        let r = ring_q();
        let o = TermOrder::with_precedence(crate::poly::OrderKind::Lex, vec![0, 1]).unwrap();
        let f = parse_polynomial(&r, &o, "2*x + 4*y").unwrap();
        assert_eq!(f.make_monic().unwrap().to_string(), "x + 2*y");
        let g = f.make_monic().unwrap();
        assert_eq!(g.make_monic().unwrap(), g);
        assert_eq!(
            Polynomial::zero(&r, &o).make_monic(),
            Err(PolyError::ZeroPolynomial)
        );
        let ri = Ring::with_vars(FieldDescriptor::gaussian(), &["x"]).unwrap();
        let oi = TermOrder::lex(1);
        let h = parse_polynomial(&ri, &oi, "i*x + 1").unwrap();
        assert_eq!(h.make_monic().unwrap().to_string(), "x - i");
    }

    #[test]
    fn homogeneity() {
        let r = ring_q();
        let o = TermOrder::lex(2);
        let p = |s: &str| parse_polynomial(&r, &o, s).unwrap();
        assert!(p("x^2 + x*y").is_homogeneous());
        assert!(!p("x^2 + x").is_homogeneous());
        assert!(Polynomial::zero(&r, &o).is_homogeneous());
    }

    #[test]
    fn display_forms() {
        let r = Ring::with_vars(FieldDescriptor::gaussian(), &["x", "y"]).unwrap();
        let o = TermOrder::deglex(2);
        let p = |s: &str| parse_polynomial(&r, &o, s).unwrap();
        assert_eq!(p("y^2 - (1/2)*x").to_string(), "y^2 - 1/2*x");
        assert_eq!(p("x + i*y").to_string(), "i*y + x");
        assert_eq!(p("(1 + i)*x - 3").to_string(), "(1 + i)*x - 3");
        assert_eq!(p("-i*y - 1").to_string(), "-i*y - 1");
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn ring_mismatch() {
        let a = Polynomial::one(&ring_q(), &TermOrder::lex(2));
        let other = Ring::with_vars(FieldDescriptor::rationals(), &["u", "v"]).unwrap();
        let b = Polynomial::one(&other, &TermOrder::lex(2));
        assert_eq!(a.add(&b), Err(PolyError::RingMismatch));
        assert_eq!(a.mul(&b), Err(PolyError::RingMismatch));
    }
}
