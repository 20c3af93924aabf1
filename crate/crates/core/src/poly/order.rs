use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::monomial::Monomial;
use super::PolyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(PolyError::UnknownOrder(other.to_string())),
        }
    }
}

/// A term order together with a variable precedence.
///
/// `significance` lists variable indices from most to least significant. The
/// default makes the last declared variable most significant, so with
/// variables `x1, x2` deglex reads `1 < x1 < x2 < x1^2 < x1*x2 < x2^2`.
///
/// Degrevlex breaks degree ties at the least significant variable where the
/// exponents differ: the monomial with the smaller exponent there is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    significance: Arc<[usize]>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        TermOrder {
            kind,
            significance: (0..nvars).rev().collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn deglex(nvars: usize) -> Self {
        Self::new(OrderKind::DegLex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    /// Explicit precedence, most significant variable first.
    pub fn with_precedence(
        kind: OrderKind,
        most_significant_first: Vec<usize>,
    ) -> Result<Self, PolyError> {
        let n = most_significant_first.len();
        let mut seen = vec![false; n];
        for &i in &most_significant_first {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(PolyError::BadPrecedence);
            }
        }
        Ok(TermOrder {
            kind,
            significance: most_significant_first.into(),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.significance.len()
    }

    pub fn significance(&self) -> &[usize] {
        &self.significance
    }

    /// Same precedence, different kind.
    pub fn with_kind(&self, kind: OrderKind) -> Self {
        TermOrder {
            kind,
            significance: self.significance.clone(),
        }
    }

    /// Compares monomials of matching length; see [`TermOrder::try_compare`].
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let lex = || {
            self.significance
                .iter()
                .map(|&i| ea[i].cmp(&eb[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                self.significance
                    .iter()
                    .rev()
                    .map(|&i| eb[i].cmp(&ea[i]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        let n = self.nvars();
        for m in [a, b] {
            if m.nvars() != n {
                return Err(PolyError::LengthMismatch(n, m.nvars()));
            }
        }
        Ok(self.compare(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn deglex_chain_in_two_variables() {
        let order = TermOrder::deglex(2);
        let chain = [
            m(&[0, 0]),
            m(&[1, 0]),
            m(&[0, 1]),
            m(&[2, 0]),
            m(&[1, 1]),
            m(&[0, 2]),
        ];
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                assert_eq!(order.compare(&chain[i], &chain[j]), i.cmp(&j), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn degrevlex_tie_break() {
        // x1*x3 < x2^2 with x1 > x2 > x3 as well as with the default precedence.
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(TermOrder::degrevlex(3).compare(&a, &b), Ordering::Less);
        let std = TermOrder::with_precedence(OrderKind::DegRevLex, vec![0, 1, 2]).unwrap();
        assert_eq!(std.compare(&a, &b), Ordering::Less);
        // degrevlex and deglex differ on x1^2*x3 vs x1*x2^2 (x1 > x2 > x3)
        let c = m(&[2, 0, 1]);
        let d = m(&[1, 2, 0]);
        assert_eq!(std.compare(&c, &d), Ordering::Less);
        let dl = TermOrder::with_precedence(OrderKind::DegLex, vec![0, 1, 2]).unwrap();
        assert_eq!(dl.compare(&c, &d), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let x_first = TermOrder::with_precedence(OrderKind::Lex, vec![0, 1]).unwrap();
        assert_eq!(x_first.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(
            TermOrder::lex(2).compare(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Less
        );
    }

    #[test]
    fn reflexive_and_checked() {
        let o = TermOrder::degrevlex(2);
        assert_eq!(o.compare(&m(&[3, 1]), &m(&[3, 1])), Ordering::Equal);
        assert!(matches!(
            o.try_compare(&m(&[1]), &m(&[1, 0])),
            Err(PolyError::LengthMismatch(2, 1))
        ));
        assert!(TermOrder::with_precedence(OrderKind::Lex, vec![0, 0]).is_err());
        assert_eq!(
            "degrevlex".parse::<OrderKind>().unwrap(),
            OrderKind::DegRevLex
        );
        assert!("grevlex".parse::<OrderKind>().is_err());
    }
}
