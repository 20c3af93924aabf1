use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gfpoly;
use super::ArithError;

/// Largest radicand magnitude accepted for a quadratic extension.
pub const MAX_RADICAND: i64 = 1_000_000;

/// Characteristic bound for finite fields; residues multiply in `u128`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    /// `Q(√d)` with generator spelled `symbol`.
    QuadraticExt {
        radicand: i64,
        symbol: String,
    },
    /// `GF(p)[symbol]/(modulus)`; `modulus` is monic, lowest degree first.
    /// Prime fields carry modulus `t` and no symbol.
    FiniteField {
        characteristic: u64,
        degree: usize,
        modulus: Vec<u64>,
        symbol: Option<String>,
    },
}

/// A computable coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    kind: FieldKind,
}

/// Raw field value in canonical form. Its meaning depends on the owning
/// [`FieldDescriptor`]; polynomials store these directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    /// `a + b·√d`
    Quadratic(BigRational, BigRational),
    /// Coefficients of `1, t, …, t^(k-1)`, each in `0..p`.
    Finite(Vec<u64>),
}

/// One printable summand of a field value, e.g. `-3/2` times `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Part {
    pub negative: bool,
    pub magnitude: String,
    pub power: Option<String>,
}

impl Part {
    /// Text of the part without its sign; `1` times a power is just the power.
    pub fn body(&self) -> String {
        match &self.power {
            None => self.magnitude.clone(),
            Some(pw) if self.magnitude == "1" => pw.clone(),
            Some(pw) => format!("{}*{}", self.magnitude, pw),
        }
    }
}

impl FieldDescriptor {
    pub fn rationals() -> Arc<Self> {
        Arc::new(FieldDescriptor {
            kind: FieldKind::Rationals,
        })
    }

    /// `Q(√d)`. `d` must be squarefree, nonzero, not 1, and `|d| ≤ 10⁶`.
    pub fn quadratic(radicand: i64, symbol: impl Into<String>) -> Result<Arc<Self>, ArithError> {
        if radicand.unsigned_abs() > MAX_RADICAND as u64 {
            return Err(ArithError::RadicandTooLarge(radicand));
        }
        if radicand == 0 || radicand == 1 || !is_squarefree(radicand) {
            return Err(ArithError::BadRadicand(radicand));
        }
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::QuadraticExt {
                radicand,
                symbol: symbol.into(),
            },
        }))
    }

    /// `Q(i)` with generator `i`.
    pub fn gaussian() -> Arc<Self> {
        Self::quadratic(-1, "i").expect("-1 is squarefree")
    }

    pub fn prime_field(p: u64) -> Result<Arc<Self>, ArithError> {
        check_characteristic(p)?;
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::FiniteField {
                characteristic: p,
                degree: 1,
                modulus: vec![0, 1],
                symbol: None,
            },
        }))
    }

    /// `GF(p)[symbol]/(modulus)` for a monic irreducible modulus given lowest
    /// degree first. Coefficients are reduced mod `p` before validation.
    pub fn finite(
        p: u64,
        modulus: &[u64],
        symbol: impl Into<String>,
    ) -> Result<Arc<Self>, ArithError> {
        check_characteristic(p)?;
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        gfpoly::trim(&mut m);
        let degree = match gfpoly::degree(&m) {
            Some(d) if d >= 1 => d,
            _ => return Err(ArithError::BadModulus("degree must be at least 1".into())),
        };
        if m[degree] != 1 {
            return Err(ArithError::BadModulus("modulus must be monic".into()));
        }
        if !gfpoly::is_irreducible(&m, p) {
            return Err(ArithError::ReducibleModulus);
        }
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::FiniteField {
                characteristic: p,
                degree,
                modulus: m,
                symbol: Some(symbol.into()),
            },
        }))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// Name of the extension generator, if the field has one.
    pub fn symbol(&self) -> Option<&str> {
        match &self.kind {
            FieldKind::Rationals => None,
            FieldKind::QuadraticExt { symbol, .. } => Some(symbol),
            FieldKind::FiniteField { symbol, .. } => symbol.as_deref(),
        }
    }

    pub fn zero(&self) -> Coeff {
        match &self.kind {
            FieldKind::Rationals => Coeff::Rational(BigRational::zero()),
            FieldKind::QuadraticExt { .. } => {
                Coeff::Quadratic(BigRational::zero(), BigRational::zero())
            }
            FieldKind::FiniteField { degree, .. } => Coeff::Finite(vec![0; *degree]),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, n: &BigInt) -> Coeff {
        match &self.kind {
            FieldKind::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            FieldKind::QuadraticExt { .. } => {
                Coeff::Quadratic(BigRational::from_integer(n.clone()), BigRational::zero())
            }
            FieldKind::FiniteField {
                characteristic,
                degree,
                ..
            } => {
                let mut v = vec![0; *degree];
                v[0] = reduce_int(n, *characteristic);
                Coeff::Finite(v)
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_int(&BigInt::from(n))
    }

    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff, ArithError> {
        match &self.kind {
            FieldKind::Rationals => Ok(Coeff::Rational(q.clone())),
            FieldKind::QuadraticExt { .. } => Ok(Coeff::Quadratic(q.clone(), BigRational::zero())),
            FieldKind::FiniteField { characteristic, .. } => {
                let p = *characteristic;
                let den = reduce_int(q.denom(), p);
                if den == 0 {
                    return Err(ArithError::DivisionByZero);
                }
                let num = reduce_int(q.numer(), p);
                let r = gfpoly::mul_mod_p(num, gfpoly::inv_mod_p(den, p), p);
                let mut out = self.zero();
                if let Coeff::Finite(v) = &mut out {
                    v[0] = r;
                }
                Ok(out)
            }
        }
    }

    /// The extension generator (`√d` or `t`), if any.
    pub fn generator(&self) -> Option<Coeff> {
        match &self.kind {
            FieldKind::Rationals => None,
            FieldKind::QuadraticExt { .. } => {
                Some(Coeff::Quadratic(BigRational::zero(), BigRational::one()))
            }
            FieldKind::FiniteField { symbol: None, .. } => None,
            FieldKind::FiniteField {
                degree,
                modulus,
                characteristic,
                ..
            } => {
                let mut t = vec![0, 1];
                if *degree == 1 {
                    t = gfpoly::rem(&t, modulus, *characteristic);
                }
                Some(Coeff::Finite(self.pad(t)))
            }
        }
    }

    /// Whether `c` has the shape and canonical form of a value of this field.
    pub fn contains(&self, c: &Coeff) -> bool {
        match (&self.kind, c) {
            (FieldKind::Rationals, Coeff::Rational(_)) => true,
            (FieldKind::QuadraticExt { .. }, Coeff::Quadratic(..)) => true,
            (
                FieldKind::FiniteField {
                    characteristic,
                    degree,
                    ..
                },
                Coeff::Finite(v),
            ) => v.len() == *degree && v.iter().all(|x| x < characteristic),
            _ => false,
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Quadratic(a, b) => a.is_zero() && b.is_zero(),
            Coeff::Finite(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        *c == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Coeff::Quadratic(a1, b1), Coeff::Quadratic(a2, b2)) => {
                Coeff::Quadratic(a1 + a2, b1 + b2)
            }
            (Coeff::Finite(x), Coeff::Finite(y)) => {
                let p = self.characteristic();
                Coeff::Finite(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
            }
            _ => panic!("mixed coefficient representations"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rational(x) => Coeff::Rational(-x),
            Coeff::Quadratic(x, y) => Coeff::Quadratic(-x, -y),
            Coeff::Finite(v) => {
                let p = self.characteristic();
                Coeff::Finite(v.iter().map(|&u| (p - u) % p).collect())
            }
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x - y),
            (Coeff::Quadratic(a1, b1), Coeff::Quadratic(a2, b2)) => {
                Coeff::Quadratic(a1 - a2, b1 - b2)
            }
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Coeff::Quadratic(a1, b1), Coeff::Quadratic(a2, b2)) => {
                let d = BigRational::from_integer(BigInt::from(self.radicand()));
                Coeff::Quadratic(a1 * a2 + d * b1 * b2, a1 * b2 + a2 * b1)
            }
            (Coeff::Finite(x), Coeff::Finite(y)) => {
                let (p, m) = self.finite_parts();
                Coeff::Finite(self.pad(gfpoly::mul_mod(x, y, m, p)))
            }
            _ => panic!("mixed coefficient representations"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff, ArithError> {
        if self.is_zero(a) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match a {
            Coeff::Rational(x) => Coeff::Rational(x.recip()),
            Coeff::Quadratic(x, y) => {
                // (x + y√d)⁻¹ = (x − y√d) / (x² − d·y²); the norm is nonzero
                // because d is not a rational square.
                let d = BigRational::from_integer(BigInt::from(self.radicand()));
                let norm = x * x - d * y * y;
                Coeff::Quadratic(x / &norm, -(y / &norm))
            }
            Coeff::Finite(v) => {
                let (p, m) = self.finite_parts();
                let inv = gfpoly::inv_mod(v, m, p).expect("modulus is irreducible");
                Coeff::Finite(self.pad(inv))
            }
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, mut exp: u64) -> Coeff {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Whether `c` lies in the prime field (Q or GF(p)).
    pub fn is_prime_field_value(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Rational(_) => true,
            Coeff::Quadratic(_, b) => b.is_zero(),
            Coeff::Finite(v) => v.iter().skip(1).all(|&x| x == 0),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &self.kind {
            FieldKind::FiniteField { characteristic, .. } => *characteristic,
            _ => 0,
        }
    }

    fn radicand(&self) -> i64 {
        match &self.kind {
            FieldKind::QuadraticExt { radicand, .. } => *radicand,
            _ => panic!("not a quadratic extension"),
        }
    }

    fn finite_parts(&self) -> (u64, &[u64]) {
        match &self.kind {
            FieldKind::FiniteField {
                characteristic,
                modulus,
                ..
            } => (*characteristic, modulus),
            _ => panic!("not a finite field"),
        }
    }

    pub(crate) fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        if let FieldKind::FiniteField { degree, .. } = &self.kind {
            v.resize(*degree, 0);
        }
        v
    }

    /// Evaluate a GF(p)-coefficient polynomial (lowest degree first) at `x`.
    pub(crate) fn eval_finite(&self, coeffs: &[u64], x: &Coeff) -> Coeff {
        let p = self.characteristic();
        coeffs.iter().rev().fold(self.zero(), |acc, &c| {
            let c = self.from_int(&BigInt::from(c % p));
            self.add(&self.mul(&acc, x), &c)
        })
    }

    pub(crate) fn parts(&self, c: &Coeff) -> Vec<Part> {
        let rational_part = |q: &BigRational, power: Option<String>| Part {
            negative: q.is_negative(),
            magnitude: format_rational(&q.abs()),
            power,
        };
        match c {
            Coeff::Rational(q) if q.is_zero() => Vec::new(),
            Coeff::Rational(q) => vec![rational_part(q, None)],
            Coeff::Quadratic(a, b) => {
                let mut out = Vec::new();
                if !a.is_zero() {
                    out.push(rational_part(a, None));
                }
                if !b.is_zero() {
                    let sym = self.symbol().unwrap_or("?").to_string();
                    out.push(rational_part(b, Some(sym)));
                }
                out
            }
            Coeff::Finite(v) => {
                let sym = self.symbol().unwrap_or("t");
                v.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| Part {
                        negative: false,
                        magnitude: x.to_string(),
                        power: match j {
                            0 => None,
                            1 => Some(sym.to_string()),
                            _ => Some(format!("{sym}^{j}")),
                        },
                    })
                    .collect()
            }
        }
    }

    /// Canonical text of a field value: `a/b`, `a + b*s`, `1 + 2*t^2`.
    pub fn format(&self, c: &Coeff) -> String {
        let parts = self.parts(c);
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, part) in parts.iter().enumerate() {
            match (i, part.negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&part.body());
        }
        out
    }
}

impl fmt::Display for FieldDescriptor {
    /// The field spec string accepted by the problem-file parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::QuadraticExt {
                radicand: -1,
                symbol,
            } if symbol == "i" => write!(f, "Q(i)"),
            FieldKind::QuadraticExt { radicand, .. } => write!(f, "Q(sqrt {radicand})"),
            FieldKind::FiniteField {
                characteristic,
                symbol: None,
                ..
            } => write!(f, "GF({characteristic})"),
            FieldKind::FiniteField {
                characteristic,
                degree,
                modulus,
                symbol: Some(sym),
            } => {
                write!(f, "GF({characteristic}^{degree}; ")?;
                let mut first = true;
                for (j, &c) in modulus.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let coeff = if c == 1 && j > 0 {
                        String::new()
                    } else if j > 0 {
                        format!("{c}*")
                    } else {
                        c.to_string()
                    };
                    match j {
                        0 => write!(f, "{coeff}")?,
                        1 => write!(f, "{coeff}{sym}")?,
                        _ => write!(f, "{coeff}{sym}^{j}")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn reduce_int(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn check_characteristic(p: u64) -> Result<(), ArithError> {
    if p >= MAX_CHARACTERISTIC || !gfpoly::is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    Ok(())
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut q = 2u64;
    while q * q <= n {
        if n % (q * q) == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// A field value together with the field it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<FieldDescriptor>,
    value: Coeff,
}

impl FieldElement {
    pub fn new(field: Arc<FieldDescriptor>, value: Coeff) -> Result<Self, ArithError> {
        if !field.contains(&value) {
            return Err(ArithError::NotInField(field.to_string()));
        }
        Ok(FieldElement { field, value })
    }

    pub(crate) fn from_parts(field: Arc<FieldDescriptor>, value: Coeff) -> Self {
        debug_assert!(field.contains(&value));
        FieldElement { field, value }
    }

    pub fn zero(field: &Arc<FieldDescriptor>) -> Self {
        Self::from_parts(field.clone(), field.zero())
    }

    pub fn one(field: &Arc<FieldDescriptor>) -> Self {
        Self::from_parts(field.clone(), field.one())
    }

    pub fn from_i64(field: &Arc<FieldDescriptor>, n: i64) -> Self {
        Self::from_parts(field.clone(), field.from_i64(n))
    }

    pub fn from_rational(
        field: &Arc<FieldDescriptor>,
        q: &BigRational,
    ) -> Result<Self, ArithError> {
        Ok(Self::from_parts(field.clone(), field.from_rational(q)?))
    }

    /// `a + b·g` where `g` is the extension generator.
    pub fn linear(field: &Arc<FieldDescriptor>, a: i64, b: i64) -> Option<Self> {
        let g = field.generator()?;
        let v = field.add(&field.from_i64(a), &field.mul(&field.from_i64(b), &g));
        Some(Self::from_parts(field.clone(), v))
    }

    pub fn generator(field: &Arc<FieldDescriptor>) -> Option<Self> {
        field
            .generator()
            .map(|g| Self::from_parts(field.clone(), g))
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn value(&self) -> &Coeff {
        &self.value
    }

    pub fn into_value(self) -> Coeff {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    fn check_same(&self, other: &Self) -> Result<(), ArithError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_same(other)?;
        Ok(Self::from_parts(
            self.field.clone(),
            self.field.add(&self.value, &other.value),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_same(other)?;
        Ok(Self::from_parts(
            self.field.clone(),
            self.field.sub(&self.value, &other.value),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_same(other)?;
        Ok(Self::from_parts(
            self.field.clone(),
            self.field.mul(&self.value, &other.value),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(self.field.clone(), self.field.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Ok(Self::from_parts(
            self.field.clone(),
            self.field.inv(&self.value)?,
        ))
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::from_parts(self.field.clone(), self.field.pow(&self.value, exp))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn gf9() -> Arc<FieldDescriptor> {
        FieldDescriptor::finite(3, &[1, 0, 1], "t").unwrap()
    }

    #[test]
    fn rational_sum() {
        let f = FieldDescriptor::rationals();
        let a = FieldElement::from_rational(&f, &q(1, 2)).unwrap();
        let b = FieldElement::from_rational(&f, &q(1, 3)).unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "5/6");
        assert_eq!(a.add(&FieldElement::zero(&f)).unwrap(), a);
    }

    #[test]
    fn gf9_sum_and_product() {
        let f = gf9();
        let a = FieldElement::linear(&f, 1, 1).unwrap();
        let b = FieldElement::linear(&f, 2, 2).unwrap();
        assert!(a.add(&b).unwrap().is_zero());
        let t = FieldElement::generator(&f).unwrap();
        assert_eq!(t.mul(&t).unwrap(), FieldElement::from_i64(&f, 2));
        assert_eq!(t.inv().unwrap(), FieldElement::linear(&f, 0, 2).unwrap());
    }

    #[test]
    fn gaussian_product_and_inverse() {
        let f = FieldDescriptor::gaussian();
        let a = FieldElement::linear(&f, 1, 1).unwrap();
        let b = FieldElement::linear(&f, 1, -1).unwrap();
        assert_eq!(a.mul(&b).unwrap(), FieldElement::from_i64(&f, 2));
        assert_eq!(a.mul(&FieldElement::one(&f)).unwrap(), a);
        let s2 = FieldDescriptor::quadratic(2, "s").unwrap();
        let x = FieldElement::linear(&s2, 1, 1).unwrap();
        assert_eq!(x.inv().unwrap(), FieldElement::linear(&s2, -1, 1).unwrap());
    }

    #[test]
    fn rational_inverse_flips() {
        let f = FieldDescriptor::rationals();
        let a = FieldElement::from_rational(&f, &q(2, 3)).unwrap();
        assert_eq!(a.inv().unwrap().to_string(), "3/2");
        assert_eq!(
            FieldElement::zero(&f).inv(),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldElement::one(&FieldDescriptor::rationals());
        let b = FieldElement::one(&FieldDescriptor::gaussian());
        assert!(matches!(a.add(&b), Err(ArithError::FieldMismatch(..))));
        assert!(matches!(a.mul(&b), Err(ArithError::FieldMismatch(..))));
    }

    #[test]
    fn descriptor_validation() {
        assert_eq!(
            FieldDescriptor::quadratic(4, "s"),
            Err(ArithError::BadRadicand(4))
        );
        assert_eq!(
            FieldDescriptor::quadratic(1, "s"),
            Err(ArithError::BadRadicand(1))
        );
        assert_eq!(
            FieldDescriptor::quadratic(0, "s"),
            Err(ArithError::BadRadicand(0))
        );
        assert_eq!(
            FieldDescriptor::quadratic(-12, "s"),
            Err(ArithError::BadRadicand(-12))
        );
        assert_eq!(
            FieldDescriptor::quadratic(1_000_003, "s"),
            Err(ArithError::RadicandTooLarge(1_000_003))
        );
        assert_eq!(
            FieldDescriptor::prime_field(9),
            Err(ArithError::NotPrime(9))
        );
        assert_eq!(
            FieldDescriptor::finite(5, &[1, 0, 1], "t"),
            Err(ArithError::ReducibleModulus)
        );
        assert!(matches!(
            FieldDescriptor::finite(3, &[1, 0, 2], "t"),
            Err(ArithError::BadModulus(_))
        ));
    }

    #[test]
    fn canonical_text() {
        let f = FieldDescriptor::quadratic(2, "s").unwrap();
        let v = f.add(
            &f.from_rational(&q(1, 2)).unwrap(),
            &f.mul(
                &f.from_rational(&q(-3, 2)).unwrap(),
                &f.generator().unwrap(),
            ),
        );
        assert_eq!(f.format(&v), "1/2 - 3/2*s");
        assert_eq!(f.format(&f.neg(&f.generator().unwrap())), "-s");
        let g = gf9();
        assert_eq!(
            g.format(&FieldElement::linear(&g, 1, 2).unwrap().into_value()),
            "1 + 2*t"
        );
        assert_eq!(g.to_string(), "GF(3^2; t^2 + 1)");
        assert_eq!(FieldDescriptor::gaussian().to_string(), "Q(i)");
        assert_eq!(f.to_string(), "Q(sqrt 2)");
    }

    #[test]
    fn finite_from_rational() {
        let f = FieldDescriptor::prime_field(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.from_rational(&q(1, 2)).unwrap(), f.from_i64(4));
        assert_eq!(f.from_rational(&q(1, 7)), Err(ArithError::DivisionByZero));
    }
}
