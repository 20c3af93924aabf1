use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::field::{Coeff, FieldDescriptor, FieldElement, FieldKind};
use super::ArithError;

/// Upper bound on the size of a generated automorphism group.
pub const MAX_GROUP_ORDER: usize = 64;

/// A field automorphism fixing the prime field, determined by where it sends
/// the extension generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    field: Arc<FieldDescriptor>,
    /// `None` for fields without a generator, where only the identity exists.
    image: Option<Coeff>,
    name: String,
}

impl Automorphism {
    pub fn identity(field: &Arc<FieldDescriptor>) -> Self {
        Automorphism {
            field: field.clone(),
            image: field.generator(),
            name: "id".into(),
        }
    }

    /// Builds the automorphism sending the generator to `image`, which must be
    /// a root of the generator's minimal polynomial.
    pub fn validate(
        field: &Arc<FieldDescriptor>,
        image: &FieldElement,
        name: impl Into<String>,
    ) -> Result<Self, ArithError> {
        if image.field() != field {
            return Err(ArithError::FieldMismatch(
                field.to_string(),
                image.field().to_string(),
            ));
        }
        let v = image.value();
        let is_root = match field.kind() {
            FieldKind::Rationals | FieldKind::FiniteField { symbol: None, .. } => {
                return Err(ArithError::NotAnAutomorphism(format!(
                    "{field} has no generator to move"
                )))
            }
            FieldKind::QuadraticExt { radicand, .. } => {
                field.mul(v, v) == field.from_int(&BigInt::from(*radicand))
            }
            FieldKind::FiniteField { modulus, .. } => field.is_zero(&field.eval_finite(modulus, v)),
        };
        if !is_root {
            return Err(ArithError::NotAnAutomorphism(format!(
                "{} is not a root of the minimal polynomial of {}",
                image,
                field.symbol().unwrap_or("?"),
            )));
        }
        Ok(Automorphism {
            field: field.clone(),
            image: Some(v.clone()),
            name: name.into(),
        })
    }

    /// Frobenius `x ↦ x^p` on a finite field.
    pub fn frobenius(field: &Arc<FieldDescriptor>) -> Result<Self, ArithError> {
        let p = field.characteristic();
        let g = FieldElement::generator(field)
            .filter(|_| p != 0)
            .ok_or_else(|| {
                ArithError::NotAnAutomorphism(format!("{field} has no Frobenius generator"))
            })?;
        Self::validate(field, &g.pow(p), "frob")
    }

    /// Complex (or Galois) conjugation `√d ↦ −√d` on a quadratic extension.
    pub fn conjugation(field: &Arc<FieldDescriptor>) -> Result<Self, ArithError> {
        let g = FieldElement::generator(field)
            .filter(|_| matches!(field.kind(), FieldKind::QuadraticExt { .. }))
            .ok_or_else(|| {
                ArithError::NotAnAutomorphism(format!("{field} is not a quadratic extension"))
            })?;
        Self::validate(field, &g.neg(), "conj")
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn image(&self) -> Option<FieldElement> {
        self.image
            .as_ref()
            .map(|v| FieldElement::from_parts(self.field.clone(), v.clone()))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.field.generator()
    }

    /// Apply to a raw value of this automorphism's field.
    pub fn apply(&self, c: &Coeff) -> Coeff {
        let f = &self.field;
        match (&self.image, c) {
            (None, _) => c.clone(),
            (Some(img), Coeff::Quadratic(a, b)) => {
                let a = f.from_rational(a).expect("rational embeds in Q(√d)");
                let b = f.from_rational(b).expect("rational embeds in Q(√d)");
                f.add(&a, &f.mul(&b, img))
            }
            (Some(img), Coeff::Finite(v)) => f.eval_finite(v, img),
            (Some(_), Coeff::Rational(_)) => c.clone(),
        }
    }

    pub fn apply_element(&self, a: &FieldElement) -> Result<FieldElement, ArithError> {
        if a.field() != &self.field {
            return Err(ArithError::FieldMismatch(
                self.field.to_string(),
                a.field().to_string(),
            ));
        }
        Ok(FieldElement::from_parts(
            self.field.clone(),
            self.apply(a.value()),
        ))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let name = match (self.is_identity(), other.is_identity()) {
            (true, _) => other.name.clone(),
            (_, true) => self.name.clone(),
            _ => format!("{}*{}", self.name, other.name),
        };
        Automorphism {
            field: self.field.clone(),
            image: other.image.as_ref().map(|g| self.apply(g)),
            name,
        }
    }

    /// Same underlying map, ignoring the name.
    pub fn same_map(&self, other: &Automorphism) -> bool {
        self.field == other.field && self.image == other.image
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.image, self.field.symbol()) {
            (Some(img), Some(sym)) => {
                write!(f, "{}: {} -> {}", self.name, sym, self.field.format(img))
            }
            _ => write!(f, "{}: identity", self.name),
        }
    }
}

/// A finite group of automorphisms given by generators; the full closure is
/// computed eagerly and always contains the identity.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    field: Arc<FieldDescriptor>,
    generators: Vec<Automorphism>,
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    pub fn new(
        field: &Arc<FieldDescriptor>,
        generators: Vec<Automorphism>,
    ) -> Result<Self, ArithError> {
        if let Some(bad) = generators.iter().find(|g| g.field() != field) {
            return Err(ArithError::FieldMismatch(
                field.to_string(),
                bad.field().to_string(),
            ));
        }
        let mut elements = vec![Automorphism::identity(field)];
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(idx) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[idx]);
                if elements.iter().any(|e| e.same_map(&next)) {
                    continue;
                }
                if elements.len() == MAX_GROUP_ORDER {
                    return Err(ArithError::GroupTooLarge(MAX_GROUP_ORDER));
                }
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
        Ok(AutomorphismGroup {
            field: field.clone(),
            generators,
            elements,
        })
    }

    pub fn trivial(field: &Arc<FieldDescriptor>) -> Self {
        Self::new(field, Vec::new()).expect("trivial group is finite")
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    /// Every group element, identity first.
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, sigma: &Automorphism) -> Automorphism {
        self.elements
            .iter()
            .find(|tau| sigma.compose(tau).is_identity())
            .cloned()
            .expect("finite group contains every inverse")
    }

    /// Whether a raw value is fixed by every element of the group.
    pub fn fixes(&self, c: &Coeff) -> bool {
        self.elements.iter().all(|s| &s.apply(c) == c)
    }

    /// Membership of `a` in the fixed field of the group.
    pub fn is_fixed(&self, a: &FieldElement) -> Result<bool, ArithError> {
        if a.field() != &self.field {
            return Err(ArithError::FieldMismatch(
                self.field.to_string(),
                a.field().to_string(),
            ));
        }
        Ok(self.fixes(a.value()))
    }
}
