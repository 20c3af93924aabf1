//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use groebner_descent::arith::{Automorphism, AutomorphismGroup, Coeff, FieldDescriptor, FieldKind};
use groebner_descent::groebner::Ideal;
use groebner_descent::poly::{Monomial, OrderKind, Polynomial, Ring, TermOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ORDERS: [OrderKind; 3] = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex];
pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf9() -> Arc<FieldDescriptor> {
    FieldDescriptor::finite(3, &[1, 0, 1], "t").unwrap()
}

pub fn sqrt2() -> Arc<FieldDescriptor> {
    FieldDescriptor::quadratic(2, "s").unwrap()
}

/// A field together with a generator of its automorphism group.
pub struct Setting {
    pub name: &'static str,
    pub field: Arc<FieldDescriptor>,
    pub sigma: Automorphism,
}

impl Setting {
    pub fn group(&self) -> AutomorphismGroup {
        AutomorphismGroup::new(&self.field, vec![self.sigma.clone()]).unwrap()
    }
}

pub fn settings() -> Vec<Setting> {
    let qi = FieldDescriptor::gaussian();
    let q2 = sqrt2();
    let f9 = gf9();
    vec![
        Setting {
            name: "Q(i) conj",
            sigma: Automorphism::conjugation(&qi).unwrap(),
            field: qi,
        },
        Setting {
            name: "Q(sqrt 2) conj",
            sigma: Automorphism::conjugation(&q2).unwrap(),
            field: q2,
        },
        Setting {
            name: "GF(9) Frobenius",
            sigma: Automorphism::frobenius(&f9).unwrap(),
            field: f9,
        },
    ]
}

pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A random element; `extension` allows a nonzero generator part.
pub fn coeff<R: Rng>(rng: &mut R, field: &FieldDescriptor, extension: bool) -> Coeff {
    match field.kind() {
        FieldKind::Rationals => Coeff::Rational(small_rational(rng, 10)),
        FieldKind::QuadraticExt { .. } => {
            let b = if extension {
                small_rational(rng, 10)
            } else {
                BigRational::from_integer(BigInt::from(0))
            };
            Coeff::Quadratic(small_rational(rng, 10), b)
        }
        FieldKind::FiniteField {
            characteristic,
            degree,
            ..
        } => {
            let mut v = vec![0u64; *degree];
            v[0] = rng.gen_range(0..*characteristic);
            if extension {
                for c in v.iter_mut().skip(1) {
                    *c = rng.gen_range(0..*characteristic);
                }
            }
            Coeff::Finite(v)
        }
    }
}

pub fn nonzero_coeff<R: Rng>(rng: &mut R, field: &FieldDescriptor, extension: bool) -> Coeff {
    loop {
        let c = coeff(rng, field, extension);
        if !field.is_zero(&c) {
            return c;
        }
    }
}

pub fn monomial<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Monomial {
    let d = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

pub fn homogeneous_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

pub fn ring(field: &Arc<FieldDescriptor>, n: usize) -> Arc<Ring> {
    Ring::with_vars(field.clone(), &VARS[..n]).unwrap()
}

/// A random polynomial with up to `terms` terms of degree at most `max_degree`.
pub fn poly<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    order: &TermOrder,
    terms: usize,
    max_degree: u32,
    extension: bool,
) -> Polynomial {
    let field = ring.field();
    let t = (0..terms).map(|_| {
        (
            coeff(rng, field, extension),
            monomial(rng, ring.nvars(), max_degree),
        )
    });
    Polynomial::from_terms(ring, order, t.collect::<Vec<_>>()).unwrap()
}

pub fn nonzero_poly<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    order: &TermOrder,
    terms: usize,
    max_degree: u32,
    extension: bool,
) -> Polynomial {
    loop {
        let p = poly(rng, ring, order, terms, max_degree, extension);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn homogeneous_poly<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    order: &TermOrder,
    terms: usize,
    degree: u32,
) -> Polynomial {
    let field = ring.field();
    let t: Vec<_> = (0..terms)
        .map(|_| {
            (
                coeff(rng, field, true),
                homogeneous_monomial(rng, ring.nvars(), degree),
            )
        })
        .collect();
    Polynomial::from_terms(ring, order, t).unwrap()
}

/// A random nonzero ideal: 1 to `max_gens` sparse generators.
pub fn ideal<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    order: &TermOrder,
    max_gens: usize,
    max_degree: u32,
    extension: bool,
) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            nonzero_poly(rng, ring, order, terms, max_degree, extension)
        })
        .collect();
    Ideal::new(gens).unwrap()
}

pub fn random_order<R: Rng>(rng: &mut R) -> OrderKind {
    *ORDERS.choose(rng).unwrap()
}

/// Exponent vectors of all monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Polynomials as plain maps from exponent vectors to coefficients.
pub type Dense = HashMap<Vec<u32>, Coeff>;

pub fn to_dense(p: &Polynomial) -> Dense {
    p.terms()
        .iter()
        .map(|t| (t.monomial.exponents().to_vec(), t.coeff.clone()))
        .collect()
}

fn dense_clean(field: &FieldDescriptor, mut d: Dense) -> Dense {
    d.retain(|_, c| !field.is_zero(c));
    d
}

pub fn dense_add(field: &FieldDescriptor, a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(m.clone()).or_insert_with(|| field.zero());
        *e = field.add(e, c);
    }
    dense_clean(field, out)
}

pub fn dense_sub(field: &FieldDescriptor, a: &Dense, b: &Dense) -> Dense {
    let neg: Dense = b.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
    dense_add(field, a, &neg)
}

pub fn dense_mul(field: &FieldDescriptor, a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(m).or_insert_with(|| field.zero());
            *e = field.add(e, &field.mul(ca, cb));
        }
    }
    dense_clean(field, out)
}

/// Row-echelon basis of a span, kept sparse by pivot column.
struct Echelon<'a> {
    field: &'a FieldDescriptor,
    rows: BTreeMap<usize, Vec<Coeff>>,
}

impl<'a> Echelon<'a> {
    fn new(field: &'a FieldDescriptor) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    /// Reduces `v` against the stored rows; returns it with all pivot
    /// columns cleared.
    fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        for (&pivot, row) in &self.rows {
            if self.field.is_zero(&v[pivot]) {
                continue;
            }
            let factor = v[pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = self.field.sub(x, &self.field.mul(&factor, r));
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Coeff>) {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|c| !self.field.is_zero(c)) else {
            return;
        };
        let inv = self.field.inv(&v[pivot]).unwrap();
        for x in v.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        for row in self.rows.values_mut() {
            if self.field.is_zero(&row[pivot]) {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                *x = self.field.sub(x, &self.field.mul(&factor, r));
            }
        }
        self.rows.insert(pivot, v);
    }
}

/// Membership in a homogeneous ideal by linear algebra alone: each
/// homogeneous component of `f`, of degree `d`, must lie in the span of the
/// products `m·g` with `deg(m·g) = d`. Exact for homogeneous generators.
pub fn macaulay_member(gens: &[Polynomial], f: &Polynomial) -> bool {
    let field = f.field().clone();
    let n = f.ring().nvars();
    let mut by_degree: BTreeMap<u32, Dense> = BTreeMap::new();
    for t in f.terms() {
        by_degree
            .entry(t.monomial.degree() as u32)
            .or_default()
            .insert(t.monomial.exponents().to_vec(), t.coeff.clone());
    }
    for (d, component) in by_degree {
        let columns = monomials_of_degree(n, d);
        let index: HashMap<&Vec<u32>, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_row = |p: &Dense| {
            let mut row = vec![field.zero(); columns.len()];
            for (m, c) in p {
                row[index[m]] = c.clone();
            }
            row
        };
        let mut span = Echelon::new(&field);
        for g in gens {
            let dg = g.total_degree().unwrap() as u32;
            if dg > d {
                continue;
            }
            let gd = to_dense(g);
            for m in monomials_of_degree(n, d - dg) {
                let shifted: Dense = gd
                    .iter()
                    .map(|(e, c)| (e.iter().zip(&m).map(|(a, b)| a + b).collect(), c.clone()))
                    .collect();
                span.insert(to_row(&shifted));
            }
        }
        let residue = span.reduce(to_row(&component));
        if residue.iter().any(|c| !field.is_zero(c)) {
            return false;
        }
    }
    true
}

/// The orbit `{τf : τ ∈ A}` of each seed, as an ideal.
pub fn symmetrize(group: &AutomorphismGroup, seeds: &[Polynomial]) -> Ideal {
    let mut gens = Vec::new();
    for f in seeds {
        for tau in group.elements() {
            gens.push(f.map_coeffs(|c| tau.apply(c)));
        }
    }
    Ideal::new(gens).unwrap()
}

/// Whether some coefficient of some generator lies outside the base field.
pub fn has_extension_coefficient(ideal: &Ideal, group: &AutomorphismGroup) -> bool {
    ideal
        .generators()
        .iter()
        .any(|g| g.terms().iter().any(|t| !group.fixes(&t.coeff)))
}

pub fn shuffle_and_scale<R: Rng>(rng: &mut R, ideal: &Ideal) -> Ideal {
    let field = ideal.ring().field().clone();
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.scale(&nonzero_coeff(rng, &field, true)))
        .collect();
    gens.shuffle(rng);
    Ideal::new(gens).unwrap()
}

/// One CLI invocation checked against a committed golden file.
pub struct GoldenCase {
    pub args: &'static [&'static str],
    pub golden: &'static str,
    pub exit_code: i32,
    /// Whether the golden holds stderr rather than stdout.
    pub stderr: bool,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        args: &["gb", "qi.problem"],
        golden: "qi.gb.txt",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["descent", "qi.problem"],
        golden: "qi.descent.txt",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["--format", "structured", "gb", "qi.problem"],
        golden: "qi.gb.json",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["--format", "structured", "descent", "qi.problem"],
        golden: "qi.descent.json",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["gb", "classic.problem"],
        golden: "classic.gb.txt",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["descent", "not_invariant.problem"],
        golden: "not_invariant.descent.txt",
        exit_code: 1,
        stderr: false,
    },
    GoldenCase {
        args: &["--format", "structured", "descent", "not_invariant.problem"],
        golden: "not_invariant.descent.json",
        exit_code: 1,
        stderr: false,
    },
    GoldenCase {
        args: &["descent", "gf9_projective.problem"],
        golden: "gf9_projective.descent.txt",
        exit_code: 0,
        stderr: false,
    },
    GoldenCase {
        args: &["gb", "bad_auto.problem"],
        golden: "bad_auto.stderr.txt",
        exit_code: 2,
        stderr: true,
    },
];

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// Runs the binary in the golden directory; returns (stdout, stderr, exit code).
pub fn run_cli(args: &[&str]) -> (Vec<u8>, Vec<u8>, i32) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_gbdescent"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    (out.stdout, out.stderr, out.status.code().unwrap_or(-1))
}

/// Checks one case twice for determinism and against its golden file.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let first = run_cli(case.args);
    let second = run_cli(case.args);
    if first != second {
        return Err(format!("{:?}: output differs between runs", case.args));
    }
    let (stdout, stderr, code) = first;
    if code != case.exit_code {
        return Err(format!(
            "{:?}: exit code {code}, expected {}",
            case.args, case.exit_code
        ));
    }
    let expected = std::fs::read(golden_dir().join(case.golden))
        .map_err(|e| format!("{}: {e}", case.golden))?;
    let actual = if case.stderr { stderr } else { stdout };
    if actual != expected {
        return Err(format!(
            "{:?} differs from {}:\n{}",
            case.args,
            case.golden,
            String::from_utf8_lossy(&actual)
        ));
    }
    Ok(())
}
