use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{
    ArithError, Automorphism, AutomorphismGroup, Coeff, FieldDescriptor, FieldElement,
};
use crate::groebner::Ideal;
use crate::poly::{parse_polynomial, OrderKind, PolyError, Polynomial, Ring, TermOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Affine,
    Projective,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Affine => "affine",
            Mode::Projective => "projective",
        })
    }
}

/// A validated problem file.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub ring: Arc<Ring>,
    pub order: OrderKind,
    pub automorphisms: Vec<Automorphism>,
    pub mode: Mode,
    pub generators: Vec<Polynomial>,
}

impl ProblemFile {
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        self.ring.field()
    }

    pub fn term_order(&self) -> TermOrder {
        TermOrder::new(self.order, self.ring.nvars())
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.generators.clone()).expect("parser rejects empty generator lists")
    }

    pub fn group(&self) -> AutomorphismGroup {
        AutomorphismGroup::new(self.field(), self.automorphisms.clone())
            .expect("parser validates the automorphism group")
    }

    /// Index of the first inhomogeneous generator, if any.
    pub fn first_inhomogeneous(&self) -> Option<usize> {
        self.generators.iter().position(|g| !g.is_homogeneous())
    }
}

impl fmt::Display for ProblemFile {
    /// Canonical file text; parsing it back yields the same problem.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field())?;
        writeln!(f, "vars {}", self.ring.vars().join(", "))?;
        writeln!(f, "order {}", self.order)?;
        for a in &self.automorphisms {
            writeln!(f, "auto {a}")?;
        }
        writeln!(f, "mode {}", self.mode)?;
        writeln!(f, "gens:")?;
        let order = self.term_order();
        for g in &self.generators {
            writeln!(f, "{}", g.with_order(&order))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid field: {0}")]
    Field(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("generator is not homogeneous in projective mode")]
    NonHomogeneous,
    #[error("no generators")]
    NoGenerators,
    #[error("missing `{0}` declaration")]
    Missing(&'static str),
    #[error("duplicate `{0}` declaration")]
    Duplicate(String),
}

/// A diagnostic at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub kind: ProblemErrorKind,
}

struct Line<'a> {
    number: usize,
    /// Byte offset of `text` within the raw line.
    indent: usize,
    text: &'a str,
}

impl Line<'_> {
    fn error(&self, offset: usize, kind: ProblemErrorKind) -> ProblemError {
        ProblemError {
            line: self.number,
            column: self.indent + offset + 1,
            kind,
        }
    }

    fn poly_error(&self, base: usize, err: PolyError) -> ProblemError {
        match err {
            PolyError::Parse { offset, message } => {
                let kind = match message.strip_prefix("unknown variable `") {
                    Some(rest) => {
                        ProblemErrorKind::UnknownVariable(rest.trim_end_matches('`').to_string())
                    }
                    None => ProblemErrorKind::Syntax(message),
                };
                self.error(base + offset, kind)
            }
            other => self.error(base, ProblemErrorKind::Syntax(other.to_string())),
        }
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Offset of `part` within `whole`; `part` must be a subslice.
fn offset_in(whole: &str, part: &str) -> usize {
    part.as_ptr() as usize - whole.as_ptr() as usize
}

/// Parses a field spec: `Q`, `Q(i)`, `Q(sqrt <d>)`, `GF(<p>)`, or
/// `GF(<p>^<k>; <monic modulus in one symbol>)`. Errors carry a byte offset.
pub fn parse_field_spec(spec: &str) -> Result<Arc<FieldDescriptor>, (usize, String)> {
    let s = spec.trim();
    let base = offset_in(spec, s);
    let at = |part: &str| offset_in(spec, part);
    if s == "Q" {
        return Ok(FieldDescriptor::rationals());
    }
    let inner = |prefix: &str| {
        s.strip_prefix(prefix)
            .and_then(|r| r.trim_start().strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
    };
    if let Some(body) = inner("Q") {
        let body = body.trim();
        if body == "i" {
            return Ok(FieldDescriptor::gaussian());
        }
        let Some(d) = body.strip_prefix("sqrt") else {
            return Err((at(body), "expected `i` or `sqrt <d>`".into()));
        };
        let d = d.trim();
        let radicand: i64 = d
            .parse()
            .map_err(|_| (at(d), format!("invalid radicand `{d}`")))?;
        return FieldDescriptor::quadratic(radicand, "s").map_err(|e| (at(d), e.to_string()));
    }
    if let Some(body) = inner("GF") {
        let (size, modulus) = match body.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (body.trim(), None),
        };
        let (p_text, k_text) = match size.split_once('^') {
            Some((p, k)) => (p.trim(), Some(k.trim())),
            None => (size, None),
        };
        let p: u64 = p_text
            .parse()
            .map_err(|_| (at(p_text), format!("invalid characteristic `{p_text}`")))?;
        let Some(k_text) = k_text else {
            if modulus.is_some() {
                return Err((at(size), "a modulus needs a `p^k` size".into()));
            }
            return FieldDescriptor::prime_field(p).map_err(|e| (at(p_text), e.to_string()));
        };
        let k: usize = k_text
            .parse()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| (at(k_text), format!("invalid extension degree `{k_text}`")))?;
        let Some(modulus) = modulus else {
            return Err((at(size) + size.len(), "expected `; <modulus>`".into()));
        };
        return parse_modulus(p, k, modulus).map_err(|(o, m)| (at(modulus) + o, m));
    }
    Err((base, format!("unrecognized field `{s}`")))
}

fn parse_modulus(p: u64, k: usize, text: &str) -> Result<Arc<FieldDescriptor>, (usize, String)> {
    let mut symbols: Vec<&str> = text
        .split(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .filter(|w| is_ident(w))
        .collect();
    symbols.dedup();
    symbols.sort_unstable();
    symbols.dedup();
    let [symbol] = symbols[..] else {
        return Err((0, "modulus must use exactly one symbol".into()));
    };
    let prime = FieldDescriptor::prime_field(p).map_err(|e| (0, e.to_string()))?;
    let ring = Ring::with_vars(prime.clone(), &[symbol]).expect("single variable");
    let order = TermOrder::lex(1);
    let m = parse_polynomial(&ring, &order, text).map_err(|e| match e {
        PolyError::Parse { offset, message } => (offset, message),
        other => (0, other.to_string()),
    })?;
    if m.total_degree() != Some(k as u64) {
        return Err((0, format!("modulus must have degree {k}")));
    }
    let mut coeffs = vec![0u64; k + 1];
    for t in m.terms() {
        let e = t.monomial.exponents()[0] as usize;
        coeffs[e] = match &t.coeff {
            Coeff::Finite(v) => v[0],
            _ => unreachable!("prime field coefficients"),
        };
    }
    FieldDescriptor::finite(p, &coeffs, symbol).map_err(|e| (0, e.to_string()))
}

fn arith_message(e: ArithError) -> String {
    match e {
        ArithError::NotAnAutomorphism(m) => m,
        other => other.to_string(),
    }
}

fn strip_comment(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => &raw[..i],
        None => raw,
    }
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ProblemError> {
    parse_problem_with(text, None)
}

/// Like [`parse_problem`], with `mode` overriding the file's `mode` line.
pub fn parse_problem_with(
    text: &str,
    mode_override: Option<Mode>,
) -> Result<ProblemFile, ProblemError> {
    let mut field: Option<Arc<FieldDescriptor>> = None;
    let mut ring: Option<Arc<Ring>> = None;
    let mut order: Option<OrderKind> = None;
    let mut mode: Option<Mode> = None;
    let mut automorphisms: Vec<Automorphism> = Vec::new();
    let mut generators: Vec<Polynomial> = Vec::new();
    let mut gens_line: Option<usize> = None;
    let mut last_line = 0;
    // Generators are collected raw so they can be parsed once the order is known.
    let mut gen_lines: Vec<Line> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let stripped = strip_comment(raw);
        let text = stripped.trim();
        last_line = idx + 1;
        if text.is_empty() {
            continue;
        }
        let line = Line {
            number: idx + 1,
            indent: offset_in(raw, text),
            text,
        };
        if gens_line.is_some() {
            gen_lines.push(line);
            continue;
        }
        let (keyword, rest) = match text.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r),
            None => (text, ""),
        };
        let rest_at = |r: &str| offset_in(text, r);
        let rest = rest.trim();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(line.error(0, ProblemErrorKind::Duplicate("field".into())));
                }
                let f = parse_field_spec(rest)
                    .map_err(|(o, m)| line.error(rest_at(rest) + o, ProblemErrorKind::Field(m)))?;
                field = Some(f);
            }
            "vars" => {
                if ring.is_some() {
                    return Err(line.error(0, ProblemErrorKind::Duplicate("vars".into())));
                }
                let Some(f) = &field else {
                    return Err(line.error(0, ProblemErrorKind::Missing("field")));
                };
                let mut names = Vec::new();
                for part in rest.split(',') {
                    let name = part.trim();
                    if !is_ident(name) {
                        let at = if name.is_empty() {
                            rest_at(part)
                        } else {
                            rest_at(name)
                        };
                        return Err(line.error(
                            at,
                            ProblemErrorKind::Syntax(format!("invalid variable name `{name}`")),
                        ));
                    }
                    names.push(name.to_string());
                }
                let r = Ring::new(f.clone(), names).map_err(|e| {
                    line.error(rest_at(rest), ProblemErrorKind::Syntax(e.to_string()))
                })?;
                ring = Some(r);
            }
            "order" => {
                if order.is_some() {
                    return Err(line.error(0, ProblemErrorKind::Duplicate("order".into())));
                }
                let kind = rest.parse::<OrderKind>().map_err(|e| {
                    line.error(rest_at(rest), ProblemErrorKind::Syntax(e.to_string()))
                })?;
                order = Some(kind);
            }
            "mode" => {
                if mode.is_some() {
                    return Err(line.error(0, ProblemErrorKind::Duplicate("mode".into())));
                }
                mode = Some(match rest {
                    "affine" => Mode::Affine,
                    "projective" => Mode::Projective,
                    other => {
                        return Err(line.error(
                            rest_at(rest),
                            ProblemErrorKind::Syntax(format!(
                                "expected affine or projective, got `{other}`"
                            )),
                        ))
                    }
                });
            }
            "auto" => {
                let Some(f) = &field else {
                    return Err(line.error(0, ProblemErrorKind::Missing("field")));
                };
                let auto = parse_auto(&line, f, rest, rest_at(rest))?;
                if automorphisms.iter().any(|a| a.name() == auto.name()) {
                    return Err(line.error(
                        rest_at(rest),
                        ProblemErrorKind::Duplicate(auto.name().to_string()),
                    ));
                }
                automorphisms.push(auto);
            }
            "gens:" => {
                gens_line = Some(line.number);
            }
            other => {
                return Err(line.error(
                    0,
                    ProblemErrorKind::Syntax(format!("unknown directive `{other}`")),
                ));
            }
        }
    }

    let eof = ProblemError {
        line: last_line.max(1),
        column: 1,
        kind: ProblemErrorKind::Missing("field"),
    };
    let Some(field) = field else {
        return Err(eof);
    };
    let Some(ring) = ring else {
        return Err(ProblemError {
            kind: ProblemErrorKind::Missing("vars"),
            ..eof
        });
    };
    let Some(order) = order else {
        return Err(ProblemError {
            kind: ProblemErrorKind::Missing("order"),
            ..eof
        });
    };
    let Some(gens_at) = gens_line else {
        return Err(ProblemError {
            kind: ProblemErrorKind::Missing("gens:"),
            ..eof
        });
    };
    let mode = mode_override.or(mode).unwrap_or(Mode::Affine);
    let term_order = TermOrder::new(order, ring.nvars());
    for line in &gen_lines {
        let g =
            parse_polynomial(&ring, &term_order, line.text).map_err(|e| line.poly_error(0, e))?;
        if mode == Mode::Projective && !g.is_homogeneous() {
            return Err(line.error(0, ProblemErrorKind::NonHomogeneous));
        }
        generators.push(g);
    }
    if generators.iter().all(Polynomial::is_zero) {
        return Err(ProblemError {
            line: gens_at,
            column: 1,
            kind: ProblemErrorKind::NoGenerators,
        });
    }
    AutomorphismGroup::new(&field, automorphisms.clone()).map_err(|e| ProblemError {
        line: gens_at,
        column: 1,
        kind: ProblemErrorKind::NotAnAutomorphism(arith_message(e)),
    })?;
    Ok(ProblemFile {
        ring,
        order,
        automorphisms,
        mode,
        generators,
    })
}

/// `<name>: <gen> -> <expr>`
fn parse_auto(
    line: &Line,
    field: &Arc<FieldDescriptor>,
    rest: &str,
    base: usize,
) -> Result<Automorphism, ProblemError> {
    let syntax =
        |at: usize, msg: &str| line.error(base + at, ProblemErrorKind::Syntax(msg.to_string()));
    let Some((name, map)) = rest.split_once(':') else {
        return Err(syntax(0, "expected `auto <name>: <gen> -> <expr>`"));
    };
    let name = name.trim();
    if !is_ident(name) {
        return Err(syntax(0, "invalid automorphism name"));
    }
    let map_at = offset_in(rest, map);
    let Some((gen, image)) = map.split_once("->") else {
        return Err(syntax(map_at, "expected `<gen> -> <expr>`"));
    };
    let gen = gen.trim();
    let gen_at = offset_in(rest, gen);
    match field.symbol() {
        Some(sym) if sym == gen => {}
        Some(sym) => {
            return Err(syntax(
                gen_at,
                &format!("expected generator `{sym}`, got `{gen}`"),
            ))
        }
        None => {
            return Err(line.error(
                base + gen_at,
                ProblemErrorKind::NotAnAutomorphism(format!("{field} has no generator")),
            ))
        }
    }
    let image = image.trim_start();
    let image_at = offset_in(rest, image);
    let constants = Ring::new(field.clone(), Vec::new()).expect("no variables");
    let value = parse_polynomial(&constants, &TermOrder::lex(0), image)
        .map_err(|e| line.poly_error(base + image_at, e))?;
    let value = value
        .leading_coeff()
        .cloned()
        .unwrap_or_else(|| field.zero());
    let element = FieldElement::new(field.clone(), value).expect("parsed in this field");
    Automorphism::validate(field, &element, name).map_err(|e| {
        line.error(
            base + image_at,
            ProblemErrorKind::NotAnAutomorphism(arith_message(e)),
        )
    })
}
