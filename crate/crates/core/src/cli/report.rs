use serde::Serialize;

use crate::descent::{descent_check, DescentReport, Verdict};
use crate::groebner::{reduced_groebner_basis, GroebnerBasis};
use crate::poly::Polynomial;

use super::problem::{Mode, ProblemFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Gb,
    Descent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_INVARIANT: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl RunOutput {
    pub(crate) fn error(message: impl std::fmt::Display) -> Self {
        RunOutput {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            exit_code: EXIT_INPUT_ERROR,
        }
    }
}

#[derive(Serialize)]
struct GbDoc {
    command: &'static str,
    field: String,
    vars: Vec<String>,
    order: String,
    mode: String,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct DescentDoc {
    command: &'static str,
    verdict: &'static str,
    field: String,
    vars: Vec<String>,
    order: String,
    mode: String,
    group_order: usize,
    invariance: Vec<InvarianceDoc>,
    basis: Vec<String>,
    coefficients: Vec<CoefficientDoc>,
}

#[derive(Serialize)]
struct InvarianceDoc {
    automorphism: String,
    invariant: bool,
    witness: Option<WitnessDoc>,
}

#[derive(Serialize)]
struct WitnessDoc {
    generator: String,
    image: String,
}

#[derive(Serialize)]
struct CoefficientDoc {
    element: usize,
    monomial: String,
    coefficient: String,
    fixed: bool,
}

fn lines(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(Polynomial::to_string).collect()
}

/// Runs `command` on a validated problem.
pub fn run(problem: &ProblemFile, command: Command, format: OutputFormat) -> RunOutput {
    let order = problem.term_order();
    let ideal = problem.ideal();
    match command {
        Command::Gb => match reduced_groebner_basis(&ideal, &order) {
            Ok(basis) => RunOutput {
                stdout: render_gb(problem, &basis, format),
                stderr: String::new(),
                exit_code: EXIT_OK,
            },
            Err(e) => RunOutput::error(e),
        },
        Command::Descent => {
            let group = problem.group();
            match descent_check(&ideal, &group, &order, problem.mode == Mode::Projective) {
                Ok(report) => RunOutput {
                    stdout: render_descent(problem, &report, group.order(), format),
                    stderr: String::new(),
                    exit_code: match report.verdict {
                        Verdict::DefinedOverFixedField => EXIT_OK,
                        Verdict::NotInvariant => EXIT_NOT_INVARIANT,
                    },
                },
                Err(e) => RunOutput::error(e),
            }
        }
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn render_gb(problem: &ProblemFile, basis: &GroebnerBasis, format: OutputFormat) -> String {
    let basis = lines(basis.elements());
    match format {
        OutputFormat::Text => basis.iter().map(|l| format!("{l}\n")).collect(),
        OutputFormat::Structured => to_json(&GbDoc {
            command: "gb",
            field: problem.field().to_string(),
            vars: problem.ring.vars().to_vec(),
            order: problem.order.to_string(),
            mode: problem.mode.to_string(),
            basis,
        }),
    }
}

fn render_descent(
    problem: &ProblemFile,
    report: &DescentReport,
    group_order: usize,
    format: OutputFormat,
) -> String {
    let field = problem.field();
    let vars = problem.ring.vars();
    let doc = DescentDoc {
        command: "descent",
        verdict: report.verdict.as_str(),
        field: field.to_string(),
        vars: vars.to_vec(),
        order: problem.order.to_string(),
        mode: problem.mode.to_string(),
        group_order,
        invariance: report
            .invariance
            .iter()
            .map(|inv| InvarianceDoc {
                automorphism: inv.automorphism.to_string(),
                invariant: inv.invariant,
                witness: inv.witness.as_ref().map(|w| WitnessDoc {
                    generator: w.generator.to_string(),
                    image: w.image.to_string(),
                }),
            })
            .collect(),
        basis: lines(report.basis.elements()),
        coefficients: report
            .coefficients
            .iter()
            .map(|c| CoefficientDoc {
                element: c.element,
                monomial: c.monomial.format(vars),
                coefficient: field.format(&c.coeff),
                fixed: c.fixed,
            })
            .collect(),
    };
    match format {
        OutputFormat::Structured => to_json(&doc),
        OutputFormat::Text => render_descent_text(&doc),
    }
}

fn render_descent_text(doc: &DescentDoc) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(doc.verdict.to_string());
    line(format!("field {}", doc.field));
    line(format!("vars {}", doc.vars.join(", ")));
    line(format!("order {}", doc.order));
    line(format!("mode {}", doc.mode));
    line(format!("group order {}", doc.group_order));
    for inv in &doc.invariance {
        let status = if inv.invariant {
            "invariant"
        } else {
            "not invariant"
        };
        line(format!("auto {} [{status}]", inv.automorphism));
        if let Some(w) = &inv.witness {
            line(format!("witness {} -> {}", w.generator, w.image));
        }
    }
    line("basis:".to_string());
    for b in &doc.basis {
        line(b.clone());
    }
    line("coefficients:".to_string());
    for c in &doc.coefficients {
        let status = if c.fixed { "fixed" } else { "not fixed" };
        line(format!(
            "{} {}: {} [{status}]",
            c.element, c.monomial, c.coefficient
        ));
    }
    out
}
