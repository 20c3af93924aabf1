//! Problem files and the `gbdescent` command line.
//!
//! A problem file is line oriented:
//!
//! ```text
//! field Q(i)
//! vars x, y
//! order lex
//! auto conj: i -> -i
//! mode affine
//! gens:
//! x + i*y
//! x - i*y
//! ```
//!
//! `#` starts a comment. Every line after `gens:` holds one generator.

mod problem;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::poly::OrderKind;

pub use problem::{
    parse_field_spec, parse_problem, parse_problem_with, Mode, ProblemError, ProblemErrorKind,
    ProblemFile,
};
pub use report::{
    run, Command, OutputFormat, RunOutput, EXIT_INPUT_ERROR, EXIT_NOT_INVARIANT, EXIT_OK,
};

#[derive(Debug, Parser)]
#[command(
    name = "gbdescent",
    version,
    about = "Reduced Groebner bases and descent to fixed fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Term order, overriding the file.
    #[arg(long, global = true, value_parser = parse_order)]
    pub order: Option<OrderKind>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Treat the generators as homogeneous equations of a projective variety.
    #[arg(long, global = true)]
    pub projective: bool,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Print the reduced Groebner basis.
    Gb { file: PathBuf },
    /// Decide whether the ideal is defined over the fixed field.
    Descent { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Structured,
}

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse::<OrderKind>().map_err(|e| e.to_string())
}

/// Parses arguments, reads the problem file and runs it.
pub fn execute<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunOutput {
                    stdout: String::new(),
                    stderr: text,
                    exit_code,
                }
            } else {
                RunOutput {
                    stdout: text,
                    stderr: String::new(),
                    exit_code,
                }
            };
        }
    };
    let (command, path) = match &cli.command {
        CliCommand::Gb { file } => (Command::Gb, file),
        CliCommand::Descent { file } => (Command::Descent, file),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return RunOutput::error(format_args!("{}: {e}", path.display())),
    };
    let mode = cli.projective.then_some(Mode::Projective);
    let mut problem = match parse_problem_with(&text, mode) {
        Ok(p) => p,
        Err(e) => {
            return RunOutput::error(format_args!(
                "{}:{}:{}: {}",
                path.display(),
                e.line,
                e.column,
                e.kind
            ))
        }
    };
    if let Some(order) = cli.order {
        problem.order = order;
    }
    let format = match cli.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Structured => OutputFormat::Structured,
    };
    run(&problem, command, format)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CLASSIC: &str =
        "field Q\nvars x, y\norder deglex\ngens:\nx^3 - 2*x*y\nx^2*y - 2*y^2 + x\n";
    const QI: &str =
        "field Q(i)\nvars x, y\norder lex\nauto conj: i -> -i\ngens:\nx + i*y\nx - i*y\n";

    #[test]
    fn gb_classic() {
        let p = parse_problem(CLASSIC).unwrap();
        let out = run(&p, Command::Gb, OutputFormat::Text);
        assert_eq!(out.exit_code, EXIT_OK);
        assert_eq!(out.stdout, "x^2\nx*y\ny^2 - 1/2*x\n");
    }

    #[test]
    fn descent_example() {
        let p = parse_problem(QI).unwrap();
        let out = run(&p, Command::Descent, OutputFormat::Text);
        assert_eq!(out.exit_code, EXIT_OK);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "DEFINED OVER FIXED FIELD");
        let at = lines.iter().position(|l| *l == "basis:").unwrap();
        assert_eq!(&lines[at + 1..at + 3], &["x", "y"]);
    }

    #[test]
    fn descent_failure_has_witness() {
        let text = "field Q(i)\nvars x, y\norder lex\nauto conj: i -> -i\ngens:\nx + i\n";
        let p = parse_problem(text).unwrap();
        let out = run(&p, Command::Descent, OutputFormat::Text);
        assert_eq!(out.exit_code, EXIT_NOT_INVARIANT);
        assert!(out.stdout.starts_with("NOT INVARIANT\n"));
        assert!(
            out.stdout.contains("witness x + i -> x - i\n"),
            "{}",
            out.stdout
        );
        let out = run(&p, Command::Descent, OutputFormat::Structured);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "NOT INVARIANT");
        assert_eq!(v["invariance"][0]["witness"]["image"], "x - i");
    }

    #[test]
    fn structured_gb() {
        let p = parse_problem(CLASSIC).unwrap();
        let out = run(&p, Command::Gb, OutputFormat::Structured);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["basis"][2], "y^2 - 1/2*x");
        assert_eq!(v["order"], "deglex");
    }
}
