//! Command-line front end: expression parsing, canonical printing and the
//! `contactkit` subcommands.
//!
//! [`run`] is the whole program minus process plumbing, so it can be driven
//! in-process.

pub mod print;
pub mod syntax;

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{Rat, RatFn};
use crate::contact::{ContactError, DarbouxModel, Density, Hamiltonian, TangentCoords};
use crate::verify::{run_suite, GenConfig, VerifyError};

pub use syntax::{parse_expr, parse_field, parse_list, parse_ratfn, ExprAst, ParseError};

/// Environment variable holding the default seed for `check`.
pub const SEED_ENV: &str = "CONTACTKIT_SEED";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Usage(String),
    #[error("{failures} of {trials} trials failed")]
    SuiteFailed { failures: usize, trials: u64 },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Parse(e) => e.name(),
            CliError::Contact(e) => e.name(),
            CliError::Verify(e) => e.name(),
            CliError::Usage(_) => "UsageError",
            CliError::SuiteFailed { .. } => "SuiteFailed",
        }
    }

    /// 2 for malformed input, 1 for everything the kernel rejects.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "contactkit",
    version,
    about = "Exact contact geometry on the Darboux model"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Dim {
    /// Half-dimension: the model is R^(2n+1).
    #[arg(short = 'n', long = "n", default_value_t = 1)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contact vector field of a Hamiltonian.
    Xh {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'H', allow_hyphen_values = true)]
        h: String,
    },
    /// Lagrange bracket of two Hamiltonians.
    Bracket {
        #[command(flatten)]
        dim: Dim,
        #[arg(long = "H1", allow_hyphen_values = true)]
        h1: String,
        #[arg(long = "H2", allow_hyphen_values = true)]
        h2: String,
    },
    /// Split a field into its contact and tangent parts.
    Decompose {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'X', allow_hyphen_values = true)]
        x: String,
    },
    /// Pairing of two tangent fields.
    Pair {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'X', allow_hyphen_values = true)]
        x: String,
        #[arg(short = 'Y', allow_hyphen_values = true)]
        y: String,
    },
    /// Frame coordinates of [X_H, F·A + G·B].
    Act {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'H', allow_hyphen_values = true)]
        h: String,
        #[arg(short = 'F', allow_hyphen_values = true)]
        f: String,
        #[arg(short = 'G', allow_hyphen_values = true)]
        g: String,
    },
    /// Two-form and density realizing a tangent field.
    Realize {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'X', allow_hyphen_values = true)]
        x: String,
    },
    /// Reeb field of f·alpha.
    Reeb {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'f', allow_hyphen_values = true, default_value = "1")]
        f: String,
    },
    /// Lie derivative of f·Omega^weight along X_H.
    Lieder {
        #[command(flatten)]
        dim: Dim,
        #[arg(short = 'H', allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(short = 'f', allow_hyphen_values = true)]
        f: String,
    },
    /// Run a randomized identity suite; prints one JSON record per trial.
    Check {
        #[arg(long)]
        suite: String,
        /// Defaults to $CONTACTKIT_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        dim: Dim,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Record<'a> {
    kind: &'a str,
    name: &'a str,
    value: String,
    n: usize,
}

struct Output {
    format: Format,
    n: usize,
    items: Vec<(&'static str, &'static str, String)>,
}

impl Output {
    fn push(&mut self, kind: &'static str, name: &'static str, value: String) {
        self.items.push((kind, name, value));
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for (kind, name, value) in &self.items {
            match self.format {
                Format::Json => {
                    let rec = Record {
                        kind,
                        name,
                        value: value.clone(),
                        n: self.n,
                    };
                    out.push_str(&serde_json::to_string(&rec).expect("plain record"));
                }
                Format::Text if self.items.len() == 1 => out.push_str(value),
                Format::Text => {
                    out.push_str(name);
                    out.push_str(" = ");
                    out.push_str(value);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `-H1`/`-H2` are multi-character short flags, which clap does not
/// support; they are rewritten to their long spellings.
fn normalize_args(args: Vec<String>) -> Vec<String> {
    args.into_iter()
        .map(|a| match a.as_str() {
            "-H1" => "--H1".to_string(),
            "-H2" => "--H2".to_string(),
            _ => a,
        })
        .collect()
}

/// Runs `contactkit` with `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = normalize_args(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut stdout = String::new();
    match execute(cli, &mut stdout) {
        Ok(()) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout,
            stderr: format!("error: {}: {}\n", e.name(), e),
        },
    }
}

fn execute(cli: Cli, stdout: &mut String) -> Result<(), CliError> {
    if let Command::Check {
        suite,
        seed,
        dim,
        trials,
        max_degree,
    } = &cli.command
    {
        return check(suite, *seed, dim.n, *trials, *max_degree, stdout);
    }

    let n = match &cli.command {
        Command::Xh { dim, .. }
        | Command::Bracket { dim, .. }
        | Command::Decompose { dim, .. }
        | Command::Pair { dim, .. }
        | Command::Act { dim, .. }
        | Command::Realize { dim, .. }
        | Command::Reeb { dim, .. }
        | Command::Lieder { dim, .. }
        | Command::Check { dim, .. } => dim.n,
    };
    let m = DarbouxModel::new(n)?;
    let ham = |s: &str| parse_ratfn(s, n).map(Hamiltonian);
    let mut out = Output {
        format: cli.format,
        n,
        items: Vec::new(),
    };

    match cli.command {
        Command::Xh { h, .. } => {
            let x = m.hamiltonian_to_field(&ham(&h)?)?;
            out.push("field", "X", print::field(&x));
        }
        Command::Bracket { h1, h2, .. } => {
            let b = m.lagrange_bracket(&ham(&h1)?, &ham(&h2)?)?;
            out.push("hamiltonian", "H", print::ratfn(b.function()));
        }
        Command::Decompose { x, .. } => {
            let (h, y) = m.decompose(&parse_field(&x, n)?)?;
            out.push("hamiltonian", "H", print::ratfn(h.function()));
            out.push("field", "Y", print::field(&y));
        }
        Command::Pair { x, y, .. } => {
            let p = m.pairing(&parse_field(&x, n)?, &parse_field(&y, n)?)?;
            out.push("hamiltonian", "H", print::ratfn(p.function()));
        }
        Command::Act { h, f, g, .. } => {
            let (f, g) = (parse_list(&f, n)?, parse_list(&g, n)?);
            for found in [f.len(), g.len()] {
                if found != n {
                    return Err(ContactError::WrongArity { expected: n, found }.into());
                }
            }
            let t = TangentCoords::new(f, g)?;
            let r = m.matrix_action(&ham(&h)?, &t)?;
            out.push("coords", "F", print::list(&r.f));
            out.push("coords", "G", print::list(&r.g));
        }
        Command::Realize { x, .. } => {
            let r = m.realize_tangent(&parse_field(&x, n)?)?;
            out.push("form", "form", print::form(&r.two_form));
            out.push("density", "density", print::density(&r.weight_part));
        }
        Command::Reeb { f, .. } => {
            let f = parse_ratfn(&f, n)?;
            let alpha = m.alpha().scale(&f);
            out.push("field", "R", print::field(&m.reeb_of(&alpha)?));
        }
        Command::Lieder { h, weight, f, .. } => {
            let weight = Rat::from_str(weight.trim())
                .map_err(|e| CliError::Usage(format!("invalid weight `{weight}`: {e}")))?;
            let x = m.hamiltonian_to_field(&ham(&h)?)?;
            let d = m.density_lie(&x, &Density::new(parse_ratfn(&f, n)?, weight))?;
            out.push("density", "L", print::density(&d));
        }
        Command::Check { .. } => unreachable!("handled above"),
    }
    stdout.push_str(&out.render());
    Ok(())
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    n: usize,
    seed: u64,
    trials: u64,
    failures: usize,
    elapsed_ms: u128,
}

fn default_seed() -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} is not an unsigned integer: `{s}`"))),
        Err(_) => Ok(0),
    }
}

fn check(
    suite: &str,
    seed: Option<u64>,
    n: usize,
    trials: u64,
    max_degree: Option<u32>,
    stdout: &mut String,
) -> Result<(), CliError> {
    let seed = match seed {
        Some(s) => s,
        None => default_seed()?,
    };
    let mut cfg = GenConfig::new(seed, n);
    if let Some(d) = max_degree {
        cfg.max_degree = d;
    }
    let report = run_suite(suite, &cfg, trials)?;
    for r in &report.records {
        stdout.push_str(&serde_json::to_string(r).expect("plain record"));
        stdout.push('\n');
    }
    let failures = report.failure_count();
    let summary = Summary {
        suite: &report.suite,
        n,
        seed,
        trials,
        failures,
        elapsed_ms: report.elapsed.as_millis(),
    };
    stdout.push_str(&serde_json::to_string(&summary).expect("plain record"));
    stdout.push('\n');
    if failures > 0 {
        return Err(CliError::SuiteFailed { failures, trials });
    }
    Ok(())
}

/// Convenience used by tests and the round-trip checks.
pub fn roundtrip(f: &RatFn) -> Result<RatFn, ParseError> {
    parse_ratfn(&print::ratfn(f), f.n())
}
