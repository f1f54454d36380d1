//! Command-line front end for `diffgsb`.
//!
//! [`run`] takes the full argument vector and two output streams and returns
//! the process exit code: 0 on success or PASS, 1 when a check fails or a
//! witness is found, 2 on input errors.

pub mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

use diffgsb::{
    build_span, check_statement_ii, check_statement_iii, complete, h_normal_form, validate_lie, verify_s0, Bound,
    CompletionLimits, CompletionStatus,
};

use config::{load_rules, SessionConfig};
use report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("rules line {line}: {msg}")]
    Rules { line: usize, msg: String },
    #[error("cannot parse polynomial: {0}")]
    Parse(#[from] diffgsb::ParseError),
    #[error(transparent)]
    Core(#[from] diffgsb::Error),
}

#[derive(Debug, Parser)]
#[command(name = "diffgsb", about = "Gröbner-Shirshov bases for free differential algebras")]
struct Cli {
    /// Session config file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of a polynomial modulo the rules.
    Nf {
        #[arg(long)]
        rules: PathBuf,
        poly: String,
    },
    /// List every composition of the rules.
    Compositions {
        #[arg(long)]
        rules: PathBuf,
    },
    /// Check whether the rules form a Gröbner-Shirshov basis.
    GsbCheck {
        #[arg(long)]
        rules: PathBuf,
    },
    /// Run bounded completion.
    Complete {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_iter: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// List irreducible monomials within a bound.
    Irr {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Validate the structure constants and verify the sorting relations.
    LieVerify {
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Normal form modulo the sorting relations of the configured Lie structure.
    LieNf { poly: String },
    /// Cross-check the rules against the bounded linear-algebra oracle.
    OracleCheck {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_depth: Option<usize>,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    match execute(&cli, err) {
        Ok((report, code)) => {
            let text = if cli.json { report.json() } else { report.text() };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, warn: &mut dyn Write) -> Result<(Report, i32), CliError> {
    let path = cli.config.as_ref().ok_or(CliError::Io("missing --config <file>".into()))?;
    let cfg = SessionConfig::load(path)?;
    let al = &cfg.alphabet;
    let out = match &cli.command {
        Command::Nf { rules, poly } => {
            let system = load_rules(rules, al, warn)?;
            let f = al.parse(poly)?;
            (Report::normal_form("nf", al, &system.reduce(&f)), 0)
        }
        Command::Compositions { rules } => {
            let system = load_rules(rules, al, warn)?;
            (Report::compositions(al, &system.all_compositions()), 0)
        }
        Command::GsbCheck { rules } => {
            let system = load_rules(rules, al, warn)?;
            let outcome = system.is_gsb();
            let code = if outcome.is_basis() { 0 } else { 1 };
            (Report::gsb(al, &outcome), code)
        }
        Command::Complete { rules, max_iter, max_len, max_depth } => {
            let system = load_rules(rules, al, warn)?;
            let limits = CompletionLimits {
                max_iterations: max_iter.unwrap_or(cfg.limits.max_iterations),
                max_rule_length: max_len.unwrap_or(cfg.limits.max_rule_length),
                max_op_depth: max_depth.unwrap_or(cfg.limits.max_op_depth),
            };
            let res = complete(&system, limits);
            let code = if res.status == CompletionStatus::Closed { 0 } else { 1 };
            (Report::completion(al, &res), code)
        }
        Command::Irr { rules, max_len, max_depth } => {
            let system = load_rules(rules, al, warn)?;
            let bound = bound_from(&cfg, *max_len, *max_depth);
            (Report::irr(al, bound, &system.irr_enumerate(al, bound)), 0)
        }
        Command::LieVerify { depth } => match validate_lie(&cfg.lie) {
            Err(v) => (Report::lie_invalid(al, &v), 1),
            Ok(()) => {
                let v = verify_s0(&cfg.lie, &al.variables(), *depth)?;
                let code = if v.is_basis() { 0 } else { 1 };
                (Report::lie_verify(al, &v), code)
            }
        },
        Command::LieNf { poly } => {
            let f = al.parse(poly)?;
            if let Err(v) = validate_lie(&cfg.lie) {
                return Ok((Report::lie_invalid(al, &v), 1));
            }
            let nf = h_normal_form(&f, &cfg.lie, &al.variables())?;
            (Report::normal_form("lie-nf", al, &nf), 0)
        }
        Command::OracleCheck { rules, max_len, max_depth } => {
            let system = load_rules(rules, al, warn)?;
            let bound = bound_from(&cfg, *max_len, *max_depth);
            let span = build_span(&system, al, bound);
            let ii = check_statement_ii(&system, &span);
            let iii = check_statement_iii(&system, &span, al);
            let code = if ii.passed() && iii.outcome.passed() { 0 } else { 1 };
            (Report::oracle(al, bound, &ii, &iii), code)
        }
    };
    Ok(out)
}

fn bound_from(cfg: &SessionConfig, max_len: Option<usize>, max_depth: Option<usize>) -> Bound {
    Bound::new(max_len.unwrap_or(cfg.bound.max_length), max_depth.unwrap_or(cfg.bound.max_op_depth))
}
