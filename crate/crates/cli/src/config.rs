//! Session config and rules files.
//!
//! Config files are line oriented; `#` starts a comment:
//!
//! ```text
//! vars = x y
//! operators = 1 2 3
//! alpha 1 2 3 = 1
//! alpha 2 1 3 = -1
//! max_iterations = 10000
//! max_rule_length = 8
//! max_op_depth = 6
//! bound_length = 3
//! bound_depth = 2
//! ```
//!
//! `vars` is required. Declaration order is the variable and operator order,
//! smallest first. `alpha i j r = c` sets the structure constant of `D_r` in
//! `[D_i, D_j]`; unset constants are zero.

use std::path::Path;

use diffgsb::{Alphabet, Bound, Coeff, CompletionLimits, LieStructure, Polynomial, RewriteSystem};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub alphabet: Alphabet,
    pub lie: LieStructure,
    pub limits: CompletionLimits,
    pub bound: Bound,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_usize(value: &str, line: usize, key: &str) -> Result<usize, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Config { line, msg: format!("`{key}` expects a natural number, got `{value}`") })
}

impl SessionConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        SessionConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut vars: Option<Vec<String>> = None;
        let mut ops: Vec<u32> = Vec::new();
        let mut alphas: Vec<(usize, [u32; 3], Coeff)> = Vec::new();
        let mut limits = CompletionLimits::default();
        let mut bound = Bound::new(3, 2);

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = strip_comment(raw);
            if body.is_empty() {
                continue;
            }
            let err = |msg: String| CliError::Config { line, msg };
            let (lhs, rhs) = body.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
            let mut key_parts = lhs.split_whitespace();
            let key = key_parts.next().ok_or_else(|| err("missing key".into()))?;
            let args: Vec<&str> = key_parts.collect();
            let rhs = rhs.trim();
            if key != "alpha" && !args.is_empty() {
                return Err(err(format!("unexpected arguments after `{key}`")));
            }
            match key {
                "vars" => vars = Some(rhs.split_whitespace().map(str::to_string).collect()),
                "operators" => {
                    ops = rhs
                        .split_whitespace()
                        .map(|o| o.parse::<u32>().map_err(|_| err(format!("invalid operator index `{o}`"))))
                        .collect::<Result<_, _>>()?;
                }
                "alpha" => {
                    if args.len() != 3 {
                        return Err(err("expected `alpha i j r = c`".into()));
                    }
                    let mut idx3 = [0u32; 3];
                    for (slot, a) in idx3.iter_mut().zip(&args) {
                        *slot = a.parse().map_err(|_| err(format!("invalid operator index `{a}`")))?;
                    }
                    let c: Coeff = rhs.parse().map_err(|_| err(format!("invalid rational `{rhs}`")))?;
                    alphas.push((line, idx3, c));
                }
                "max_iterations" => limits.max_iterations = parse_usize(rhs, line, key)?,
                "max_rule_length" => limits.max_rule_length = parse_usize(rhs, line, key)?,
                "max_op_depth" => limits.max_op_depth = parse_usize(rhs, line, key)?,
                "bound_length" => bound.max_length = parse_usize(rhs, line, key)?,
                "bound_depth" => bound.max_op_depth = parse_usize(rhs, line, key)?,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }

        let vars = vars.ok_or(CliError::Config { line: 0, msg: "missing `vars`".into() })?;
        let alphabet = Alphabet::new(vars, ops).map_err(|e| CliError::Config { line: 0, msg: e.to_string() })?;
        let mut lie = LieStructure::new(alphabet.operators());
        for (line, [i, j, r], c) in alphas {
            let op = |l: u32| {
                alphabet.op(l).ok_or_else(|| CliError::Config { line, msg: format!("operator {l} is not declared") })
            };
            lie.set(op(i)?, op(j)?, op(r)?, c);
        }
        Ok(SessionConfig { alphabet, lie, limits, bound })
    }
}

/// Reads one polynomial per line. Non-monic rules are normalized, with a
/// warning written to `warn`.
pub fn load_rules(path: &Path, al: &Alphabet, warn: &mut dyn std::io::Write) -> Result<RewriteSystem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read rules {}: {e}", path.display())))?;
    parse_rules(&text, al, warn)
}

pub fn parse_rules(text: &str, al: &Alphabet, warn: &mut dyn std::io::Write) -> Result<RewriteSystem, CliError> {
    let mut rules: Vec<Polynomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let p = al.parse(body).map_err(|e| CliError::Rules { line, msg: e.to_string() })?;
        if p.is_zero() {
            return Err(CliError::Rules { line, msg: "rule is the zero polynomial".into() });
        }
        if !p.is_monic() {
            let _ = writeln!(warn, "warning: rule on line {line} normalized to monic form");
        }
        rules.push(p.make_monic().expect("nonzero"));
    }
    Ok(RewriteSystem::new(rules).expect("monic"))
}
