//! Text and JSON renderings of command results.
//!
//! JSON objects are emitted with sorted keys; rule ids are 0-based positions
//! in the rules file (comments and blank lines skipped); operator strings
//! are lists of operator index labels, outermost first.

use std::fmt::Write;

use serde_json::{json, Value};

use diffgsb::oracle::StatementIiiReport;
use diffgsb::{
    Alphabet, Bound, CompletionResult, CompletionStatus, Composition, GsbOutcome, LieViolation, Monomial, OperatorId,
    OracleOutcome, S0Verification,
};

pub struct Report {
    text: String,
    json: Value,
}

fn labels(al: &Alphabet, ops: &[OperatorId]) -> Value {
    json!(ops.iter().map(|&o| al.op_label(o)).collect::<Vec<_>>())
}

fn composition_json(al: &Alphabet, c: &Composition) -> Value {
    json!({
        "kind": c.kind.name(),
        "f": c.f,
        "g": c.g,
        "w": al.show_monomial(&c.w),
        "a": al.show_monomial(&c.a),
        "b": al.show_monomial(&c.b),
        "ibar": labels(al, &c.ibar),
        "jbar": labels(al, &c.jbar),
        "value": al.show(&c.value),
    })
}

fn composition_line(al: &Alphabet, c: &Composition) -> String {
    format!("{} f={} g={} w={} value={}", c.kind.name(), c.f, c.g, al.show_monomial(&c.w), al.show(&c.value))
}

fn outcome_json(al: &Alphabet, o: &OracleOutcome) -> Value {
    match o {
        OracleOutcome::Pass => json!({ "result": "PASS" }),
        OracleOutcome::Fail { witness, reason } => {
            json!({ "result": "FAIL", "reason": reason, "witness": al.show(witness) })
        }
    }
}

fn violation_text(al: &Alphabet, v: &LieViolation) -> String {
    let l = |o: &OperatorId| al.op_label(*o);
    match v {
        LieViolation::Antisymmetry { i, j, s } => {
            format!("antisymmetry fails at (i, j, s) = ({}, {}, {})", l(i), l(j), l(s))
        }
        LieViolation::Jacobi { i, j, k, t, defect } => format!(
            "Jacobi identity fails at (i, j, k, t) = ({}, {}, {}, {}) with defect {defect}",
            l(i),
            l(j),
            l(k),
            l(t)
        ),
        LieViolation::UnknownOperator(o) => format!("operator {} is not declared", l(o)),
    }
}

impl Report {
    pub fn text(&self) -> String {
        self.text.clone()
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }

    pub fn normal_form(command: &str, al: &Alphabet, nf: &diffgsb::Polynomial) -> Report {
        let shown = al.show(nf);
        Report { text: format!("{shown}\n"), json: json!({ "command": command, "normal_form": shown }) }
    }

    pub fn compositions(al: &Alphabet, cs: &[Composition]) -> Report {
        let mut text = String::new();
        for c in cs {
            writeln!(text, "{}", composition_line(al, c)).unwrap();
        }
        let list: Vec<Value> = cs.iter().map(|c| composition_json(al, c)).collect();
        Report { text, json: json!({ "command": "compositions", "compositions": list }) }
    }

    pub fn gsb(al: &Alphabet, outcome: &GsbOutcome) -> Report {
        match outcome {
            GsbOutcome::Basis { checked } => Report {
                text: format!("PASS ({checked} compositions reduce to 0)\n"),
                json: json!({ "command": "gsb-check", "result": "PASS", "checked": checked }),
            },
            GsbOutcome::Witness { composition, remainder } => {
                let mut text = String::from("FAIL\n");
                writeln!(text, "witness: {}", composition_line(al, composition)).unwrap();
                writeln!(text, "remainder: {}", al.show(remainder)).unwrap();
                let mut w = composition_json(al, composition);
                w["remainder"] = json!(al.show(remainder));
                Report { text, json: json!({ "command": "gsb-check", "result": "FAIL", "witness": w }) }
            }
        }
    }

    pub fn completion(al: &Alphabet, res: &CompletionResult) -> Report {
        let status = match res.status {
            CompletionStatus::Closed => "closed",
            CompletionStatus::Truncated => "truncated",
        };
        let basis: Vec<String> = res.basis.rules().iter().map(|r| al.show(r)).collect();
        let added: Vec<String> = res.added.iter().map(|r| al.show(r)).collect();
        let mut text = format!("status: {status}\nprocessed: {}\nadded:\n", res.log.len());
        for a in &added {
            writeln!(text, "  {a}").unwrap();
        }
        text.push_str("basis:\n");
        for b in &basis {
            writeln!(text, "  {b}").unwrap();
        }
        Report {
            text,
            json: json!({
                "command": "complete",
                "status": status,
                "processed": res.log.len(),
                "added": added,
                "basis": basis,
            }),
        }
    }

    pub fn irr(al: &Alphabet, bound: Bound, monos: &[Monomial]) -> Report {
        let shown: Vec<String> = monos.iter().map(|m| al.show_monomial(m)).collect();
        let mut text = String::new();
        for s in &shown {
            writeln!(text, "{s}").unwrap();
        }
        Report {
            text,
            json: json!({
                "command": "irr",
                "max_length": bound.max_length,
                "max_depth": bound.max_op_depth,
                "count": shown.len(),
                "monomials": shown,
            }),
        }
    }

    pub fn lie_invalid(al: &Alphabet, v: &LieViolation) -> Report {
        let msg = violation_text(al, v);
        Report {
            text: format!("lie structure: FAIL ({msg})\n"),
            json: json!({ "command": "lie", "validate": "FAIL", "violation": msg }),
        }
    }

    pub fn lie_verify(al: &Alphabet, v: &S0Verification) -> Report {
        let mut text = String::from("lie structure: PASS\n");
        let triples: Vec<Value> =
            v.triples.iter().map(|(p, q, i)| json!([al.op_label(*p), al.op_label(*q), al.op_label(*i)])).collect();
        let mut obj = json!({
            "command": "lie-verify",
            "validate": "PASS",
            "depth": v.depth,
            "rules": v.rules,
            "triples": triples,
        });
        match &v.failure {
            None => {
                writeln!(
                    text,
                    "sorting relations at depth {}: PASS ({} rules, {} compositions, {} inclusion triples)",
                    v.depth,
                    v.rules,
                    v.checked,
                    v.triples.len()
                )
                .unwrap();
                obj["result"] = json!("PASS");
                obj["checked"] = json!(v.checked);
            }
            Some((c, r)) => {
                writeln!(text, "sorting relations at depth {}: FAIL", v.depth).unwrap();
                writeln!(text, "witness: {}", composition_line(al, c)).unwrap();
                writeln!(text, "remainder: {}", al.show(r)).unwrap();
                let mut w = composition_json(al, c);
                w["remainder"] = json!(al.show(r));
                obj["result"] = json!("FAIL");
                obj["witness"] = w;
            }
        }
        Report { text, json: obj }
    }

    pub fn oracle(al: &Alphabet, bound: Bound, ii: &OracleOutcome, iii: &StatementIiiReport) -> Report {
        let mut text = format!("bound: length <= {}, depth <= {}\n", bound.max_length, bound.max_op_depth);
        let line = |name: &str, o: &OracleOutcome| match o {
            OracleOutcome::Pass => format!("{name}: PASS\n"),
            OracleOutcome::Fail { witness, reason } => {
                format!("{name}: FAIL ({reason})\n  witness: {}\n", al.show(witness))
            }
        };
        text.push_str(&line("statement (ii)", ii));
        text.push_str(&line("statement (iii)", &iii.outcome));
        writeln!(text, "monomials: {}, irreducible: {}, rank: {}", iii.monomials, iii.irreducible, iii.rank).unwrap();
        if let Some(e) = iii.enlarged {
            writeln!(text, "some reductions leave the bound; spanning certified at depth <= {}", e.max_op_depth)
                .unwrap();
        }
        let mut iii_json = outcome_json(al, &iii.outcome);
        iii_json["monomials"] = json!(iii.monomials);
        iii_json["irreducible"] = json!(iii.irreducible);
        iii_json["rank"] = json!(iii.rank);
        iii_json["enlarged_depth"] = json!(iii.enlarged.map(|e| e.max_op_depth));
        Report {
            text,
            json: json!({
                "command": "oracle-check",
                "max_length": bound.max_length,
                "max_depth": bound.max_op_depth,
                "statement_ii": outcome_json(al, ii),
                "statement_iii": iii_json,
            }),
        }
    }
}
