//! Brute-force linear algebra over bounded monomials.
//!
//! The ideal generated by a rule set is spanned by the words
//! `a · D^{jbar}(s) · b`. Restricting to words whose full expansion lies
//! inside a [`Bound`] gives a finite subspace that can be row reduced
//! exactly. Membership is decided by elimination alone, independently of
//! the rewriting code, so the span serves as ground truth for it at small
//! sizes. Reduction traces are consulted only to choose how large a span
//! must be to contain a certificate.

use std::collections::BTreeMap;

use crate::alphabet::Alphabet;
use crate::derivation::derive_poly;
use crate::error::Error;
use crate::rewriting::{enumerate_monomials, Bound, RewriteSystem};
use crate::term::{Monomial, OperatorId, Polynomial};

/// Reduced row-echelon basis of the bounded part of the ideal.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    pub bound: Bound,
    /// Pivot monomial to monic row; each pivot is its row's leading
    /// monomial and occurs in no other row.
    rows: BTreeMap<Monomial, Polynomial>,
}

impl SpanBasis {
    pub fn new(bound: Bound) -> Self {
        SpanBasis { bound, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows by decreasing pivot.
    pub fn rows(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.values().rev()
    }

    pub fn is_pivot(&self, m: &Monomial) -> bool {
        self.rows.contains_key(m)
    }

    /// Eliminates every pivot monomial from `v`.
    pub fn reduce_vector(&self, v: &Polynomial) -> Polynomial {
        let mut out = v.clone();
        // Rows carry no pivots besides their own, so one pass suffices.
        let hits: Vec<Monomial> = v.monomials().filter(|m| self.rows.contains_key(*m)).cloned().collect();
        for m in hits {
            let c = out.coeff(&m);
            out.add_scaled(&-c, &self.rows[&m]);
        }
        out
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &Polynomial) -> bool {
        let r = self.reduce_vector(v);
        if r.is_zero() {
            return false;
        }
        let r = r.make_monic().expect("nonzero");
        let pivot = r.leading_monomial().unwrap().clone();
        for row in self.rows.values_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }
}

fn op_strings(ops: &[OperatorId], max_len: usize) -> Vec<Vec<OperatorId>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &o in ops {
                let mut t: Vec<OperatorId> = s.clone();
                t.push(o);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every word `a · D^{jbar}(s) · b` of `system` whose expansion lies inside
/// `bound`, in a fixed order.
pub fn bounded_words(system: &RewriteSystem, al: &Alphabet, bound: Bound) -> Vec<Polynomial> {
    let ops = al.operators();
    let mut out = Vec::new();
    for rule in system.rules() {
        let lead = rule.leading_monomial().expect("nonzero rule");
        if lead.len() > bound.max_length {
            continue;
        }
        let jbars = match lead.letters().first() {
            None => vec![Vec::new()],
            Some(first) if first.depth() <= bound.max_op_depth => op_strings(&ops, bound.max_op_depth - first.depth()),
            Some(_) => continue,
        };
        let contexts = enumerate_monomials(al, Bound::new(bound.max_length - lead.len(), bound.max_op_depth));
        for jbar in jbars {
            let d = derive_poly(rule, &jbar);
            if d.is_zero() || d.max_depth() > bound.max_op_depth {
                continue;
            }
            for a in &contexts {
                for b in &contexts {
                    if a.len() + b.len() + lead.len() > bound.max_length {
                        continue;
                    }
                    out.push(d.sandwich(a, b));
                }
            }
        }
    }
    out
}

/// Row reduces all bounded words of `system`.
pub fn build_span(system: &RewriteSystem, al: &Alphabet, bound: Bound) -> SpanBasis {
    let mut span = SpanBasis::new(bound);
    for w in bounded_words(system, al, bound) {
        span.insert(&w);
    }
    span
}

/// Whether `f` lies in the bounded span.
pub fn ideal_member(f: &Polynomial, span: &SpanBasis) -> Result<bool, Error> {
    if !span.bound.contains_poly(f) {
        return Err(Error::OutOfBound);
    }
    Ok(span.reduce_vector(f).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Pass,
    Fail { witness: Polynomial, reason: &'static str },
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, OracleOutcome::Pass)
    }
}

/// Every element of the bounded span must have a reducible leading
/// monomial. Since rows are in echelon form it is enough to look at pivots.
pub fn check_statement_ii(system: &RewriteSystem, span: &SpanBasis) -> OracleOutcome {
    for row in span.rows() {
        if !system.is_reducible(row.leading_monomial().unwrap()) {
            return OracleOutcome::Fail {
                witness: row.clone(),
                reason: "ideal element with irreducible leading monomial",
            };
        }
    }
    OracleOutcome::Pass
}

/// The smallest bound containing `f`, its normal form, and every
/// `(S,D)`-word subtracted while reducing it.
pub fn trace_bound(system: &RewriteSystem, f: &Polynomial) -> Bound {
    let (r, steps) = system.reduce_traced(f);
    let mut out = Bound::new(0, 0);
    let mut see = |p: &Polynomial| {
        for m in p.monomials() {
            out.max_length = out.max_length.max(m.len());
            out.max_op_depth = out.max_op_depth.max(m.max_depth());
        }
    };
    see(f);
    see(&r);
    for (_, occ) in &steps {
        see(&system.expand(occ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementIiiReport {
    pub monomials: usize,
    pub irreducible: usize,
    pub rank: usize,
    /// Larger bound used to certify monomials whose reduction leaves the
    /// span's bound; `None` when the bound is closed under reduction.
    pub enlarged: Option<Bound>,
    pub outcome: OracleOutcome,
}

/// Checks that the bounded irreducible monomials form a basis of the
/// quotient at this size.
///
/// Independence: no combination of irreducible monomials lies in the span.
/// Spanning: every bounded monomial `u` is congruent to its normal form,
/// certified by elimination in the span, or in a span with a larger depth
/// bound when the reduction of `u` leaves `span.bound`. When no reduction
/// leaves the bound, the dimension identity
/// `monomials = irreducible + rank` must also hold.
pub fn check_statement_iii(system: &RewriteSystem, span: &SpanBasis, al: &Alphabet) -> StatementIiiReport {
    let all = enumerate_monomials(al, span.bound);
    let irr: Vec<bool> = all.iter().map(|m| !system.is_reducible(m)).collect();
    let irreducible = irr.iter().filter(|&&b| b).count();
    let rank = span.rank();
    let mut enlarged: Option<Bound> = None;
    let report = |enlarged, outcome| StatementIiiReport { monomials: all.len(), irreducible, rank, enlarged, outcome };

    for row in span.rows() {
        if !system.is_reducible(row.leading_monomial().unwrap()) {
            return report(
                None,
                OracleOutcome::Fail {
                    witness: row.clone(),
                    reason: "irreducible monomials are linearly dependent modulo the ideal",
                },
            );
        }
    }

    let mut escaped = Vec::new();
    for (m, _) in all.iter().zip(&irr).filter(|(_, &i)| !i) {
        let u = Polynomial::from(m.clone());
        let tb = trace_bound(system, &u);
        if tb.max_op_depth > span.bound.max_op_depth {
            let e = enlarged.get_or_insert(span.bound);
            e.max_op_depth = e.max_op_depth.max(tb.max_op_depth);
            escaped.push(u);
            continue;
        }
        let r = span.reduce_vector(&u);
        if r.monomials().any(|t| system.is_reducible(t)) {
            return report(
                enlarged,
                OracleOutcome::Fail {
                    witness: u,
                    reason: "monomial not congruent to irreducible monomials within the bound",
                },
            );
        }
    }

    match enlarged {
        None => {
            if all.len() != irreducible + rank {
                return report(
                    None,
                    OracleOutcome::Fail { witness: Polynomial::zero(), reason: "dimension count mismatch" },
                );
            }
        }
        Some(bound) => {
            let big = build_span(system, al, bound);
            for u in escaped {
                let diff = &u - &system.reduce(&u);
                if !big.reduce_vector(&diff).is_zero() {
                    return report(
                        enlarged,
                        OracleOutcome::Fail {
                            witness: u,
                            reason: "monomial not congruent to its normal form in the enlarged span",
                        },
                    );
                }
            }
        }
    }
    report(enlarged, OracleOutcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(["y", "x"], []).unwrap()
    }

    fn sys(al: &Alphabet, rules: &[&str]) -> RewriteSystem {
        RewriteSystem::from_polys(rules.iter().map(|r| al.parse(r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn linear_rule_spans() {
        let al = xy();
        let s = sys(&al, &["(x) - (y)"]);
        let span = build_span(&s, &al, Bound::new(1, 0));
        assert_eq!(span.rows().cloned().collect::<Vec<_>>(), vec![al.parse("(x) - (y)").unwrap()]);

        // 7 monomials of length <= 2: rank 4 and Irr = {1, y, y*y}.
        let span = build_span(&s, &al, Bound::new(2, 0));
        assert_eq!(span.rank(), 4);
        let rep = check_statement_iii(&s, &span, &al);
        assert_eq!((rep.monomials, rep.irreducible, rep.rank), (7, 3, 4));
        assert!(rep.outcome.passed());
        assert!(check_statement_ii(&s, &span).passed());
    }

    #[test]
    fn empty_system() {
        let al = Alphabet::new(["x"], [1]).unwrap();
        let span = build_span(&RewriteSystem::empty(), &al, Bound::new(2, 2));
        assert_eq!(span.rank(), 0);
        assert!(check_statement_ii(&RewriteSystem::empty(), &span).passed());
        let rep = check_statement_iii(&RewriteSystem::empty(), &span, &al);
        assert!(rep.outcome.passed());
        assert_eq!(rep.irreducible, rep.monomials);
    }

    #[test]
    fn membership() {
        let al = xy();
        let s = sys(&al, &["(x) - (y)"]);
        let span = build_span(&s, &al, Bound::new(2, 0));
        assert_eq!(ideal_member(&Polynomial::zero(), &span), Ok(true));
        assert_eq!(ideal_member(&al.parse("(x) * (x) - (y) * (y)").unwrap(), &span), Ok(true));
        assert_eq!(ideal_member(&al.parse("(x)").unwrap(), &span), Ok(false));
        assert_eq!(ideal_member(&al.parse("(x) * (x) * (x)").unwrap(), &span), Err(Error::OutOfBound));
    }

    #[test]
    fn non_basis_detected() {
        let al = xy();
        let s = sys(&al, &["(x) * (y) - 1", "(y) * (x) - (y)"]);
        let span = build_span(&s, &al, Bound::new(3, 0));
        match check_statement_ii(&s, &span) {
            OracleOutcome::Fail { witness, .. } => {
                assert!(!s.is_reducible(witness.leading_monomial().unwrap()));
            }
            OracleOutcome::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn rows_are_reduced_echelon() {
        let al = Alphabet::new(["x"], [1, 2]).unwrap();
        let s = sys(&al, &["D2 (x) - D1 (x) - (x)", "(x) * D1 (x) - 1"]);
        let span = build_span(&s, &al, Bound::new(2, 2));
        let pivots: Vec<&Monomial> = span.rows().map(|r| r.leading_monomial().unwrap()).collect();
        for row in span.rows() {
            assert!(row.is_monic());
            let lead = row.leading_monomial().unwrap();
            for p in &pivots {
                if *p != lead {
                    assert!(row.coeff(p).is_zero());
                }
            }
        }
    }
}
