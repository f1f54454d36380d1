//! Differential algebras whose operators span a Lie algebra.
//!
//! Given structure constants `[D_i, D_j] = sum_r alpha^r_{ij} D_r`, the
//! relations
//!
//! ```text
//! D_p D_q D_{i1}...D_{im}(x) - D_q D_p D_{i1}...D_{im}(x) - sum_r alpha^r_{pq} D_r D_{i1}...D_{im}(x)
//! ```
//!
//! for `p > q` and `i1 <= ... <= im` rewrite every operator string into
//! nondecreasing order. Their normal forms are the monomials all of whose
//! letters carry nondecreasing operator strings.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coeff;
use crate::error::Error;
use crate::rewriting::{Bound, Composition, CompositionKind, GsbOutcome, RewriteSystem};
use crate::term::{DiffWord, Monomial, OperatorId, Polynomial, Variable};

/// Structure constants over a finite ordered operator set. Unset constants
/// are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    operators: Vec<OperatorId>,
    alpha: BTreeMap<(OperatorId, OperatorId, OperatorId), Coeff>,
}

impl LieStructure {
    /// The abelian structure on `operators`.
    pub fn new(mut operators: Vec<OperatorId>) -> Self {
        operators.sort();
        operators.dedup();
        LieStructure { operators, alpha: BTreeMap::new() }
    }

    pub fn operators(&self) -> &[OperatorId] {
        &self.operators
    }

    /// Sets `alpha^r_{ij}`.
    pub fn set(&mut self, i: OperatorId, j: OperatorId, r: OperatorId, c: Coeff) {
        if c.is_zero() {
            self.alpha.remove(&(i, j, r));
        } else {
            self.alpha.insert((i, j, r), c);
        }
    }

    pub fn with(mut self, i: OperatorId, j: OperatorId, r: OperatorId, c: Coeff) -> Self {
        self.set(i, j, r, c);
        self
    }

    /// `alpha^r_{ij}`.
    pub fn alpha(&self, i: OperatorId, j: OperatorId, r: OperatorId) -> Coeff {
        self.alpha.get(&(i, j, r)).cloned().unwrap_or_default()
    }

    /// Nonzero entries `(i, j, r, alpha^r_{ij})`.
    pub fn entries(&self) -> impl Iterator<Item = (OperatorId, OperatorId, OperatorId, &Coeff)> {
        self.alpha.iter().map(|(&(i, j, r), c)| (i, j, r, c))
    }

    /// Nonzero `(r, alpha^r_{ij})` in increasing `r`.
    pub fn bracket(&self, i: OperatorId, j: OperatorId) -> Vec<(OperatorId, Coeff)> {
        self.operators.iter().map(|&r| (r, self.alpha(i, j, r))).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `sum_s alpha^s_{ij} alpha^t_{sk} + alpha^s_{ki} alpha^t_{sj} + alpha^s_{jk} alpha^t_{si}`.
    pub fn jacobi_defect(&self, i: OperatorId, j: OperatorId, k: OperatorId, t: OperatorId) -> Coeff {
        let mut sum = Coeff::zero();
        for &s in &self.operators {
            sum += &(self.alpha(i, j, s) * self.alpha(s, k, t));
            sum += &(self.alpha(k, i, s) * self.alpha(s, j, t));
            sum += &(self.alpha(j, k, s) * self.alpha(s, i, t));
        }
        sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieViolation {
    /// `alpha^s_{ij} != -alpha^s_{ji}`.
    Antisymmetry { i: OperatorId, j: OperatorId, s: OperatorId },
    /// The Jacobi sum for `(i, j, k)` has a nonzero `D_t` coefficient.
    Jacobi { i: OperatorId, j: OperatorId, k: OperatorId, t: OperatorId, defect: Coeff },
    /// A constant refers to an operator outside the declared set.
    UnknownOperator(OperatorId),
}

impl fmt::Display for LieViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieViolation::Antisymmetry { i, j, s } => {
                write!(f, "antisymmetry fails at (i, j, s) = (#{}, #{}, #{})", i.0, j.0, s.0)
            }
            LieViolation::Jacobi { i, j, k, t, defect } => write!(
                f,
                "Jacobi identity fails at (i, j, k, t) = (#{}, #{}, #{}, #{}) with defect {defect}",
                i.0, j.0, k.0, t.0
            ),
            LieViolation::UnknownOperator(o) => write!(f, "operator #{} is not declared", o.0),
        }
    }
}

/// Checks antisymmetry over all `(i, j, s)`, then the Jacobi identity over
/// all `(i, j, k, t)`, and reports the first violation.
pub fn validate_lie(lie: &LieStructure) -> Result<(), LieViolation> {
    for (i, j, r, _) in lie.entries() {
        for o in [i, j, r] {
            if lie.operators.binary_search(&o).is_err() {
                return Err(LieViolation::UnknownOperator(o));
            }
        }
    }
    let ops = &lie.operators;
    for &i in ops {
        for &j in ops {
            for &s in ops {
                if lie.alpha(i, j, s) != -lie.alpha(j, i, s) {
                    return Err(LieViolation::Antisymmetry { i, j, s });
                }
            }
        }
    }
    for &i in ops {
        for &j in ops {
            for &k in ops {
                for &t in ops {
                    let defect = lie.jacobi_defect(i, j, k, t);
                    if !defect.is_zero() {
                        return Err(LieViolation::Jacobi { i, j, k, t, defect });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Nondecreasing operator strings over `ops` of each length `0..=max_len`,
/// shorter first, each length in lexicographic order.
fn nondecreasing_strings(ops: &[OperatorId], max_len: usize) -> Vec<Vec<OperatorId>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<OperatorId>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &o in ops {
                if s.last().is_none_or(|&l| l <= o) {
                    let mut t = s.clone();
                    t.push(o);
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The sorting relations with inner strings of length at most `depth`,
/// without validating the structure constants.
pub fn generate_s0_unchecked(lie: &LieStructure, vars: &[Variable], depth: usize) -> RewriteSystem {
    let ops = &lie.operators;
    let mut rules = Vec::new();
    for &x in vars {
        for inner in nondecreasing_strings(ops, depth) {
            for (pi, &p) in ops.iter().enumerate() {
                for &q in &ops[..pi] {
                    let word =
                        |prefix: &[OperatorId]| Monomial::letter(DiffWord::new(x, [prefix, &inner[..]].concat()));
                    let lead = word(&[p, q]);
                    let mut rule = Polynomial::from(lead.clone());
                    rule.add_term(word(&[q, p]), -Coeff::one());
                    for (r, c) in lie.bracket(p, q) {
                        rule.add_term(word(&[r]), -c);
                    }
                    let (l, c) = rule.leading_term().expect("nonzero");
                    assert!(l == &lead && c.is_one(), "sorting relation must lead with D_p D_q");
                    rules.push(rule);
                }
            }
        }
    }
    RewriteSystem::new(rules).expect("monic")
}

pub fn generate_s0(lie: &LieStructure, vars: &[Variable], depth: usize) -> Result<RewriteSystem, Error> {
    validate_lie(lie).map_err(Error::InvalidLie)?;
    Ok(generate_s0_unchecked(lie, vars, depth))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S0Verification {
    pub depth: usize,
    /// Rules in the checked system (generated one level deeper).
    pub rules: usize,
    /// Compositions reduced.
    pub checked: usize,
    /// `(p, q, i1)` of the inclusions `D_p D_q D_{i1}... - D_p(D_q D_{i1}...)` checked.
    pub triples: Vec<(OperatorId, OperatorId, OperatorId)>,
    /// First composition with a nonzero normal form.
    pub failure: Option<(Composition, Polynomial)>,
}

impl S0Verification {
    pub fn is_basis(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn verify_s0_unchecked(lie: &LieStructure, vars: &[Variable], depth: usize) -> S0Verification {
    let system = generate_s0_unchecked(lie, vars, depth + 1);
    let ceiling = depth + 3;
    let keep = |c: &Composition| c.w.total_ops() <= ceiling;
    let mut triples = Vec::new();
    for c in system.all_compositions() {
        if keep(&c) && c.kind == CompositionKind::InclusionOuter && c.jbar.len() == 1 {
            let ops = &system.lead(c.f).letters()[0].ops;
            triples.push((c.jbar[0], ops[1], ops[2]));
        }
    }
    triples.sort();
    triples.dedup();
    let (checked, failure) = match system.is_gsb_where(keep) {
        GsbOutcome::Basis { checked } => (checked, None),
        GsbOutcome::Witness { composition, remainder } => (0, Some((composition, remainder))),
    };
    S0Verification { depth, rules: system.len(), checked, triples, failure }
}

/// Checks that the sorting relations are closed under compositions up to
/// `depth`, using relations one level deeper so every needed reducer exists.
pub fn verify_s0(lie: &LieStructure, vars: &[Variable], depth: usize) -> Result<S0Verification, Error> {
    validate_lie(lie).map_err(Error::InvalidLie)?;
    Ok(verify_s0_unchecked(lie, vars, depth))
}

/// Monomials within `bound` whose letters all carry nondecreasing operator
/// strings, in increasing order.
pub fn enumerate_h(lie: &LieStructure, vars: &[Variable], bound: Bound) -> Vec<Monomial> {
    let strings = nondecreasing_strings(&lie.operators, bound.max_op_depth);
    let letters: Vec<DiffWord> =
        vars.iter().flat_map(|&x| strings.iter().map(move |s| DiffWord::new(x, s.clone()))).collect();
    let mut out = vec![Monomial::one()];
    let mut layer = vec![Monomial::one()];
    for _ in 0..bound.max_length {
        let mut next = Vec::new();
        for m in &layer {
            for w in &letters {
                next.push(m.mul(&Monomial::letter(w.clone())));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

/// Normal form modulo the sorting relations: the unique representative of
/// `f` supported on nondecreasing letters.
pub fn h_normal_form(f: &Polynomial, lie: &LieStructure, vars: &[Variable]) -> Result<Polynomial, Error> {
    validate_lie(lie).map_err(Error::InvalidLie)?;
    let system = generate_s0_unchecked(lie, vars, f.max_depth());
    Ok(system.reduce(f))
}
