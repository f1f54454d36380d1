//! Saturation of a rule set by its nontrivial compositions.
//!
//! The procedure need not terminate, so every run is bounded by
//! [`CompletionLimits`]. Pending compositions are processed smallest
//! ambiguity word first; ties go to the earlier discovered one.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::rewriting::{compositions, Composition, GsbOutcome, RewriteSystem};
use crate::term::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    /// Compositions processed before giving up.
    pub max_iterations: usize,
    /// Longest leading monomial a new rule may have.
    pub max_rule_length: usize,
    /// Deepest letter a new rule's leading monomial may have.
    pub max_op_depth: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits { max_iterations: 10_000, max_rule_length: 8, max_op_depth: 6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    /// The basis is closed under compositions.
    Closed,
    /// A limit was hit first.
    Truncated,
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub status: CompletionStatus,
    pub basis: RewriteSystem,
    /// New rules in the order they were found, including ones later
    /// replaced during interreduction.
    pub added: Vec<Polynomial>,
    /// Discovery indices of the processed compositions, in processing order.
    pub log: Vec<usize>,
    /// Every composition discovered, indexed by discovery index. Rule ids in
    /// these refer to the internal numbering: input rules first, then
    /// `added` in order.
    pub compositions: Vec<Composition>,
}

struct State {
    limits: CompletionLimits,
    slots: Vec<Option<Polynomial>>,
    system: RewriteSystem,
    active: Vec<usize>,
    added: Vec<Polynomial>,
    comps: Vec<Composition>,
    pending: BinaryHeap<Reverse<(Monomial, usize)>>,
}

impl State {
    fn rebuild(&mut self) {
        self.active = (0..self.slots.len()).filter(|&i| self.slots[i].is_some()).collect();
        let rules = self.active.iter().map(|&i| self.slots[i].clone().unwrap()).collect();
        self.system = RewriteSystem::new(rules).expect("stored rules are monic");
    }

    fn enqueue(&mut self, c: Composition) {
        let idx = self.comps.len();
        self.pending.push(Reverse((c.w.clone(), idx)));
        self.comps.push(c);
    }

    fn enqueue_pairs(&mut self, id: usize) {
        let rule = self.slots[id].clone().unwrap();
        for k in self.active.clone() {
            let other = self.slots[k].clone().unwrap();
            for c in compositions(id, &rule, k, &other) {
                self.enqueue(c);
            }
            if k != id {
                for c in compositions(k, &other, id, &rule) {
                    self.enqueue(c);
                }
            }
        }
    }

    fn within_limits(&self, rule: &Polynomial) -> bool {
        let lead = rule.leading_monomial().expect("nonzero");
        lead.len() <= self.limits.max_rule_length && lead.max_depth() <= self.limits.max_op_depth
    }

    /// Adds a monic rule whose leading monomial is irreducible, then rewrites
    /// the stored rules whose leading monomials it reduces. Returns `false`
    /// when a limit trips.
    fn add_rule(&mut self, rule: Polynomial) -> bool {
        if !self.within_limits(&rule) {
            return false;
        }
        let id = self.slots.len();
        let single = RewriteSystem::new(vec![rule.clone()]).expect("monic");
        let victims: Vec<usize> = self
            .active
            .iter()
            .copied()
            .filter(|&k| single.is_reducible(self.slots[k].as_ref().unwrap().leading_monomial().unwrap()))
            .collect();
        self.slots.push(Some(rule.clone()));
        self.added.push(rule);
        let victims: Vec<Polynomial> = victims.into_iter().map(|k| self.slots[k].take().unwrap()).collect();
        self.rebuild();
        self.enqueue_pairs(id);
        for v in victims {
            let r = self.system.reduce(&v);
            if !r.is_zero() && !self.add_rule(r.make_monic().expect("nonzero")) {
                return false;
            }
        }
        true
    }
}

/// Runs completion on `system` until it is closed under compositions or a
/// limit in `limits` is reached.
pub fn complete(system: &RewriteSystem, limits: CompletionLimits) -> CompletionResult {
    let mut st = State {
        limits,
        slots: system.rules().iter().cloned().map(Some).collect(),
        system: system.clone(),
        active: Vec::new(),
        added: Vec::new(),
        comps: Vec::new(),
        pending: BinaryHeap::new(),
    };
    st.rebuild();
    for f in 0..system.len() {
        for g in 0..system.len() {
            for c in system.compositions(f, g) {
                st.enqueue(c);
            }
        }
    }

    let mut log = Vec::new();
    let status = 'outer: loop {
        while let Some(Reverse((_, idx))) = st.pending.pop() {
            if log.len() >= limits.max_iterations {
                break 'outer CompletionStatus::Truncated;
            }
            log.push(idx);
            let r = st.system.reduce(&st.comps[idx].value);
            if !r.is_zero() && !st.add_rule(r.make_monic().expect("nonzero")) {
                break 'outer CompletionStatus::Truncated;
            }
        }
        // The worklist covers every pair of live rules; this confirms it.
        match st.system.is_gsb() {
            GsbOutcome::Basis { .. } => break CompletionStatus::Closed,
            GsbOutcome::Witness { mut composition, .. } => {
                composition.f = st.active[composition.f];
                composition.g = st.active[composition.g];
                st.enqueue(composition);
            }
        }
    };

    CompletionResult { status, basis: st.system, added: st.added, log, compositions: st.comps }
}

/// Replaces every rule whose leading monomial is reducible by the other
/// rules with its normal form modulo them, dropping zeros, until no leading
/// monomial is reducible by another rule.
pub fn interreduce(system: &RewriteSystem) -> RewriteSystem {
    let mut rules: Vec<Polynomial> = system.rules().to_vec();
    loop {
        let mut changed = false;
        for i in 0..rules.len() {
            let mut others = rules.clone();
            let me = others.remove(i);
            let others = RewriteSystem::new(others).expect("monic");
            if !others.is_reducible(me.leading_monomial().unwrap()) {
                continue;
            }
            let r = others.reduce(&me);
            rules.remove(i);
            if !r.is_zero() {
                rules.insert(i, r.make_monic().expect("nonzero"));
            }
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    RewriteSystem::new(rules).expect("monic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn al() -> Alphabet {
        Alphabet::new(["y", "x"], [1, 2]).unwrap()
    }

    fn sys(al: &Alphabet, rules: &[&str]) -> RewriteSystem {
        RewriteSystem::from_polys(rules.iter().map(|r| al.parse(r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn single_linear_rule_is_closed() {
        let al = al();
        let res = complete(&sys(&al, &["(x) - (y)"]), CompletionLimits::default());
        assert_eq!(res.status, CompletionStatus::Closed);
        assert!(res.added.is_empty());
        assert_eq!(res.basis.rules(), &[al.parse("(x) - (y)").unwrap()]);
    }

    #[test]
    fn associative_collapse() {
        let al = al();
        let res = complete(&sys(&al, &["(x) * (y) - 1", "(y) * (x) - (y)"]), CompletionLimits::default());
        assert_eq!(res.status, CompletionStatus::Closed);
        assert!(res.basis.is_gsb().is_basis());
        let nf = |s: &str| res.basis.reduce(&al.parse(s).unwrap());
        assert_eq!(nf("(x)"), Polynomial::one());
        assert_eq!(nf("(y)"), Polynomial::one());
        assert_eq!(nf("(x) * (y)"), Polynomial::one());
    }

    #[test]
    fn iteration_limit_truncates() {
        let al = al();
        let limits = CompletionLimits { max_iterations: 1, ..CompletionLimits::default() };
        let res = complete(&sys(&al, &["(x) * (y) - 1", "(y) * (x) - (y)"]), limits);
        assert_eq!(res.status, CompletionStatus::Truncated);
        assert_eq!(res.log.len(), 1);
    }

    #[test]
    fn depth_limit_truncates() {
        // x*x -> D1(x) keeps producing deeper relations.
        let al = al();
        let limits = CompletionLimits { max_iterations: 200, max_rule_length: 3, max_op_depth: 2 };
        let res = complete(&sys(&al, &["(x) * (x) - D1 (x)"]), limits);
        assert_eq!(res.status, CompletionStatus::Truncated);
    }

    #[test]
    fn deterministic() {
        let al = al();
        let s = sys(&al, &["(x) * (y) - (y) * (x) - D1 (x)", "(y) * (y) - (x)"]);
        let limits = CompletionLimits { max_iterations: 50, max_rule_length: 4, max_op_depth: 2 };
        let a = complete(&s, limits);
        let b = complete(&s, limits);
        assert_eq!(a.log, b.log);
        assert_eq!(a.added, b.added);
        assert_eq!(a.basis.rules(), b.basis.rules());
    }

    #[test]
    fn interreduce_examples() {
        let al = al();
        let s = interreduce(&sys(&al, &["(x) - (y)", "(x) - (y)"]));
        assert_eq!(s.rules(), &[al.parse("(x) - (y)").unwrap()]);
        let s = interreduce(&sys(&al, &["D1 (x) - (x)", "D1 (x) * (y) - (x) * (y)"]));
        assert_eq!(s.rules(), &[al.parse("D1 (x) - (x)").unwrap()]);
        assert!(interreduce(&RewriteSystem::empty()).is_empty());
    }
}
