//! The well order on differential words and the deg-lex order on monomials.
//!
//! A differential word `D_{i1}...D_{im}(x)` is ranked by its weight tuple
//! `(x; m, i1, ..., im)` compared lexicographically. Monomials are compared
//! by length first, then letter by letter from the left. This order is
//! compatible with two-sided multiplication and with taking leading terms of
//! derivatives, which the rewriting machinery relies on.

use std::cmp::Ordering;

use crate::term::{DiffWord, Monomial, OperatorId, Variable};

/// `(var; m, i1, ..., im)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub var: Variable,
    pub m: usize,
    pub indices: Vec<OperatorId>,
}

pub fn weight(word: &DiffWord) -> Weight {
    Weight { var: word.var, m: word.ops.len(), indices: word.ops.clone() }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.var.cmp(&other.var).then(self.m.cmp(&other.m)).then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn cmp_diffword(a: &DiffWord, b: &DiffWord) -> Ordering {
    // Same as comparing `weight(a)` with `weight(b)`, without the allocation.
    a.var.cmp(&b.var).then(a.ops.len().cmp(&b.ops.len())).then_with(|| a.ops.cmp(&b.ops))
}

pub fn cmp_monomial(u: &Monomial, v: &Monomial) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| {
        u.letters()
            .iter()
            .zip(v.letters())
            .map(|(a, b)| cmp_diffword(a, b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

impl Ord for DiffWord {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_diffword(self, other)
    }
}

impl PartialOrd for DiffWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_monomial(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
