#![allow(dead_code)]

use diffgsb::{Coeff, DiffWord, Monomial, OperatorId, Polynomial, RewriteSystem, Variable};
use proptest::prelude::*;

pub fn word(nvars: u32, nops: u32, max_depth: usize) -> impl Strategy<Value = DiffWord> {
    (0..nvars, prop::collection::vec(0..nops, 0..=max_depth))
        .prop_map(|(v, ops)| DiffWord::new(Variable(v), ops.into_iter().map(OperatorId).collect()))
}

pub fn mono(nvars: u32, nops: u32, max_len: usize, max_depth: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(word(nvars, nops, max_depth), 0..=max_len).prop_map(Monomial::new)
}

pub fn nonempty_mono(nvars: u32, nops: u32, max_len: usize, max_depth: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(word(nvars, nops, max_depth), 1..=max_len).prop_map(Monomial::new)
}

pub fn coeff() -> impl Strategy<Value = Coeff> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Coeff::from_ratio(n, d))
}

pub fn poly(
    nvars: u32,
    nops: u32,
    max_len: usize,
    max_depth: usize,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((mono(nvars, nops, max_len, max_depth), coeff()), 0..=max_terms)
        .prop_map(Polynomial::from_terms)
}

pub fn nonzero_poly(
    nvars: u32,
    nops: u32,
    max_len: usize,
    max_depth: usize,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    poly(nvars, nops, max_len, max_depth, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Small monic systems: each rule has a leading monomial of length 1..=2
/// and up to two smaller tail terms.
pub fn system(nvars: u32, nops: u32, max_rules: usize) -> impl Strategy<Value = RewriteSystem> {
    let rule = (nonempty_mono(nvars, nops, 2, 1), prop::collection::vec((mono(nvars, nops, 2, 1), coeff()), 0..=2))
        .prop_map(|(lead, tail)| {
            let mut p = Polynomial::from(lead.clone());
            for (m, c) in tail {
                if m < lead {
                    p.add_term(m, c);
                }
            }
            p
        });
    prop::collection::vec(rule, 1..=max_rules).prop_map(|rs| RewriteSystem::new(rs).expect("monic"))
}

/// Applies `jbar` to `u` by brute force: each operator, innermost first, is
/// prepended to one letter in every possible way.
pub fn naive_derive(u: &Monomial, jbar: &[OperatorId]) -> Polynomial {
    let mut terms: Vec<Vec<DiffWord>> = vec![u.letters().to_vec()];
    for &j in jbar.iter().rev() {
        let mut next = Vec::new();
        for letters in &terms {
            for p in 0..letters.len() {
                let mut l = letters.clone();
                l[p].ops.insert(0, j);
                next.push(l);
            }
        }
        terms = next;
    }
    let mut out = Polynomial::zero();
    for t in terms {
        out.add_term(Monomial::new(t), Coeff::one());
    }
    out
}

/// All operator strings over `nops` operators of length at most `max_len`.
pub fn op_strings(nops: u32, max_len: usize) -> Vec<Vec<OperatorId>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<OperatorId>> = vec![vec![]];
    for _ in 0..max_len {
        let next: Vec<Vec<OperatorId>> =
            layer.iter().flat_map(|s| (0..nops).map(move |o| [s.as_slice(), &[OperatorId(o)]].concat())).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every monomial with at most `max_len` letters, each carrying at most
/// `max_depth` operators.
pub fn all_monomials(nvars: u32, nops: u32, max_len: usize, max_depth: usize) -> Vec<Monomial> {
    let letters: Vec<DiffWord> = (0..nvars)
        .flat_map(|v| op_strings(nops, max_depth).into_iter().map(move |s| DiffWord::new(Variable(v), s)))
        .collect();
    let mut out = vec![Monomial::one()];
    let mut layer = vec![Monomial::one()];
    for _ in 0..max_len {
        let next: Vec<Monomial> =
            layer.iter().flat_map(|m| letters.iter().map(move |w| m.mul(&Monomial::letter(w.clone())))).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
