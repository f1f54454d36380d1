//! Rewriting modulo a set of monic relations.
//!
//! A rule `s` rewrites every monomial of the form `a · d^{jbar}(lead(s)) · b`,
//! where `d^{jbar}` prepends the operator string `jbar` to the first letter of
//! the leading monomial. Reduction subtracts the matching word
//! `a · D^{jbar}(s) · b`, whose leading monomial is exactly the rewritten one.
//!
//! Compositions are the critical pairs of this rewriting relation. A rule set
//! is a Gröbner-Shirshov basis when every composition reduces to zero.

use std::collections::{HashMap, HashSet};

use crate::alphabet::Alphabet;
use crate::coeff::Coeff;
use crate::derivation::derive_poly;
use crate::error::Error;
use crate::term::{Monomial, OperatorId, Polynomial, Variable};

/// Size limits for enumerating monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bound {
    /// Maximum number of letters.
    pub max_length: usize,
    /// Maximum number of operators on any single letter.
    pub max_op_depth: usize,
}

impl Bound {
    pub fn new(max_length: usize, max_op_depth: usize) -> Self {
        Bound { max_length, max_op_depth }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.len() <= self.max_length && m.max_depth() <= self.max_op_depth
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        f.monomials().all(|m| self.contains(m))
    }
}

/// All monomials within `bound`, in increasing order.
pub fn enumerate_monomials(al: &Alphabet, bound: Bound) -> Vec<Monomial> {
    let words = al.words(bound.max_op_depth);
    let mut out = vec![Monomial::one()];
    let mut layer = vec![Monomial::one()];
    for _ in 0..bound.max_length {
        let mut next = Vec::with_capacity(layer.len() * words.len());
        for m in &layer {
            for w in &words {
                next.push(m.mul(&Monomial::letter(w.clone())));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

/// A match `u = a · d^{jbar}(lead(rule)) · b` inside a host monomial `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub rule: usize,
    /// Letter position of the match inside the host.
    pub pos: usize,
    pub a: Monomial,
    pub jbar: Vec<OperatorId>,
    pub b: Monomial,
}

/// If `lead` occurs in `host` at `pos` up to a derivative of its first
/// letter, returns that derivative word.
fn match_at(host: &Monomial, pos: usize, lead: &Monomial) -> Option<Vec<OperatorId>> {
    let h = host.letters();
    let l = lead.letters();
    if l.is_empty() {
        return (pos <= h.len()).then(Vec::new);
    }
    if pos + l.len() > h.len() {
        return None;
    }
    let jbar = h[pos].strip_inner(&l[0])?;
    if h[pos + 1..pos + l.len()] != l[1..] {
        return None;
    }
    Some(jbar.to_vec())
}

/// A finite set of monic nonzero polynomials, indexed by the variable of the
/// first letter of each leading monomial.
#[derive(Debug, Clone, Default)]
pub struct RewriteSystem {
    rules: Vec<Polynomial>,
    leads: Vec<Monomial>,
    by_var: HashMap<Variable, Vec<usize>>,
    /// Rules whose leading monomial is `1`.
    unit: Vec<usize>,
}

impl RewriteSystem {
    pub fn empty() -> Self {
        RewriteSystem::default()
    }

    /// Builds a system from monic rules.
    pub fn new(rules: Vec<Polynomial>) -> Result<Self, Error> {
        let mut sys = RewriteSystem::empty();
        for r in rules {
            let (_, lc) = r.leading_term()?;
            if !lc.is_one() {
                return Err(Error::NotMonic);
            }
            sys.push(r);
        }
        Ok(sys)
    }

    /// Builds a system after dividing each polynomial by its leading
    /// coefficient.
    pub fn from_polys(polys: Vec<Polynomial>) -> Result<Self, Error> {
        let monic = polys.iter().map(Polynomial::make_monic).collect::<Result<Vec<_>, _>>()?;
        RewriteSystem::new(monic)
    }

    fn push(&mut self, rule: Polynomial) {
        let id = self.rules.len();
        let lead = rule.leading_monomial().expect("nonzero rule").clone();
        match lead.letters().first() {
            Some(w) => self.by_var.entry(w.var).or_default().push(id),
            None => self.unit.push(id),
        }
        self.leads.push(lead);
        self.rules.push(rule);
    }

    pub fn rules(&self) -> &[Polynomial] {
        &self.rules
    }

    pub fn rule(&self, id: usize) -> &Polynomial {
        &self.rules[id]
    }

    pub fn lead(&self, id: usize) -> &Monomial {
        &self.leads[id]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn candidates(&self, u: &Monomial, pos: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.unit.clone();
        if let Some(w) = u.letters().get(pos) {
            if let Some(ids) = self.by_var.get(&w.var) {
                c.extend_from_slice(ids);
            }
        }
        c.sort_unstable();
        c
    }

    fn occurrence(&self, u: &Monomial, pos: usize, rule: usize, jbar: Vec<OperatorId>) -> Occurrence {
        let end = pos + self.leads[rule].len();
        Occurrence { rule, pos, a: u.slice(0, pos), jbar, b: u.slice(end, u.len()) }
    }

    /// Every occurrence of a rule's leading monomial in `u`, ordered by
    /// position and then by rule.
    pub fn find_occurrences(&self, u: &Monomial) -> Vec<Occurrence> {
        let mut out = Vec::new();
        for pos in 0..=u.len() {
            for id in self.candidates(u, pos) {
                if let Some(jbar) = match_at(u, pos, &self.leads[id]) {
                    out.push(self.occurrence(u, pos, id, jbar));
                }
            }
        }
        out
    }

    /// The first occurrence in the order of [`find_occurrences`](Self::find_occurrences).
    pub fn first_occurrence(&self, u: &Monomial) -> Option<Occurrence> {
        for pos in 0..=u.len() {
            for id in self.candidates(u, pos) {
                if let Some(jbar) = match_at(u, pos, &self.leads[id]) {
                    return Some(self.occurrence(u, pos, id, jbar));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, u: &Monomial) -> bool {
        self.first_occurrence(u).is_some()
    }

    /// `a · D^{jbar}(rule) · b` for an occurrence.
    pub fn expand(&self, occ: &Occurrence) -> Polynomial {
        derive_poly(&self.rules[occ.rule], &occ.jbar).sandwich(&occ.a, &occ.b)
    }

    /// Normal form of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.reduce_inner(f, None)
    }

    /// Normal form of `f` together with the rewriting steps taken; `f`
    /// equals the normal form plus the sum of `coeff · expand(occurrence)`.
    pub fn reduce_traced(&self, f: &Polynomial) -> (Polynomial, Vec<(Coeff, Occurrence)>) {
        let mut trace = Vec::new();
        let nf = self.reduce_inner(f, Some(&mut trace));
        (nf, trace)
    }

    fn reduce_inner(&self, f: &Polynomial, mut trace: Option<&mut Vec<(Coeff, Occurrence)>>) -> Polynomial {
        let mut derived: HashMap<(usize, Vec<OperatorId>), Polynomial> = HashMap::new();
        let mut rem = f.clone();
        let mut out = Polynomial::zero();
        while let Some((m, c)) = rem.pop_leading() {
            let Some(occ) = self.first_occurrence(&m) else {
                out.add_term(m, c);
                continue;
            };
            let d = derived
                .entry((occ.rule, occ.jbar.clone()))
                .or_insert_with(|| derive_poly(&self.rules[occ.rule], &occ.jbar));
            for (mm, cc) in d.terms() {
                let mm = mm.sandwich(&occ.a, &occ.b);
                if mm != m {
                    rem.add_term(mm, -(&c * cc));
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                t.push((c, occ));
            }
        }
        out
    }

    /// Compositions of rules `f` and `g` of this system.
    pub fn compositions(&self, f: usize, g: usize) -> Vec<Composition> {
        compositions(f, &self.rules[f], g, &self.rules[g])
    }

    /// Compositions over all ordered pairs of rules, pairs in lexicographic
    /// order of rule ids.
    pub fn all_compositions(&self) -> Vec<Composition> {
        let n = self.len();
        (0..n).flat_map(|f| (0..n).map(move |g| (f, g))).flat_map(|(f, g)| self.compositions(f, g)).collect()
    }

    pub fn is_trivial(&self, c: &Composition) -> bool {
        self.reduce(&c.value).is_zero()
    }

    pub fn is_gsb(&self) -> GsbOutcome {
        self.is_gsb_where(|_| true)
    }

    /// [`is_gsb`](Self::is_gsb) restricted to the compositions accepted by
    /// `keep`.
    pub fn is_gsb_where<F: Fn(&Composition) -> bool>(&self, keep: F) -> GsbOutcome {
        let mut checked = 0;
        for f in 0..self.len() {
            for g in 0..self.len() {
                for c in self.compositions(f, g) {
                    if !keep(&c) {
                        continue;
                    }
                    checked += 1;
                    let r = self.reduce(&c.value);
                    if !r.is_zero() {
                        return GsbOutcome::Witness { composition: c, remainder: r };
                    }
                }
            }
        }
        GsbOutcome::Basis { checked }
    }

    /// Monomials within `bound` not reducible by any rule, in increasing
    /// order.
    pub fn irr_enumerate(&self, al: &Alphabet, bound: Bound) -> Vec<Monomial> {
        enumerate_monomials(al, bound).into_iter().filter(|m| !self.is_reducible(m)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    /// `lead(f) = a · d^{jbar}(lead(g)) · b`; value `f - a · D^{jbar}(g) · b`.
    InclusionOuter,
    /// `d^{ibar}(lead(f)) = lead(g) · b` with `ibar` nonempty; value
    /// `D^{ibar}(f) - g · b`.
    InclusionDerived,
    /// `lead(f) · b = a · d^{jbar}(lead(g))` with `a, b != 1` and a proper
    /// overlap; value `f · b - a · D^{jbar}(g)`.
    Intersection,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::InclusionOuter => "inclusion_outer",
            CompositionKind::InclusionDerived => "inclusion_derived",
            CompositionKind::Intersection => "intersection",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub f: usize,
    pub g: usize,
    /// The ambiguity word.
    pub w: Monomial,
    pub value: Polynomial,
    pub a: Monomial,
    pub b: Monomial,
    /// Derivative applied to `f`.
    pub ibar: Vec<OperatorId>,
    /// Derivative applied to `g`.
    pub jbar: Vec<OperatorId>,
}

/// All compositions of the monic polynomials `f` and `g`, tagged with the
/// given rule ids. A rule paired with itself skips the full-word inclusion,
/// whose value is zero.
pub fn compositions(f_id: usize, f: &Polynomial, g_id: usize, g: &Polynomial) -> Vec<Composition> {
    let (Some(fl), Some(gl)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut emit = |c: Composition| {
        let key = (c.kind, c.w.clone(), c.a.clone(), c.b.clone(), c.ibar.clone(), c.jbar.clone());
        if seen.insert(key) {
            out.push(c);
        }
    };

    for pos in 0..=fl.len() {
        let Some(jbar) = match_at(fl, pos, gl) else { continue };
        if f_id == g_id && pos == 0 && jbar.is_empty() && gl.len() == fl.len() {
            continue;
        }
        let a = fl.slice(0, pos);
        let b = fl.slice(pos + gl.len(), fl.len());
        let value = f - &derive_poly(g, &jbar).sandwich(&a, &b);
        emit(Composition {
            kind: CompositionKind::InclusionOuter,
            f: f_id,
            g: g_id,
            w: fl.clone(),
            value,
            a,
            b,
            ibar: Vec::new(),
            jbar,
        });
    }

    let (fw, gw) = (fl.letters(), gl.letters());
    if !fw.is_empty() && !gw.is_empty() && gw.len() <= fw.len() && gw[1..] == fw[1..gw.len()] {
        if let Some(ibar) = gw[0].strip_inner(&fw[0]).filter(|i| !i.is_empty()) {
            let ibar = ibar.to_vec();
            let b = fl.slice(gw.len(), fw.len());
            let w = gl.mul(&b);
            let value = &derive_poly(f, &ibar) - &g.sandwich(&Monomial::one(), &b);
            emit(Composition {
                kind: CompositionKind::InclusionDerived,
                f: f_id,
                g: g_id,
                w,
                value,
                a: Monomial::one(),
                b,
                ibar,
                jbar: Vec::new(),
            });
        }
    }

    if !gw.is_empty() {
        for pos in 1..fw.len() {
            let overlap = fw.len() - pos;
            if overlap >= gw.len() {
                continue;
            }
            let Some(jbar) = fw[pos].strip_inner(&gw[0]) else { continue };
            if fw[pos + 1..] != gw[1..overlap] {
                continue;
            }
            let jbar = jbar.to_vec();
            let a = fl.slice(0, pos);
            let b = gl.slice(overlap, gw.len());
            let w = fl.mul(&b);
            let value = &f.sandwich(&Monomial::one(), &b) - &derive_poly(g, &jbar).sandwich(&a, &Monomial::one());
            emit(Composition {
                kind: CompositionKind::Intersection,
                f: f_id,
                g: g_id,
                w,
                value,
                a,
                b,
                ibar: Vec::new(),
                jbar,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GsbOutcome {
    /// Every composition reduced to zero.
    Basis { checked: usize },
    /// The first composition found with a nonzero normal form.
    Witness { composition: Composition, remainder: Polynomial },
}

impl GsbOutcome {
    pub fn is_basis(&self) -> bool {
        matches!(self, GsbOutcome::Basis { .. })
    }
}
