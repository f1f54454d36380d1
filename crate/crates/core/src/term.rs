//! Differential words, monomials of the free monoid on them, and polynomials
//! of the free differential algebra.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Coeff;
use crate::derivation::derive_poly;
use crate::error::Error;

/// A generator, identified by its rank in the declared variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(pub u32);

/// A differential operator, identified by its rank in the declared operator
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorId(pub u32);

/// `D_{i1} D_{i2} ... D_{im}(x)`; operators are stored outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffWord {
    pub var: Variable,
    pub ops: Vec<OperatorId>,
}

impl DiffWord {
    pub fn new(var: Variable, ops: Vec<OperatorId>) -> Self {
        DiffWord { var, ops }
    }

    pub fn bare(var: Variable) -> Self {
        DiffWord { var, ops: Vec::new() }
    }

    /// Number of operators applied.
    pub fn depth(&self) -> usize {
        self.ops.len()
    }

    /// The word with `prefix` applied on the outside.
    pub fn with_prefix(&self, prefix: &[OperatorId]) -> DiffWord {
        let mut ops = Vec::with_capacity(prefix.len() + self.ops.len());
        ops.extend_from_slice(prefix);
        ops.extend_from_slice(&self.ops);
        DiffWord { var: self.var, ops }
    }

    /// If `self = D^{prefix}(inner)`, returns `prefix`.
    pub fn strip_inner(&self, inner: &DiffWord) -> Option<&[OperatorId]> {
        if self.var != inner.var || !self.ops.ends_with(&inner.ops) {
            return None;
        }
        Some(&self.ops[..self.ops.len() - inner.ops.len()])
    }
}

/// An element of the free monoid on differential words. The empty monomial
/// is the identity `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    letters: Vec<DiffWord>,
}

#[allow(clippy::len_without_is_empty)]
impl Monomial {
    pub fn one() -> Self {
        Monomial { letters: Vec::new() }
    }

    pub fn new(letters: Vec<DiffWord>) -> Self {
        Monomial { letters }
    }

    pub fn letter(word: DiffWord) -> Self {
        Monomial { letters: vec![word] }
    }

    pub fn letters(&self) -> &[DiffWord] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<DiffWord> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest operator count carried by a single letter (0 for `1`).
    pub fn max_depth(&self) -> usize {
        self.letters.iter().map(DiffWord::depth).max().unwrap_or(0)
    }

    /// Operator count summed over all letters.
    pub fn total_ops(&self) -> usize {
        self.letters.iter().map(DiffWord::depth).sum()
    }

    /// Free monoid product (concatenation).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Monomial { letters }
    }

    /// `a · self · b`.
    pub fn sandwich(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut letters = Vec::with_capacity(a.len() + self.len() + b.len());
        letters.extend_from_slice(&a.letters);
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&b.letters);
        Monomial { letters }
    }

    /// Letters `[from, to)` as a monomial.
    pub fn slice(&self, from: usize, to: usize) -> Monomial {
        Monomial { letters: self.letters[from..to].to_vec() }
    }

    /// Replaces the letter at `pos`.
    pub fn with_letter(&self, pos: usize, word: DiffWord) -> Monomial {
        let mut letters = self.letters.clone();
        letters[pos] = word;
        Monomial { letters }
    }
}

impl From<DiffWord> for Monomial {
    fn from(word: DiffWord) -> Self {
        Monomial::letter(word)
    }
}

/// A finite linear combination of monomials with nonzero exact coefficients.
///
/// Terms are kept in a map ordered by the monomial order, so the leading
/// term is the last entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::from(Monomial::one())
    }

    pub fn term(coeff: Coeff, mono: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Coeff {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Coeff> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> btree_map::Keys<'_, Monomial, Coeff> {
        self.terms.keys()
    }

    /// Adds `coeff · mono` in place, pruning a cancelled term.
    pub fn add_term(&mut self, mono: Monomial, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, coeff: &Coeff, other: &Polynomial) {
        if coeff.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), coeff * c);
        }
    }

    pub fn scale(&self, coeff: &Coeff) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), coeff * c)).collect() }
    }

    /// `a · self · b`.
    pub fn sandwich(&self, a: &Monomial, b: &Monomial) -> Polynomial {
        // Two-sided multiplication is injective and order preserving, so the
        // result is collected without merging.
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.sandwich(a, b), c.clone())).collect() }
    }

    /// Leading monomial and coefficient.
    pub fn leading_term(&self) -> Result<(&Monomial, &Coeff), Error> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        self.terms.pop_last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading_term(), Ok((_, c)) if c.is_one())
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Result<Polynomial, Error> {
        let (_, lc) = self.leading_term()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.inv().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&inv))
    }

    /// Largest per-letter operator count over all terms.
    pub fn max_depth(&self) -> usize {
        self.terms.keys().map(Monomial::max_depth).max().unwrap_or(0)
    }

    /// Variables occurring anywhere in the polynomial.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vars: Vec<Variable> = self.terms.keys().flat_map(|m| m.letters().iter().map(|w| w.var)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Image under the differential homomorphism sending each variable `x` to
    /// `images[x]`: a letter `D^{i}(x)` maps to `D^{i}(images[x])`, extended
    /// multiplicatively and linearly.
    pub fn substitute(&self, images: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial, Error> {
        let mut letter_cache: BTreeMap<&DiffWord, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (mono, c) in &self.terms {
            let mut prod = Polynomial::term(c.clone(), Monomial::one());
            for word in mono.letters() {
                let image = match letter_cache.get(word) {
                    Some(p) => p.clone(),
                    None => {
                        let base = images.get(&word.var).ok_or(Error::UnboundVariable(word.var))?;
                        let p = derive_poly(base, &word.ops);
                        letter_cache.insert(word, p.clone());
                        p
                    }
                };
                prod = &prod * &image;
                if prod.is_zero() {
                    break;
                }
            }
            out = &out + &prod;
        }
        Ok(out)
    }
}

impl From<Monomial> for Polynomial {
    fn from(mono: Monomial) -> Self {
        Polynomial::term(Coeff::one(), mono)
    }
}

impl From<DiffWord> for Polynomial {
    fn from(word: DiffWord) -> Self {
        Polynomial::from(Monomial::letter(word))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) =
            if self.num_terms() >= rhs.num_terms() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn xy() -> Alphabet {
        // y < x, so x is the larger variable.
        Alphabet::new(["y", "x"], [1, 2, 3]).unwrap()
    }

    #[test]
    fn monomial_concat() {
        let al = xy();
        let d1x = al.monomial("D1 (x)").unwrap();
        let d2yx = al.monomial("D2 (y) * (x)").unwrap();
        assert_eq!(Monomial::one().mul(&d1x), d1x);
        assert_eq!(d1x.mul(&d2yx), al.monomial("D1 (x) * D2 (y) * (x)").unwrap());
        let xx = al.monomial("(x) * (x)").unwrap();
        assert_eq!(xx.mul(&Monomial::one()), xx);
        assert_eq!(d1x.mul(&d2yx).len(), 3);
    }

    #[test]
    fn ring_examples() {
        let al = xy();
        let p = |s: &str| al.parse(s).unwrap();
        assert!((&p("(x)") + &p("-1 * (x)")).is_zero());
        assert_eq!(&p("(x) + (y)") * &p("(x)"), p("(x) * (x) + (y) * (x)"));
        assert_eq!(p("3 * (x)").scale(&Coeff::from_ratio(2, 3)), p("2 * (x)"));
    }

    #[test]
    fn leading_terms() {
        let al = xy();
        let p = |s: &str| al.parse(s).unwrap();
        let f = p("2 * D1 (x) + (x)");
        let (m, c) = f.leading_term().unwrap();
        assert_eq!((m, c), (&al.monomial("D1 (x)").unwrap(), &Coeff::from_int(2)));
        let f = p("(x)");
        assert_eq!(f.leading_term().unwrap().1, &Coeff::one());
        let f = p("(x) * (y) + (y) * (x)");
        assert_eq!(f.leading_term().unwrap().0, &al.monomial("(x) * (y)").unwrap());
        assert_eq!(Polynomial::zero().leading_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn monic() {
        let al = xy();
        let p = |s: &str| al.parse(s).unwrap();
        assert_eq!(p("2 * D1 (x) + 4 * (x)").make_monic().unwrap(), p("D1 (x) + 2 * (x)"));
        assert_eq!(p("(x)").make_monic().unwrap(), p("(x)"));
        assert_eq!(p("-1 * (x) + (y)").make_monic().unwrap(), p("(x) - (y)"));
        assert_eq!(Polynomial::zero().make_monic(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitution() {
        let al = xy();
        let p = |s: &str| al.parse(s).unwrap();
        let x = al.var("x").unwrap();
        let map = |img: &str| BTreeMap::from([(x, p(img))]);
        assert_eq!(p("(x)").substitute(&map("(y)")).unwrap(), p("(y)"));
        assert_eq!(p("D1 (x)").substitute(&map("(y) * (y)")).unwrap(), p("D1 (y) * (y) + (y) * D1 (y)"));
        assert_eq!(
            p("(x) * (x)").substitute(&map("(x) + (y)")).unwrap(),
            p("(x) * (x) + (x) * (y) + (y) * (x) + (y) * (y)")
        );
        let y = al.var("y").unwrap();
        assert_eq!(p("(y)").substitute(&map("(x)")), Err(Error::UnboundVariable(y)));
    }
}
