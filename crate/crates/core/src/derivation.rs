//! Leibniz action of the operators on monomials and polynomials.

use crate::coeff::Coeff;
use crate::error::Error;
use crate::term::{Monomial, OperatorId, Polynomial};

/// `D_j(u)`: zero for `u = 1`, otherwise the sum over letters of `u` with
/// `D_j` applied to that one letter.
pub fn derive_monomial(u: &Monomial, j: OperatorId) -> Polynomial {
    let mut out = Polynomial::zero();
    for (pos, word) in u.letters().iter().enumerate() {
        out.add_term(u.with_letter(pos, word.with_prefix(&[j])), Coeff::one());
    }
    out
}

/// `D^{jbar}(f) = D_{j1}(D_{j2}(... D_{jn}(f)))`: the innermost operator is
/// the last entry of `jbar`.
pub fn derive_poly(f: &Polynomial, jbar: &[OperatorId]) -> Polynomial {
    let mut cur = f.clone();
    for &j in jbar.iter().rev() {
        let mut next = Polynomial::zero();
        for (m, c) in cur.terms() {
            next.add_scaled(c, &derive_monomial(m, j));
        }
        cur = next;
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// Leading monomial of `D^{jbar}(u)`: `jbar` prepended to the operator
/// string of the first letter of `u`.
pub fn leading_derived(u: &Monomial, jbar: &[OperatorId]) -> Result<Monomial, Error> {
    let first = u.letters().first().ok_or(Error::EmptyMonomial)?;
    Ok(u.with_letter(0, first.with_prefix(jbar)))
}
