//! Gröbner-Shirshov bases for free differential algebras.
//!
//! Elements of the free differential algebra are noncommutative polynomials
//! in differential words `D_{i1}...D_{im}(x)` with exact rational
//! coefficients. The crate provides the monomial order, the Leibniz action
//! of the operators, rewriting modulo a set of monic relations, composition
//! (critical pair) checks, bounded completion, a linear-algebra oracle for
//! ideal membership at bounded size, and the sorting relations of
//! differential algebras whose operators satisfy Lie commutation relations.
//!
//! ```
//! use diffgsb::{Alphabet, RewriteSystem};
//!
//! let al = Alphabet::new(["x"], [1, 2, 3]).unwrap();
//! let rel = al.parse("D2 D1 (x) - D1 D2 (x) + D3 (x)").unwrap();
//! let system = RewriteSystem::new(vec![rel]).unwrap();
//! let nf = system.reduce(&al.parse("D3 D2 D1 (x)").unwrap());
//! assert_eq!(al.show(&nf), "D3 D1 D2 (x) - D3 D3 (x)");
//! ```

pub mod alphabet;
pub mod coeff;
pub mod completion;
pub mod derivation;
pub mod error;
pub mod lie;
pub mod oracle;
pub mod ordering;
pub mod rewriting;
pub mod syntax;
pub mod term;

pub use alphabet::Alphabet;
pub use coeff::Coeff;
pub use completion::{complete, interreduce, CompletionLimits, CompletionResult, CompletionStatus};
pub use derivation::{derive_monomial, derive_poly, leading_derived};
pub use error::Error;
pub use lie::{
    enumerate_h, generate_s0, h_normal_form, validate_lie, verify_s0, LieStructure, LieViolation, S0Verification,
};
pub use oracle::{
    build_span, check_statement_ii, check_statement_iii, ideal_member, trace_bound, OracleOutcome, SpanBasis,
    StatementIiiReport,
};
pub use ordering::{cmp_diffword, cmp_monomial, weight, Weight};
pub use rewriting::{
    compositions, enumerate_monomials, Bound, Composition, CompositionKind, GsbOutcome, Occurrence, RewriteSystem,
};
pub use syntax::ParseError;
pub use term::{DiffWord, Monomial, OperatorId, Polynomial, Variable};
