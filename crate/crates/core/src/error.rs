use thiserror::Error;

use crate::lie::LieViolation;
use crate::syntax::ParseError;
use crate::term::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("rewrite rules must be monic")]
    NotMonic,
    #[error("operation undefined on the empty monomial")]
    EmptyMonomial,
    #[error("no image given for variable #{}", .0 .0)]
    UnboundVariable(Variable),
    #[error("polynomial has a monomial outside the enumeration bound")]
    OutOfBound,
    #[error("invalid Lie structure: {0}")]
    InvalidLie(LieViolation),
    #[error("invalid alphabet: {0}")]
    Alphabet(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
