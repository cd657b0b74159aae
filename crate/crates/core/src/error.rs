use thiserror::Error;

use crate::polyring::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable {0} has no value at the evaluation point")]
    UnassignedVariable(Variable),
    #[error("specialization leaves a non-integer coefficient")]
    NonIntegerCoefficient,
    #[error("expected a univariate polynomial, found {0} variables")]
    NotUnivariate(usize),
    #[error("the zero polynomial has no root report")]
    ZeroPolynomial,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("n = {n} exceeds the bound {bound} for {what}")]
    OutOfBounds { what: String, n: usize, bound: usize },
}
