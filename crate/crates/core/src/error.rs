use std::fmt;

use thiserror::Error;

/// Errors raised by the kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable context mismatch: {left} vs {right} variables")]
    ContextMismatch { left: usize, right: usize },
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("exponent overflow while multiplying monomials")]
    DegreeOverflow,
    #[error("monomial {divisor:?} does not divide {dividend:?}")]
    NotDivisible { divisor: Vec<u32>, dividend: Vec<u32> },
    #[error("monomial {0:?} is not an element of the set")]
    NotInSet(Vec<u32>),
    #[error("monomial ordering mismatch between polynomials")]
    OrderingMismatch,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("empty input")]
    EmptyInput,
    #[error("invalid involutive S-polynomial data: lm(f)*w != lm(g)*x")]
    SPolynomialPrecondition,
    #[error("resource limit exceeded: {0}")]
    LimitExceeded(Limit),
}

/// Which resource guard stopped a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    /// An element of total degree above the cap would have been inserted.
    Degree(u32),
    /// The iteration cap was reached.
    Iterations(usize),
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Degree(d) => write!(f, "total degree above {d}"),
            Limit::Iterations(n) => write!(f, "more than {n} iterations"),
        }
    }
}

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn on_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}
