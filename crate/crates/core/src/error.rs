use std::fmt;

use thiserror::Error;

/// Byte range into the text that failed to parse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group values of dimension {left} and {right} cannot be combined")]
    DimensionMismatch { left: usize, right: usize },
    #[error("slope with an infinite endpoint")]
    InfiniteSlope,
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient is not a finite Puiseux expression")]
    NonTerminatingInverse,
    #[error("element of valuation {0} is not a unit")]
    NotAUnit(String),
    #[error("no exact root in the finite Puiseux model: {0}")]
    NotRepresentable(String),
    #[error("elements from contexts {left} and {right} cannot be combined")]
    ContextMismatch { left: String, right: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("expected a monic polynomial, got leading coefficient {0}")]
    NonMonic(String),
    #[error("expansion polynomial must have degree at least one")]
    DegreeZeroQ,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("a nonconstant polynomial is required")]
    ConstantPolynomial,
    #[error("at least one root is required")]
    EmptyRoots,
    #[error("candidate {candidate} has degree {degree}, expected less than {bound}")]
    BadCandidateDegree {
        candidate: String,
        degree: usize,
        bound: usize,
    },
    #[error("at least two factors are required, got {0}")]
    TooFewFactors(usize),
    #[error("{0} is not a root of the defining polynomial")]
    NotARoot(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no point with a finite value")]
    NoFinitePoints,
    #[error("supplied roots do not reconstruct {0}")]
    RootsDontFactor(String),
    #[error("value group of rank {0} cannot be plotted")]
    UnplottableRank(usize),
    #[error("sample {0} does not lie in K[X]")]
    SampleNotInBaseRing(String),
    #[error("degrees {left} and {right} differ")]
    DegreeMismatch { left: usize, right: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("an infinite radius is only meaningful for a ball")]
    InfiniteDelta,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at {span}: {message}")]
    Parse { message: String, span: Span },
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>, span: Span) -> Self {
        Error::Parse {
            message: message.into(),
            span,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
