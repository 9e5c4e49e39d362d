use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("exponent {0} exceeds the maximum of {max}", max = crate::monomial::MAX_EXPONENT)]
    ExponentOverflow(u64),
    #[error("{0} variables requested, at most {max} are supported", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("leading term of the zero vector is undefined")]
    ZeroVector,
    #[error("terms must have a nonzero coefficient")]
    ZeroCoefficient,
    #[error("component {component} is outside a free module of rank {rank}")]
    ComponentOutOfRange { component: usize, rank: usize },
    #[error("ordering level {level} requested, chain has {available} levels")]
    LevelOutOfRange { level: usize, available: usize },
    #[error("leading monomials of generators {0} and {1} lie in different components")]
    NoPair(usize, usize),
    #[error("no admissible reducer for a term while lifting a leading syzygy term")]
    NoAdmissibleReducer,
    #[error("input is not homogeneous; graded operations are unavailable")]
    NotHomogeneous,
    #[error("input generators do not form a Groebner basis")]
    NotGroebner,
    #[error("invalid AGR parameters: {0}")]
    InvalidAgrSpec(String),
    #[error("apolar ideal generation failed: {0}")]
    DegenerateForm(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by the mathematical content of the input rather than its syntax.
    pub fn is_math_domain(&self) -> bool {
        !matches!(
            self,
            Error::Parse { .. } | Error::TooManyVariables(_) | Error::NotPrime(_)
        )
    }
}
