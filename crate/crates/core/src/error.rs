use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero quaternion")]
    DivisionByZero,
    #[error("non-finite value in input")]
    NonFinite,
    #[error("polynomial sides differ")]
    SideMismatch,
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("empty input")]
    EmptyInput,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("invalid degree {0}")]
    InvalidDegree(usize),
    #[error("polynomial has degree 0")]
    DegreeZero,
    #[error("degree {got} is below the required minimum {needed}")]
    DegreeTooSmall { needed: usize, got: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("weights must be strictly positive")]
    NonpositiveWeight,
    #[error("w must be strictly positive")]
    NonpositiveW,
    #[error("negative input where a magnitude was expected")]
    NegativeInput,
    #[error("invalid search interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLengthMismatch { expected: usize, got: usize },
    #[error("companion polynomial coefficient {index} has imaginary residue {residue:e}")]
    ImaginaryResidue { index: usize, residue: f64 },
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
