use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("degree bound {bound} is below the polynomial degree {degree}")]
    DegreeBound { bound: usize, degree: usize },

    #[error("Mobius map has zero determinant")]
    SingularMap,

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("polynomials share a non-constant common factor")]
    NotCoprime,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no irreducible shift found within {0} candidates")]
    ScanCapExceeded(u64),

    #[error("search box of {size} candidates exceeds the limit {limit}")]
    SearchBoxTooLarge { size: f64, limit: f64 },

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by numerics that could not certify a verdict.
    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Error::Indeterminate(_))
    }
}
