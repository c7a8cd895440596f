use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension {0} is outside the supported range {1}")]
    DimensionOutOfRange(usize, &'static str),
    #[error("point {0} lies outside {1}")]
    OutsideDomain(String, &'static str),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("invalid parameter: {0}")]
    InvalidDomain(String),
    #[error("region has zero measure")]
    ZeroMeasureRegion,
    #[error("color classes do not partition the cube: {0}")]
    PartitionViolation(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("coloring is not SLKKM: {0}")]
    NotSlkkm(String),
    #[error("family does not cover the cube; uncovered point {0}")]
    NotACover(String),
    #[error("face {face} is not covered by its vertices' members; uncovered point {witness}")]
    FaceCoverage { face: String, witness: String },
    #[error("point set is not proximate: face {face} has uncovered point {witness}")]
    NotProximate { face: String, witness: String },
    /// An internal consistency check failed. This signals a defect in the
    /// implementation, never a property of the input.
    #[error("internal assertion failed: {0}")]
    Assertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
