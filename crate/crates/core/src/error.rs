use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("{0} is not a prime modulus below 2^31")]
    InvalidModulus(u64),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} out of range")]
    OutOfRange(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("point does not lie on the variety")]
    PointNotOnVariety,
    #[error("ideal is not zero-dimensional")]
    PositiveDimensional,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("ring has {0} variables, at most {max} supported", max = crate::polyring::MAX_VARS)]
    TooManyVariables(usize),
    #[error("all forms vanish at the point (base point)")]
    BasePoint,
    #[error("sampling rejected {rejected} of {tried} candidates")]
    DegenerateChain { rejected: usize, tried: usize },
    #[error("inconclusive up to degree {last_degree}")]
    Inconclusive { last_degree: u32 },
    #[error("no zero-dimensional fiber found after {0} attempts")]
    NoFiniteFiber(usize),
    #[error("map forms are not homogeneous of a common degree")]
    UnequalDegrees,
    #[error("saturation by the zero ideal")]
    SaturateByZero,
    #[error("repeated quadratic-transform centers")]
    RepeatedCenters,
    #[error("label `{0}` not carried by the linear system")]
    MissingLabel(String),
    #[error("divisor classes over different bases")]
    BasisMismatch,
    #[error("exact certificate failed: {0}")]
    CertificateFailed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
