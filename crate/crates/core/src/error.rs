use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rings: `{left}` and `{right}`")]
    IncompatibleRings { left: String, right: String },

    #[error("invalid ring specification: {0}")]
    InvalidRing(String),

    #[error("unknown generator `{symbol}` in ring `{ring}`")]
    UnknownGenerator { symbol: String, ring: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("insufficient variables: need at least {needed}, got {got}")]
    InsufficientVariables { needed: u32, got: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown space model `{0}`")]
    UnknownSpace(String),

    #[error("unknown coefficient system `{0}`")]
    UnknownCoefficients(String),

    #[error("unsupported operad level E{0}: only E2 and E4 are modelled")]
    UnsupportedLevel(u32),

    #[error("target not even: nonzero group in odd degree {0}")]
    TargetNotEven(u32),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed coordinate: {0}")]
    MalformedCoordinate(String),
}
