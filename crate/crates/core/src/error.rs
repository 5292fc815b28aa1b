use thiserror::Error;

/// Errors raised by state, measurement and bound computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),

    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),

    #[error("label collision: `{0}` appears on both sides")]
    LabelCollision(String),

    #[error("label sets overlap on `{0}`")]
    OverlappingLabels(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A state or operator failed one of its defining invariants. The first
    /// field names the invariant (`hermitian`, `trace`, `positivity`, ...).
    #[error("invariant `{invariant}` violated: {detail}")]
    Invariant { invariant: &'static str, detail: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("at least {required} measurements are required, got {found}")]
    TooFewMeasurements { required: usize, found: usize },

    #[error("missing reduced state: variant `state` needs rho_A")]
    MissingState,

    #[error("search did not converge within {0} iterations")]
    NoConvergence(usize),

    /// The majorization admixture term is only certified for mutually unbiased
    /// families in strict mode.
    #[error("admixture term unresolved for non-MUB family in strict mode")]
    AdmixtureUnresolved,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant { invariant, detail: detail.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
