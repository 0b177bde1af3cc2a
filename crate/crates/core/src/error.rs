use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid mask: {0}")]
    InvalidMask(String),

    #[error("insufficient boundary support: need {needed} valid columns, found {found}")]
    InsufficientSupport { needed: usize, found: usize },

    #[error("degenerate point set")]
    DegeneratePointSet,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// `q` puts mass on a category where `p` has none; the divergence is infinite.
    #[error("out of support: category {category} has q > 0 but p = 0")]
    OutOfSupport { category: usize },

    #[error("environment too dense: placed {placed} of {wanted} obstacles")]
    EnvironmentTooDense { placed: usize, wanted: usize },

    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
