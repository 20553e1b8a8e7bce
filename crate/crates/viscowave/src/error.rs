//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument lies on the branch cut along the closed negative real axis.
    #[error("branch cut: {0}")]
    BranchCut(String),

    /// A series, continued fraction, quadrature or inversion failed to reach
    /// the requested tolerance within its evaluation budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// The requested quantity is not defined for this creep-compliance family.
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    /// Model parameters rejected at construction.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A caller-side precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested value is infinite (e.g. g(0+) for media with unbounded
    /// attenuation); callers that can represent infinity should use the
    /// extended-value accessors instead.
    #[error("infinite value: {0}")]
    Infinite(String),

    /// CLI / configuration parse failure.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code per the CLI contract: 2 config, 3 numerical, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io(_) => 4,
            _ => 3,
        }
    }
}
