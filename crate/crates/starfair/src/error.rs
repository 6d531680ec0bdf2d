use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes do not conform or exceed the configured size limits.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An operation's precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A numeric argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The conic solver could not produce a usable solution.
    #[error("solver failure: {0}")]
    Solver(String),

    /// Experiment configuration is malformed.
    #[error("config error: {0}")]
    Config(String),

    /// An oracle was asked for more evaluations than its budget allows.
    #[error("evaluation budget exceeded: {0}")]
    Budget(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
