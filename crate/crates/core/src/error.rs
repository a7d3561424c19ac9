use thiserror::Error;

/// Errors surfaced by the simulator library.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A NaN showed up in the evolving fields; carries the failing time.
    #[error("solution diverged (non-finite field) at t = {time}")]
    Divergence { time: f64 },
    /// Absolute temperature dropped to or below zero.
    #[error("non-positive temperature at t = {time}")]
    SingularTemperature { time: f64 },
}

pub type Result<T> = std::result::Result<T, SimError>;
