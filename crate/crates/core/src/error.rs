use thiserror::Error;

/// Errors surfaced by constructors, solvers, and verifiers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A solver produced a non-finite iterate. The offending iteration and
    /// the run's seed/step configuration are echoed for reproduction.
    #[error(
        "non-finite iterate at iteration {iter} \
         (seed {seed}, step_coeff {step_coeff}, noise_mag {noise_mag})"
    )]
    NonFinite {
        iter: usize,
        seed: u64,
        step_coeff: f64,
        noise_mag: f64,
    },

    #[error("not stationary: gradient norm {grad_norm:e} exceeds tolerance {tol:e}")]
    NotStationary { grad_norm: f64, tol: f64 },

    /// The aligned difference U - U*R vanished, so there is no saddle
    /// direction to measure.
    #[error("not a saddle candidate: U equals a global factor after alignment")]
    NotASaddleCandidate,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
