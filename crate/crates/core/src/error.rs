//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data (bad basis, mismatched
    /// dimensions, generators that do not contain the normals, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The halfspace system does not describe a bounded, full-dimensional,
    /// irredundant polytope.
    #[error("polytope load error: {0}")]
    PolytopeLoad(String),

    /// A point or support lies outside the admissible open set.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sign query could not be certified at the configured precision
    /// schedule; the basis approximations are too coarse.
    #[error("undecided sign: interval still contains zero at width 1e-{width_reached} for a scalar with nonzero coordinates")]
    SignUndecided { width_reached: u32 },

    /// Exact elimination hit a step that would require a product of two
    /// irrational scalars, which the scalar model excludes.
    #[error("exact arithmetic out of reach: {0}")]
    NonLinearArithmetic(String),

    /// The moment flow exceeded its iteration budget.
    #[error("flow did not converge: {0}")]
    NonConvergence(String),

    /// An internal consistency check failed (e.g. a degenerate cut
    /// direction while building a link polytope).
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Config(_) => "invalid_input",
            Error::PolytopeLoad(_) => "invalid_polytope",
            Error::Domain(_) => "outside_domain",
            Error::SignUndecided { .. } => "sign_undecided",
            Error::NonLinearArithmetic(_) => "exact_arithmetic_out_of_reach",
            Error::NonConvergence(_) => "nonconvergence",
            Error::Internal(_) => "internal",
        }
    }
}
