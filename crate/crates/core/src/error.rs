use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A hypergeometric parameter triple hits a zero denominator.
    #[error("parameter domain error: {what} (term index {term})")]
    ParameterDomain { what: String, term: usize },

    /// A point or argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// n = 0 was requested.
    #[error(
        "n must be >= 1: for n = 0 the second solution term behaves like (1-y)^-1 \
         and diverges at y -> 1, so no bound state exists"
    )]
    ZeroLevel,

    /// Generalized coupling too weak for the requested level.
    #[error("no bound state for n = {n} at beta = {beta} (requires n^2 < beta)")]
    NoBoundState { n: u32, beta: f64 },

    /// The lowering operator was applied to the lowest-weight state.
    #[error("lowering operator applied to n = 1 (lowest weight); result is the zero function by convention")]
    LowestWeight,

    /// A size limit was exceeded or required data is missing.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {what} (achieved error estimate {estimate:e})")]
    NumericalFailure { what: String, estimate: f64 },

    /// Invalid grid specification or grid data.
    #[error("invalid grid: {0}")]
    Grid(String),

    /// No sign change found for an eigenvalue bracket.
    #[error("bracket failure: {0}")]
    Bracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;
