use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// The variants split into two families: input errors (bad arguments, shape
/// mismatches) and numeric failures (overflow, singular solves, insufficient
/// truncation). [`Error::is_numeric`] tells them apart.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("fractional order must lie in (0, 1], got {0}")]
    InvalidOrder(f64),

    #[error("sequence too short: need at least {needed} entries, got {got}")]
    Length { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    Dimension {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("matrix is singular to working precision (pivot {pivot:.3e} at column {column})")]
    Singular { column: usize, pivot: f64 },

    #[error("coefficient overflow: log-magnitude {log_magnitude:.3} exceeds the floating-point range")]
    Overflow { log_magnitude: f64 },

    #[error("singular quadrature node at z = {re} + {im}i")]
    SingularNode { re: f64, im: f64 },

    #[error("truncation insufficient: tail bound {tail:.3e} is not below {limit:.3e}")]
    TruncationInsufficient { tail: f64, limit: f64 },
}

impl Error {
    /// True for failures of the numerics (as opposed to malformed input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Singular { .. }
                | Error::Overflow { .. }
                | Error::SingularNode { .. }
                | Error::TruncationInsufficient { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
