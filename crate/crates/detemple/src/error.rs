use thiserror::Error;

/// Errors reported by the numeric and exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// Argument outside the supported range of the implementation.
    #[error("range error in {op}: {msg}")]
    Range { op: &'static str, msg: String },

    /// Malformed decimal string.
    #[error("parse error: {0}")]
    Parse(String),

    /// Iterative computation failed to converge to the requested tolerance.
    #[error("convergence failure in {op}: {msg}")]
    Convergence { op: &'static str, msg: String },

    /// Minimization bracket endpoints do not enclose an interior minimum.
    #[error("bracket failure: {0}")]
    Bracket(String),

    /// Finite-difference refinements disagree beyond the safety threshold.
    #[error("step-size failure at x={x}, order {order}: refinements differ by {rel}")]
    StepSize { x: f64, order: usize, rel: f64 },

    /// Bisection predicate did not flip exactly once across the interval.
    #[error("predicate non-monotone on [{lo}, {hi}]: {msg}")]
    NonMonotone { lo: f64, hi: f64, msg: String },

    /// Unknown bound-family name.
    #[error("unknown bound family: {0}")]
    UnknownFamily(String),

    /// Result magnitude below the precision floor of the extended arithmetic.
    #[error("precision floor in {op}: {msg}")]
    PrecisionFloor { op: &'static str, msg: String },
}

impl Error {
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub fn range(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Range { op, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
