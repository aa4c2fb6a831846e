use thiserror::Error;

use crate::schwartz::SeminormIndex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature order must be at least 1")]
    ZeroOrder,

    #[error("quadrature order {requested} exceeds the supported maximum {max}")]
    OrderOverflow { requested: usize, max: usize },

    #[error("rule of order {order} cannot project onto degree {degree} (need order >= {needed})")]
    RuleTooSmall {
        order: usize,
        degree: usize,
        needed: usize,
    },

    #[error("projection degree {given} is below the required {required}")]
    InsufficientProjDegree { given: usize, required: usize },

    #[error("empty seminorm index set")]
    EmptyIndexSet,

    #[error("empty sample list")]
    EmptySamples,

    #[error("ball radius must be positive and finite, got {0}")]
    BadRadius(f64),

    #[error("certificate has no bounds")]
    EmptyCertificate,

    #[error("certificate constant for output {out} must be finite and >= 0, got {c}")]
    BadConstant { out: SeminormIndex, c: f64 },

    #[error("operator `{label}` failed the linearity spot check (residual {residual:e})")]
    NonLinear { label: String, residual: f64 },

    #[error("operator `{0}` has no finite coefficient band")]
    UnboundedBandwidth(String),

    #[error("operator `{label}` violated its declared bound {bound}: observed ratio {observed}")]
    BoundViolated {
        label: String,
        bound: f64,
        observed: f64,
    },

    #[error("propagated tail {tail:e} exceeds tolerance {tol:e}; truncate at a higher degree")]
    ToleranceUnachievable { tail: f64, tol: f64 },

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("declared tail must be finite and >= 0, got {0}")]
    BadTail(f64),

    #[error("oracle `{label}` breaks its growth bound at n = {n}: |c_n| = {value:e} > {bound:e}")]
    GrowthViolated {
        label: String,
        n: usize,
        value: f64,
        bound: f64,
    },

    #[error("symbol `{label}` is not of temperate growth: {reason}")]
    NotTemperate { label: String, reason: String },

    #[error("unknown multiplier label `{0}`")]
    UnknownMultiplier(String),

    #[error("unknown distribution label `{0}`")]
    UnknownDistribution(String),

    #[error("invalid document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
