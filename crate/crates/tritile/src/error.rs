use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u64, u64),

    #[error("order {new} is not a multiple of {old}; cannot embed")]
    BadEmbedding { old: u64, new: u64 },

    #[error("element is not real: conjugation does not fix it")]
    NotReal,

    #[error("sign refinement hit the internal {0}-bit precision cap")]
    PrecisionCap(u32),

    #[error("corner equation with p = q does not determine the acute angle")]
    DegenerateCornerEquation,

    #[error("n = {0} is outside the domain of {1}")]
    OutOfDomain(u64, &'static str),

    #[error("n = 4 is excluded: infinitely many right triangles tile the square")]
    SquareExcluded,

    #[error("field of order {order} cannot represent the reference shape with angle {angle}*pi")]
    FieldTooSmall { order: u64, angle: String },

    #[error("precondition failed for n = {n}, k = {k}: gcd(k, 2n) != 1")]
    Eq1NotCoprime { n: u64, k: u64 },

    #[error("precondition failed for n = {n}, k = {k}: frac(k/n) >= 1/2")]
    Eq1FracTooLarge { n: u64, k: u64 },

    #[error("invalid triangle pair: {0}")]
    InvalidPair(String),

    #[error("not a fraction literal: {0:?}")]
    BadFraction(String),

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),

    #[error("cannot certify n = {n}: candidate ({alpha}, {beta})*pi survives every elimination step")]
    Unresolved { n: u64, alpha: String, beta: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
