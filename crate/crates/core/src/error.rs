use crate::Int;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `ab+1` is not a perfect square, so `(a, b)` has no regular completion.
    #[error("{a}*{b}+1 is not a perfect square")]
    NotDiophantinePair { a: Int, b: Int },

    /// A transcribed polynomial evaluated to a non-integer. Only possible if
    /// the point is off the conic or a coefficient table is corrupt.
    #[error("polynomial `{poly}` is not integral at ({x}, {y})")]
    NonIntegral { poly: &'static str, x: Int, y: Int },

    /// Two presentations of the same family value disagree.
    #[error("family values inconsistent at ({x}, {y}): {detail}")]
    Inconsistent { x: Int, y: Int, detail: String },

    /// `A_n² + 4` does not divide `r² − 1` for the companion construction.
    #[error("companion construction failed at n={n}: a={a} does not divide r^2-1")]
    CompanionDivisibility { n: i64, a: Int },

    /// The brute-force oracle refuses bounds where it stops being obviously correct.
    #[error("brute-force oracle is capped at bound {cap}, got {bound}")]
    OracleCap { bound: u64, cap: u64 },

    /// Malformed textual input (decimal integers, JSON records).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
