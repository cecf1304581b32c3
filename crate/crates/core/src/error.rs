use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric argument outside the domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter triple or family violates a precondition.
    #[error("parameter error: {0}")]
    Param(String),

    /// A Schubert index failed validation.
    #[error("invalid Schubert index {index:?}: {reason}")]
    InvalidIndex { index: Vec<i64>, reason: String },

    #[error("codimension mismatch: expected {expected}, found {found}")]
    CodimMismatch { expected: u32, found: u32 },

    #[error("Grassmannian mismatch: G({0}) vs G({1})")]
    SpecMismatch(String, String),

    #[error("dimension balance violated: r*k + |b| = {lhs}, dim X = {dim}")]
    Balance { lhs: u64, dim: u64 },

    /// Slope needs nonzero lambda and delta_0 coefficients of opposite sign.
    #[error("slope undefined: lambda coefficient {lambda}, delta_0 coefficient {delta0}")]
    SlopeUndefined { lambda: String, delta0: String },

    #[error("pole: {0}")]
    Pole(String),

    #[error("linear system: {0}")]
    LinearSystem(String),

    #[error("parse error: {0}")]
    Parse(String),
}
