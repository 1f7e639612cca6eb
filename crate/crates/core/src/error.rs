//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("mismatched level: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("mismatched prime: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("not p-integral: denominator {den} is divisible by p = {p}")]
    NotPIntegral { p: u64, den: String },
    #[error("non-unit: {0} is divisible by p = {1}")]
    NonUnit(i64, u64),
    #[error("matrix determinant {det} is not invertible mod {n}")]
    SingularMatrix { det: i64, n: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported index pair (k, r) = ({k}, {r})")]
    UnsupportedIndices { k: i64, r: i64 },
    #[error("not absolutely convergent: need weight >= 2, got {0}")]
    NotConvergent(u32),
    #[error("insufficient p-divisibility in slot {slot}: needed p^{need}, valuation {got}")]
    InsufficientDivisibility { slot: usize, need: u32, got: u32 },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
