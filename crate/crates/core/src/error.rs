//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arguments are not coprime: gcd({a}, {b}) = {g}")]
    NotCoprime { a: String, b: String, g: String },

    #[error("cotangent pole: argument {arg} is an integer")]
    Pole { arg: String },

    #[error("argument within pole tolerance of an integer (distance ~ 1e{dist_log10})")]
    NearPole { dist_log10: i64 },

    #[error("value is not rational (conductor {conductor})")]
    NotRational { conductor: u64 },

    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("conductor {conductor} exceeds cap {cap}")]
    ConductorExceeded { conductor: u64, cap: u64 },

    #[error("order sum {sum} is odd")]
    ParityError { sum: u32 },

    #[error("all derivative orders are zero")]
    AllZeroOrders,

    #[error("dimension {d} is odd")]
    OddDimension { d: usize },

    #[error("singular configuration: indices {i} and {j} share a pole")]
    SingularConfiguration { i: usize, j: usize },

    #[error("all shifts are integers")]
    AllIntegerShifts,

    #[error("missing parameters: {0}")]
    MissingParameters(String),

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
