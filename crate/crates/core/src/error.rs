use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input to a basis change: coefficients are not symmetric.
    #[error("Laurent polynomial is not palindromic: {0}")]
    NotPalindromic(String),

    /// Symmetric coefficients, but the support is not centred on q^0.
    #[error("Laurent polynomial is not centred (min exponent {min_exp}, max exponent {max_exp})")]
    NotCentered { min_exp: i64, max_exp: i64 },

    #[error("exact division failed: nonzero remainder")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("divisor must have leading coefficient +1 or -1")]
    NonMonicDivisor,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("{d} is not an odd divisor of {n}")]
    InvalidDivisor { n: u64, d: u64 },

    #[error("{m} and {k} are not coprime")]
    NotCoprime { m: u64, k: u64 },

    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series constant term must be 1 for integral inversion")]
    NonUnitConstant,

    /// An identity that must hold by construction was violated.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("invalid encoding: {0}")]
    Encoding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
