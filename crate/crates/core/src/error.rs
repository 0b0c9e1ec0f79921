use thiserror::Error;

use crate::monomial::MonomialIdeal;

#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent vector has {found} entries, ring has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideals live in different ambient rings")]
    RingMismatch,

    #[error("colon by the zero ideal")]
    ZeroDivisor,

    #[error("infinite colength: {0} is not m-primary")]
    NotMPrimary(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration box of {points} points exceeds the limit of {limit}")]
    BoxTooLarge { points: u128, limit: u128 },

    #[error("Ratliff-Rush chain at n = {index:?} did not stabilize within k_max = {kmax}")]
    Unstable {
        index: Vec<i64>,
        kmax: usize,
        /// The chain C_1, C_2, ... computed before giving up.
        chain: Vec<MonomialIdeal>,
    },

    #[error("polynomial fit failed: {0}")]
    Fit(String),

    #[error("multi-index of length {found} given to a filtration of arity {expected}")]
    Arity { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
