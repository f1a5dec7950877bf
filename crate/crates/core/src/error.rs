use thiserror::Error;

use crate::poly::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient or monomial is not divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("division by zero")]
    DivisorZero,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(Var),
    #[error("parts sum to {sum}, expected {n}")]
    PartsMismatch { n: usize, sum: usize },
    #[error("index out of range: n={n}, k={k}")]
    InvalidIndex { n: usize, k: usize },
    #[error("table covers rows up to {n_max}, row {needed} required")]
    TableTooSmall { n_max: usize, needed: usize },
    #[error("beta = 0 is not admissible for the explicit formula; use the table route")]
    BetaZero,
    #[error("explicit formula numerator not divisible at (n={n}, k={k})")]
    InternalNotDivisible { n: usize, k: usize },
    #[error("oracle size n={n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("unknown profile `{0}`")]
    UnknownProfile(String),
    #[error("s={s} outside 0..={max} for k={k}, m={m}")]
    BadRange { k: usize, m: usize, s: usize, max: usize },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
