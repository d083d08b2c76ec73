//! Exact arithmetic in `Z[u, u^-1]` and in truncated `Z[u, u^-1][[T]]`.

mod expr;
mod laurent;
mod series;

pub use expr::{GeometricFactor, ZetaExpr, ZetaTerm};
pub use laurent::LaurentPoly;
pub use series::{expand_term, SeriesEntry, ZetaSeries, DEFAULT_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("evaluation at u = 0 of a polynomial with negative exponents")]
    EvalAtZero,
    #[error("exponent does not fit in a machine integer")]
    ExponentOverflow,
    #[error("value {0} is not an integer")]
    NonIntegralValue(String),
    #[error("truncation order must be positive")]
    ZeroOrder,
    #[error("coefficient index {index} outside 1..={order}")]
    IndexOutOfRange { index: u32, order: u32 },
    #[error("geometric factor needs nu >= 1 and N >= 1 (got nu={nu}, N={big_n})")]
    InvalidFactor { nu: u32, big_n: u32 },
    #[error("a zeta term needs at least one geometric factor")]
    EmptyFactorList,
}
