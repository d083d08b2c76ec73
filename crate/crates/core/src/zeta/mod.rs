//! Zeta functions from resolution data, closed forms, Thom–Sebastiani
//! convolution and comparison of invariants.

mod catalogue;
mod compare;
mod datum;
mod ts;

use thiserror::Error;

pub use catalogue::{closed_form, monomial_datum, pair_datum, x2_y4_datum, ClosedForm};
pub use compare::{compare_invariants, Comparison, Invariants};
pub use datum::{dl_naive, dl_sign, Component, ResolutionDatum, Stratum};
pub use ts::{tail_sums, ts_convolve, TsOutput, SAME_SIGN_ASSUMPTION};

use crate::jets::JetError;
use crate::ring::RingError;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ZetaError {
    #[error("invalid resolution datum: {0}")]
    InvalidDatum(String),
    #[error("stratum refers to unknown component {0:?}")]
    UnknownComponent(String),
    #[error("cannot read resolution datum: {0}")]
    Json(String),
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("truncation order must be positive")]
    ZeroOrder,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Jet(#[from] JetError),
}
