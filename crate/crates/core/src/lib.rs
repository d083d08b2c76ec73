//! Exact computation of virtual Poincaré polynomials and of the naive and
//! sign motivic zeta functions of real function germs.
//!
//! Three independent routes produce zeta functions: direct decomposition of
//! truncated arc spaces ([`jets`]), the Denef–Loeser formula over resolution
//! data ([`zeta::dl_naive`], [`zeta::dl_sign`]), and Thom–Sebastiani
//! convolution ([`zeta::ts_convolve`]). The [`classify`] module recovers
//! Brieskorn exponents and signs from the resulting series.

pub mod classify;
pub mod jets;
pub mod ring;
pub mod vpoly;
pub mod zeta;

pub use classify::{classify, BrieskornClass, ClassStatus, SignClass};
pub use jets::{GermSpec, JetError, Variant};
pub use ring::{LaurentPoly, RingError, ZetaExpr, ZetaSeries, DEFAULT_ORDER};
pub use vpoly::{PieceAtom, PieceExpr, VpolyError};
pub use zeta::{ResolutionDatum, ZetaError};
