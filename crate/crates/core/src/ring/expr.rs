//! Closed rational forms built from geometric factors.

use serde::{Deserialize, Serialize};

use super::{expand_term, LaurentPoly, RingError, ZetaSeries};

/// The factor `u^-nu T^N / (1 - u^-nu T^N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeometricFactor {
    pub nu: u32,
    #[serde(rename = "N")]
    pub big_n: u32,
}

impl GeometricFactor {
    pub fn new(nu: u32, big_n: u32) -> Result<Self, RingError> {
        if nu == 0 || big_n == 0 {
            return Err(RingError::InvalidFactor { nu, big_n });
        }
        Ok(Self { nu, big_n })
    }
}

/// `coef * prod(factors)`; the factor list is never empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaTerm {
    pub coef: LaurentPoly,
    pub factors: Vec<GeometricFactor>,
}

impl ZetaTerm {
    pub fn new(coef: LaurentPoly, factors: Vec<GeometricFactor>) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptyFactorList);
        }
        Ok(Self { coef, factors })
    }

    pub fn expand(&self, order: u32) -> ZetaSeries {
        if self.coef.is_zero() {
            return ZetaSeries::zero(order);
        }
        let mut acc: Option<ZetaSeries> = None;
        for f in &self.factors {
            let e = expand_term(f.nu, f.big_n, order);
            acc = Some(match acc {
                None => e,
                Some(a) => a.mul(&e),
            });
        }
        acc.expect("factor list is nonempty").scale(&self.coef)
    }
}

/// A finite sum of [`ZetaTerm`]s. Two expressions are compared only through
/// their expansions to a chosen order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaExpr {
    pub terms: Vec<ZetaTerm>,
}

impl ZetaExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, term: ZetaTerm) {
        self.terms.push(term);
    }

    /// Convenience for code that builds terms from already-valid factors.
    pub fn with_term(mut self, coef: LaurentPoly, factors: &[(u32, u32)]) -> Self {
        let factors = factors
            .iter()
            .map(|&(nu, n)| GeometricFactor::new(nu, n).expect("positive factor data"))
            .collect();
        self.terms
            .push(ZetaTerm::new(coef, factors).expect("nonempty factor list"));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn expand(&self, order: u32) -> ZetaSeries {
        self.terms
            .iter()
            .fold(ZetaSeries::zero(order), |acc, t| acc.add(&t.expand(order)))
    }
}
