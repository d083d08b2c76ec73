//! Combinatorial resolution data and the Denef–Loeser evaluators.
//!
//! The evaluators trust the data: nothing here checks that the components
//! come from an actual resolution with normal crossings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::ZetaError;
use crate::jets::Sign;
use crate::ring::{GeometricFactor, LaurentPoly, ZetaExpr, ZetaSeries, ZetaTerm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: String,
    /// Multiplicity of `f o sigma` along the component.
    #[serde(rename = "N")]
    pub big_n: u32,
    /// One plus the multiplicity of `jac sigma` along the component.
    pub nu: u32,
    /// Whether the component lies in `sigma^-1(0)`.
    pub over_origin: bool,
}

/// `beta` values of `E_I^0 ∩ sigma^-1(0)` and of its two sign coverings.
/// Missing values are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    #[serde(rename = "I")]
    pub ids: Vec<String>,
    #[serde(default, skip_serializing_if = "LaurentPoly::is_zero")]
    pub beta0: LaurentPoly,
    #[serde(default, skip_serializing_if = "LaurentPoly::is_zero")]
    pub beta_plus: LaurentPoly,
    #[serde(default, skip_serializing_if = "LaurentPoly::is_zero")]
    pub beta_minus: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDatum {
    pub dimension: u32,
    pub components: Vec<Component>,
    #[serde(default)]
    pub strata: Vec<Stratum>,
}

impl ResolutionDatum {
    pub fn from_json(s: &str) -> Result<Self, ZetaError> {
        let r: Self = serde_json::from_str(s).map_err(|e| ZetaError::Json(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("datum serializes")
    }

    pub fn validate(&self) -> Result<(), ZetaError> {
        let bad = |m: String| Err(ZetaError::InvalidDatum(m));
        if self.dimension == 0 {
            return bad("dimension must be positive".into());
        }
        let mut ids = BTreeMap::new();
        for c in &self.components {
            if c.big_n == 0 || c.nu == 0 {
                return bad(format!("component {:?} needs N >= 1 and nu >= 1", c.id));
            }
            if ids.insert(c.id.as_str(), c).is_some() {
                return bad(format!("component id {:?} repeated", c.id));
            }
        }
        if !self.components.iter().any(|c| c.over_origin) {
            return bad("no component lies over the origin".into());
        }
        let mut seen = BTreeSet::new();
        for s in &self.strata {
            if s.ids.is_empty() {
                return bad("stratum with empty index set".into());
            }
            let set: BTreeSet<&str> = s.ids.iter().map(String::as_str).collect();
            if set.len() != s.ids.len() {
                return bad(format!("stratum {:?} repeats a component", s.ids));
            }
            if let Some(id) = set.iter().find(|id| !ids.contains_key(*id)) {
                return Err(ZetaError::UnknownComponent(id.to_string()));
            }
            if !seen.insert(set.clone()) {
                return bad(format!("stratum {:?} listed twice", s.ids));
            }
            let bound = self.dimension as i64 - set.len() as i64;
            if s.beta0.degree().is_some_and(|d| d > bound) {
                return bad(format!(
                    "stratum {:?} has beta0 of degree {} > {bound}",
                    s.ids,
                    s.beta0.degree().unwrap_or_default()
                ));
            }
        }
        Ok(())
    }

    fn factors(&self, s: &Stratum) -> Result<Vec<GeometricFactor>, ZetaError> {
        s.ids
            .iter()
            .map(|id| {
                let c = self
                    .components
                    .iter()
                    .find(|c| &c.id == id)
                    .ok_or_else(|| ZetaError::UnknownComponent(id.clone()))?;
                Ok(GeometricFactor::new(c.nu, c.big_n)?)
            })
            .collect()
    }

    fn build(&self, coef: impl Fn(&Stratum) -> LaurentPoly) -> Result<ZetaExpr, ZetaError> {
        self.validate()?;
        let mut e = ZetaExpr::new();
        for s in &self.strata {
            let c = coef(s);
            if !c.is_zero() {
                e.push(ZetaTerm::new(c, self.factors(s)?)?);
            }
        }
        Ok(e)
    }

    /// `sum_I (u-1)^{|I|} beta0(I) prod_{i in I} u^{-nu_i} T^{N_i} / (1 - u^{-nu_i} T^{N_i})`.
    pub fn naive_expr(&self) -> Result<ZetaExpr, ZetaError> {
        self.build(|s| &LaurentPoly::u_minus_one().pow(s.ids.len() as u32) * &s.beta0)
    }

    /// As [`Self::naive_expr`] with `(u-1)^{|I|-1} beta_±(I)`.
    pub fn sign_expr(&self, sign: Sign) -> Result<ZetaExpr, ZetaError> {
        self.build(|s| {
            let b = match sign {
                Sign::Plus => &s.beta_plus,
                Sign::Minus => &s.beta_minus,
            };
            &LaurentPoly::u_minus_one().pow(s.ids.len() as u32 - 1) * b
        })
    }
}

pub fn dl_naive(r: &ResolutionDatum, order: u32) -> Result<ZetaSeries, ZetaError> {
    if order == 0 {
        return Err(ZetaError::ZeroOrder);
    }
    Ok(r.naive_expr()?.expand(order))
}

pub fn dl_sign(r: &ResolutionDatum, sign: Sign, order: u32) -> Result<ZetaSeries, ZetaError> {
    if order == 0 {
        return Err(ZetaError::ZeroOrder);
    }
    Ok(r.sign_expr(sign)?.expand(order))
}
