//! Virtual Poincaré polynomial calculus on constructible piece descriptions.
//!
//! `beta` is additive over disjoint unions and closed complements and
//! multiplicative over products, so a description built from atoms with
//! known values can be evaluated by structural recursion.

mod count;
mod script;

pub use count::{count_points, verify_polynomial_count, PolyCountOutcome};
pub use script::{blowup_solve, run_script, BetaScript, BlowupRelation, BlowupStep, Definition, ScriptValues, Slot};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{LaurentPoly, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VpolyError {
    #[error("undefined symbol {0:?}")]
    UndefinedSymbol(String),
    #[error("symbol {0:?} defined twice")]
    DuplicateSymbol(String),
    #[error("custom atom {name:?}: beta {beta} has degree {degree:?} but dimension {dim} was declared")]
    CustomDegreeMismatch {
        name: String,
        beta: String,
        degree: Option<i64>,
        dim: i64,
    },
    #[error("difference rejected: {0}")]
    InvalidDifference(String),
    #[error("blow-up relation: {0}")]
    Blowup(String),
    #[error("{0} cannot be point-counted")]
    UnsupportedAtom(String),
    #[error("{q} is not a valid field size here: {reason}")]
    BadFieldSize { q: u64, reason: String },
    #[error("interpolation needs at least {needed} field sizes, got {got}")]
    NeedMoreSamples { needed: usize, got: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Atomic pieces with known `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceAtom {
    /// `R^m`
    Affine(u32),
    /// `(R^*)^k`
    Torus(u32),
    /// `R^m \ {0}`
    PuncturedAffine(u32),
    /// `c` isolated points
    Points(u64),
    /// real projective space `P^k`
    ProjSpace(u32),
    /// the round sphere `S^k`, or any set Nash-isomorphic to it
    Sphere(u32),
    Custom {
        name: String,
        beta: LaurentPoly,
        dim: i64,
    },
}

impl PieceAtom {
    /// The value of `beta` on this atom.
    pub fn beta(&self) -> Result<LaurentPoly, VpolyError> {
        let u = LaurentPoly::u();
        Ok(match self {
            PieceAtom::Affine(m) => u.pow(*m),
            PieceAtom::Torus(k) => LaurentPoly::u_minus_one().pow(*k),
            PieceAtom::PuncturedAffine(m) => &u.pow(*m) - &LaurentPoly::one(),
            PieceAtom::Points(c) => LaurentPoly::monomial(*c, 0),
            PieceAtom::ProjSpace(k) => (0..=i64::from(*k)).map(|e| LaurentPoly::monomial(1, e)).sum(),
            PieceAtom::Sphere(k) => &u.pow(*k) + &LaurentPoly::one(),
            PieceAtom::Custom { name, beta, dim } => {
                if !beta.is_zero() && beta.degree() != Some(*dim) {
                    return Err(VpolyError::CustomDegreeMismatch {
                        name: name.clone(),
                        beta: beta.to_string(),
                        degree: beta.degree(),
                        dim: *dim,
                    });
                }
                beta.clone()
            }
        })
    }

    /// Dimension of the atom; `None` for the empty set.
    pub fn dimension(&self) -> Option<i64> {
        match self {
            PieceAtom::Affine(m) | PieceAtom::Torus(m) | PieceAtom::ProjSpace(m) | PieceAtom::Sphere(m) => {
                Some(i64::from(*m))
            }
            PieceAtom::PuncturedAffine(m) => (*m > 0).then(|| i64::from(*m)),
            PieceAtom::Points(c) => (*c > 0).then_some(0),
            PieceAtom::Custom { beta, dim, .. } => (!beta.is_zero()).then_some(*dim),
        }
    }
}

/// A constructible set assembled from atoms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceExpr {
    Atom(PieceAtom),
    /// A symbol defined earlier in a [`BetaScript`].
    Ref(String),
    Union(Vec<PieceExpr>),
    Product(Vec<PieceExpr>),
    /// `whole \ part`; the caller asserts `part` is a closed subset of `whole`.
    Difference(Box<PieceExpr>, Box<PieceExpr>),
}

impl PieceExpr {
    pub fn atom(a: PieceAtom) -> Self {
        PieceExpr::Atom(a)
    }

    pub fn difference(whole: PieceExpr, part: PieceExpr) -> Self {
        PieceExpr::Difference(Box::new(whole), Box::new(part))
    }

    pub fn custom(name: &str, beta: LaurentPoly, dim: i64) -> Self {
        PieceExpr::Atom(PieceAtom::Custom {
            name: name.to_string(),
            beta,
            dim,
        })
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a PieceAtom>) {
        match self {
            PieceExpr::Atom(a) => out.push(a),
            PieceExpr::Ref(_) => {}
            PieceExpr::Union(xs) | PieceExpr::Product(xs) => xs.iter().for_each(|x| x.collect_atoms(out)),
            PieceExpr::Difference(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// All atoms appearing in the description.
    pub fn atoms(&self) -> Vec<&PieceAtom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }
}

/// Values of previously defined symbols.
pub type Env = BTreeMap<String, LaurentPoly>;

/// `beta` of a description without symbol references.
pub fn beta_expr(e: &PieceExpr) -> Result<LaurentPoly, VpolyError> {
    beta_expr_in(e, &Env::new())
}

/// `beta` of a description whose references are resolved in `env`.
pub fn beta_expr_in(e: &PieceExpr, env: &Env) -> Result<LaurentPoly, VpolyError> {
    match e {
        PieceExpr::Atom(a) => a.beta(),
        PieceExpr::Ref(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| VpolyError::UndefinedSymbol(name.clone())),
        PieceExpr::Union(xs) => xs.iter().map(|x| beta_expr_in(x, env)).sum(),
        PieceExpr::Product(xs) => xs
            .iter()
            .try_fold(LaurentPoly::one(), |acc, x| Ok(&acc * &beta_expr_in(x, env)?)),
        PieceExpr::Difference(whole, part) => {
            let bw = beta_expr_in(whole, env)?;
            let bp = beta_expr_in(part, env)?;
            if bp.degree() > bw.degree() {
                return Err(VpolyError::InvalidDifference(format!(
                    "part ({bp}) has larger degree than whole ({bw})"
                )));
            }
            let out = &bw - &bp;
            if out.degree() > bw.degree() {
                return Err(VpolyError::InvalidDifference(format!(
                    "result {out} exceeds the degree of the whole ({bw})"
                )));
            }
            Ok(out)
        }
    }
}

/// Dimension read off the structure of the description; `None` means empty.
///
/// A difference keeps the dimension of the whole when the part is of
/// strictly smaller dimension; otherwise the dimension is taken from the
/// degree of the evaluated difference.
pub fn structural_dimension(e: &PieceExpr, env: &Env) -> Result<Option<i64>, VpolyError> {
    Ok(match e {
        PieceExpr::Atom(a) => a.dimension(),
        PieceExpr::Ref(name) => env
            .get(name)
            .ok_or_else(|| VpolyError::UndefinedSymbol(name.clone()))?
            .degree(),
        PieceExpr::Union(xs) => {
            let mut best = None;
            for x in xs {
                best = best.max(structural_dimension(x, env)?);
            }
            best
        }
        PieceExpr::Product(xs) => {
            let mut total = Some(0);
            for x in xs {
                total = match (total, structural_dimension(x, env)?) {
                    (Some(a), Some(b)) => Some(a + b),
                    _ => None,
                };
            }
            total
        }
        PieceExpr::Difference(whole, part) => {
            let dw = structural_dimension(whole, env)?;
            let dp = structural_dimension(part, env)?;
            if dp < dw {
                dw
            } else {
                beta_expr_in(e, env)?.degree()
            }
        }
    })
}

/// `beta` evaluated at `u = -1`.
pub fn euler_characteristic(beta: &LaurentPoly) -> Result<num_bigint::BigInt, VpolyError> {
    Ok(beta.eval_int(-1)?)
}
