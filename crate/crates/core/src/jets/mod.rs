//! Direct decomposition of the truncated arc sets
//! `chi_n = {gamma in L_n : ord f(gamma) = n}` (and their sign-normalized
//! versions) into pieces whose virtual Poincaré polynomials are known.
//!
//! A jet is a tuple of coordinate polynomials `gamma_i = sum_{j=1..n} a_{i,j} t^j`,
//! so `L_n` has `beta = u^{nd}`.
//!
//! Diagonal germs `sum s_i x_i^{p_i}` are split by the level
//! `m = min_i p_i ord(gamma_i)`. At level `m` the achievers are
//! `D = {i : p_i | m}`, and the leading vector `(a_{i, m/p_i})_{i in D}` is
//! nonzero. When the face polynomial `sum_{i in D} s_i v_i^{p_i}` does not
//! vanish on it, `ord f(gamma) = m`. Otherwise the vector lies in the torus part
//! of the face zero set for its support `S`, `|S| >= 2`, where the face is
//! nonsingular. Each further coefficient of `f(gamma)` is then an affine
//! function of a fresh coefficient with nonzero slope, so the cancellation
//! depth `e = n - m` costs exactly `e` free dimensions.

mod enumerate;
mod germ;
mod tie;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{count_jets, ENUMERATION_CAP};
pub use germ::{DiagonalTerm, GermSpec, Sign};
pub use tie::{face_level_beta, face_zero_beta, level_points, tie_curve_beta, torus_zero_beta, Level};

use crate::ring::{LaurentPoly, ZetaSeries};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum JetError {
    #[error("cannot parse germ: {0}")]
    Parse(String),
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("unsupported: {reason}{}", .n.map(|n| format!(" (n = {n})")).unwrap_or_default())]
    Unsupported { n: Option<u32>, reason: String },
    #[error("jet enumeration over F_{q} with {d} variables and n = {n} needs {size} points (limit {cap})")]
    TooLarge {
        q: u64,
        d: usize,
        n: u32,
        size: String,
        cap: u64,
    },
    #[error("field size {0} must be prime")]
    BadField(u64),
    #[error("n must be positive")]
    ZeroN,
}

impl JetError {
    fn at(self, n: u32) -> Self {
        match self {
            JetError::Unsupported { reason, .. } => JetError::Unsupported { n: Some(n), reason },
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Naive,
    Plus,
    Minus,
}

impl Variant {
    pub fn sign(self) -> Option<Sign> {
        match self {
            Variant::Naive => None,
            Variant::Plus => Some(Sign::Plus),
            Variant::Minus => Some(Sign::Minus),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = JetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Variant::Naive),
            "plus" | "+" => Ok(Variant::Plus),
            "minus" | "-" => Ok(Variant::Minus),
            other => Err(JetError::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

/// State of one coordinate arc in a stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoordinateJet {
    /// Coefficients below `k` vanish and coefficient `k` enters the leading
    /// condition; the coefficients above `k` are free.
    Leading(u32),
    /// The first `j` coefficients vanish and the rest are free. `j >= n` is
    /// the zero jet (order `> n`).
    Vanishing(u32),
}

impl CoordinateJet {
    fn free(self, n: u32) -> u32 {
        match self {
            CoordinateJet::Leading(k) => n - k,
            CoordinateJet::Vanishing(j) => n - j.min(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingCondition {
    /// All `count` leading coefficients are nonzero.
    Torus { count: u32 },
    /// `s * prod a_i^{N_i} = target` on the torus; `sheets` is 0, 1 or 2 copies
    /// of `(R^*)^{count - 1}`.
    SignNormalized { count: u32, sheets: u32 },
    /// The leading vector avoids the face zero set (of the given `beta`).
    FaceNonvanishing {
        face: Vec<DiagonalTerm>,
        zero_set: LaurentPoly,
    },
    /// The face polynomial takes the value `target` on the leading vector.
    FaceLevel {
        face: Vec<DiagonalTerm>,
        target: Sign,
    },
    /// The leading vector lies on the torus part of the face zero set (with
    /// the given `beta`); the next `depth - 1` coefficients of `f(gamma)`
    /// cancel and the last one is nonzero (naive) or equals the target (sign).
    Cancellation {
        face: Vec<DiagonalTerm>,
        tie_set: LaurentPoly,
        depth: u32,
        target: Option<Sign>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JetStratum {
    pub orders: Vec<CoordinateJet>,
    pub leading: LeadingCondition,
    /// `beta` of the leading-condition set, cancellation coefficients included.
    pub leading_beta: LaurentPoly,
    /// Dimension of the leading-condition set, read off the condition itself.
    pub leading_dim: i64,
    pub free_dims: u32,
}

impl JetStratum {
    pub fn contribution(&self) -> LaurentPoly {
        self.leading_beta.shift(self.free_dims as i64)
    }

    pub fn dim(&self) -> i64 {
        self.leading_dim + self.free_dims as i64
    }
}

impl fmt::Display for CoordinateJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateJet::Leading(k) => write!(f, "lead@{k}"),
            CoordinateJet::Vanishing(j) => write!(f, "zero<={j}"),
        }
    }
}

fn monomial_strata(exponents: &[u32], unit: Sign, n: u32, target: Option<Sign>) -> Vec<JetStratum> {
    let active: Vec<usize> = (0..exponents.len()).filter(|&i| exponents[i] > 0).collect();
    let r = active.len() as u32;
    let idle = (exponents.len() as u32 - r) * n;
    let all_even = active.iter().all(|&i| exponents[i] % 2 == 0);
    let sheets = match target {
        None => 1,
        Some(_) if !all_even => 1,
        Some(t) if t == unit => 2,
        Some(_) => 0,
    };
    if sheets == 0 {
        return Vec::new();
    }
    let (leading, leading_beta, leading_dim) = match target {
        None => (
            LeadingCondition::Torus { count: r },
            LaurentPoly::u_minus_one().pow(r),
            r as i64,
        ),
        Some(_) => (
            LeadingCondition::SignNormalized { count: r, sheets },
            LaurentPoly::u_minus_one().pow(r - 1).scale(&sheets.into()),
            r as i64 - 1,
        ),
    };

    let mut out = Vec::new();
    let mut ks = vec![0u32; active.len()];
    fn rec(
        pos: usize,
        rest: u32,
        active: &[usize],
        exps: &[u32],
        ks: &mut Vec<u32>,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if pos == active.len() {
            if rest == 0 {
                emit(ks);
            }
            return;
        }
        let e = exps[active[pos]];
        let mut k = 1;
        while k * e <= rest {
            ks[pos] = k;
            rec(pos + 1, rest - k * e, active, exps, ks, emit);
            k += 1;
        }
    }
    rec(0, n, &active, exponents, &mut ks, &mut |ks| {
        let mut orders = vec![CoordinateJet::Vanishing(0); exponents.len()];
        for (&i, &k) in active.iter().zip(ks) {
            orders[i] = CoordinateJet::Leading(k);
        }
        let free_dims = ks.iter().map(|k| n - k).sum::<u32>() + idle;
        out.push(JetStratum {
            orders,
            leading: leading.clone(),
            leading_beta: leading_beta.clone(),
            leading_dim,
            free_dims,
        });
    });
    out
}

fn diagonal_strata(terms: &[DiagonalTerm], n: u32, target: Option<Sign>) -> Result<Vec<JetStratum>, JetError> {
    let d = terms.len();
    let mut out = Vec::new();
    for m in 1..=n {
        let in_d: Vec<bool> = terms.iter().map(|t| m % t.exp == 0).collect();
        if !in_d.contains(&true) {
            continue;
        }
        let face_of = |mask: &[bool]| -> Vec<DiagonalTerm> {
            terms.iter().zip(mask).filter(|(_, &b)| b).map(|(t, _)| *t).collect()
        };
        if m == n {
            let face = face_of(&in_d);
            let orders = (0..d)
                .map(|i| {
                    if in_d[i] {
                        CoordinateJet::Leading(m / terms[i].exp)
                    } else {
                        CoordinateJet::Vanishing(m / terms[i].exp)
                    }
                })
                .collect::<Vec<_>>();
            let free_dims = orders.iter().map(|o| o.free(n)).sum();
            let (leading, leading_beta, leading_dim) = match target {
                None => {
                    let zero_set = face_zero_beta(&face)?;
                    let beta = &LaurentPoly::u().pow(face.len() as u32) - &zero_set;
                    (
                        LeadingCondition::FaceNonvanishing { face: face.clone(), zero_set },
                        beta,
                        face.len() as i64,
                    )
                }
                Some(t) => {
                    let beta = face_level_beta(&face, t)?;
                    if beta.is_zero() {
                        continue;
                    }
                    (
                        LeadingCondition::FaceLevel { face: face.clone(), target: t },
                        beta,
                        face.len() as i64 - 1,
                    )
                }
            };
            out.push(JetStratum {
                orders,
                leading,
                leading_beta,
                leading_dim,
                free_dims,
            });
            continue;
        }
        let depth = n - m;
        // supports S of the leading vector, |S| >= 2, inside D
        for mask in 0u32..(1 << d) {
            let in_s: Vec<bool> = (0..d).map(|i| mask & (1 << i) != 0).collect();
            if in_s.iter().filter(|&&b| b).count() < 2 || (0..d).any(|i| in_s[i] && !in_d[i]) {
                continue;
            }
            let face = face_of(&in_s);
            let tie_set = torus_zero_beta(&face)?;
            if tie_set.is_zero() {
                continue;
            }
            let orders = (0..d)
                .map(|i| {
                    if in_s[i] {
                        CoordinateJet::Leading(m / terms[i].exp)
                    } else {
                        CoordinateJet::Vanishing(m / terms[i].exp)
                    }
                })
                .collect::<Vec<_>>();
            let free_dims = orders.iter().map(|o| o.free(n)).sum::<u32>() - depth;
            let tie_dim = face.len() as i64 - 1;
            let (leading_beta, leading_dim) = match target {
                None => (&tie_set * &LaurentPoly::u_minus_one(), tie_dim + 1),
                Some(_) => (tie_set.clone(), tie_dim),
            };
            out.push(JetStratum {
                orders,
                leading: LeadingCondition::Cancellation {
                    face,
                    tie_set,
                    depth,
                    target,
                },
                leading_beta,
                leading_dim,
                free_dims,
            });
        }
    }
    Ok(out)
}

/// Pairwise-disjoint strata covering `chi_n` (naive) or `chi_n^±`.
pub fn decompose(g: &GermSpec, n: u32, variant: Variant) -> Result<Vec<JetStratum>, JetError> {
    if n == 0 {
        return Err(JetError::ZeroN);
    }
    match g {
        GermSpec::Monomial {
            exponents,
            unit_sign,
        } => Ok(monomial_strata(exponents, *unit_sign, n, variant.sign())),
        GermSpec::Diagonal { terms } => diagonal_strata(terms, n, variant.sign()).map_err(|e| e.at(n)),
    }
}

pub fn chi_decompose(g: &GermSpec, n: u32) -> Result<Vec<JetStratum>, JetError> {
    decompose(g, n, Variant::Naive)
}

fn total(strata: &[JetStratum]) -> LaurentPoly {
    strata.iter().map(JetStratum::contribution).sum()
}

/// `beta(chi_n)`.
pub fn chi_beta(g: &GermSpec, n: u32) -> Result<LaurentPoly, JetError> {
    Ok(total(&chi_decompose(g, n)?))
}

/// `beta(chi_n^±)`.
pub fn chi_beta_sign(g: &GermSpec, n: u32, sign: Sign) -> Result<LaurentPoly, JetError> {
    let v = match sign {
        Sign::Plus => Variant::Plus,
        Sign::Minus => Variant::Minus,
    };
    Ok(total(&decompose(g, n, v)?))
}

/// `sum_{n=1..order} beta(chi_n) u^{-nd} T^n`, or the sign variant.
pub fn zeta_direct(g: &GermSpec, order: u32, variant: Variant) -> Result<ZetaSeries, JetError> {
    if order == 0 {
        return Err(JetError::ZeroN);
    }
    let d = g.dim() as i64;
    let mut z = ZetaSeries::zero(order);
    for n in 1..=order {
        let beta = total(&decompose(g, n, variant)?);
        z.set(n, beta.shift(-(n as i64) * d));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ZetaExpr;
    use proptest::prelude::*;

    fn germ(s: &str) -> GermSpec {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn single_power_strata() {
        let s = chi_decompose(&germ("x^3"), 6).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].orders, vec![CoordinateJet::Leading(2)]);
        assert_eq!(s[0].free_dims, 4);
        assert_eq!(s[0].contribution(), poly("u^5-u^4"));

        assert!(chi_decompose(&germ("x^2"), 3).unwrap().is_empty());
        assert!(chi_beta(&germ("x^2"), 3).unwrap().is_zero());
    }

    #[test]
    fn single_power_values() {
        for k in 1..6u32 {
            for m in 1..4u32 {
                let n = m * k;
                let expect = LaurentPoly::u_minus_one().shift((n - m) as i64);
                assert_eq!(chi_beta(&germ(&format!("x^{k}")), n).unwrap(), expect);
                let plus = chi_beta_sign(&germ(&format!("x^{k}")), n, Sign::Plus).unwrap();
                let minus = chi_beta_sign(&germ(&format!("x^{k}")), n, Sign::Minus).unwrap();
                if k % 2 == 0 {
                    assert_eq!(plus, LaurentPoly::monomial(2, (n - m) as i64));
                    assert!(minus.is_zero());
                } else {
                    assert_eq!(plus, LaurentPoly::monomial(1, (n - m) as i64));
                    assert_eq!(minus, plus);
                }
            }
        }
    }

    #[test]
    fn sphere_germ_strata() {
        let g = germ("x^2+y^2+z^2");
        let s = chi_decompose(&g, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].free_dims, 3);
        assert_eq!(s[0].contribution(), poly("u^6-u^3"));
        // f_{p,k} = x^p + y^{kp} + z^{kp}: beta(chi_{pmk}) u^{-3n} = (u^3-1) u^{-mk-2m}
        for (p, k) in [(2u32, 1u32), (2, 2), (4, 1), (2, 3)] {
            let g = germ(&format!("x^{p}+y^{}+z^{}", k * p, k * p));
            for m in 1..3u32 {
                let n = p * m * k;
                let got = chi_beta(&g, n).unwrap();
                let want = poly("u^3-1").shift(3 * n as i64 - (m * k + 2 * m) as i64);
                assert_eq!(got, want, "p={p} k={k} m={m}");
            }
        }
    }

    #[test]
    fn cancelling_cubes() {
        let g = germ("x^3-y^3");
        assert_eq!(chi_beta(&g, 3).unwrap(), poly("u^6-u^5"));
        // n = 4: leading pair on the diagonal a1 = b1 != 0, one cancellation step
        let s = chi_decompose(&g, 4).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].leading_beta, poly("u^2-2*u+1"));
        assert_eq!(s[0].free_dims, 5);
    }

    #[test]
    fn sum_of_squares_matches_closed_forms() {
        let order = 12;
        let z = zeta_direct(&germ("x^2+y^2"), order, Variant::Naive).unwrap();
        let want = ZetaExpr::new()
            .with_term(poly("u^2-1"), &[(2, 2)])
            .expand(order);
        assert_eq!(z, want);
        let zp = zeta_direct(&germ("x^2+y^2"), order, Variant::Plus).unwrap();
        let want = ZetaExpr::new().with_term(poly("u+1"), &[(2, 2)]).expand(order);
        assert_eq!(zp, want);
        assert!(zeta_direct(&germ("x^2+y^2"), order, Variant::Minus).unwrap().is_zero());
    }

    #[test]
    fn mixed_parity_pair_matches_closed_form() {
        // x^2 + y^4: naive zeta from the exceptional-divisor data
        let order = 16;
        let z = zeta_direct(&germ("x^2+y^4"), order, Variant::Naive).unwrap();
        let u1 = LaurentPoly::u_minus_one();
        let want = ZetaExpr::new()
            .with_term(u1.shift(1), &[(2, 2)])
            .with_term(u1.shift(1), &[(3, 4)])
            .with_term(&u1 * &u1, &[(2, 2), (3, 4)])
            .expand(order);
        assert_eq!(z, want);
    }

    #[test]
    fn three_way_indefinite_tie_is_unsupported() {
        let err = zeta_direct(&germ("x^3-y^3+z^3"), 9, Variant::Naive).unwrap_err();
        assert!(matches!(err, JetError::Unsupported { n: Some(3), .. }), "{err}");
        assert!(err.to_string().contains("indefinite three-way tie"));
        // levels below the first triple tie are fine
        assert!(chi_beta(&germ("x^3-y^3+z^3"), 2).unwrap().is_zero());
    }

    #[test]
    fn two_term_tie_inside_three_variables() {
        // the tie between y^4 and -z^4 is resolved with x forced to higher order
        let g = germ("x^3+y^4-z^4");
        assert!(zeta_direct(&g, 12, Variant::Naive).is_err());
        let g = germ("x^5+y^2-z^2");
        let z = zeta_direct(&g, 9, Variant::Naive).unwrap();
        assert!(!z.coeff(2).is_zero());
    }

    #[test]
    fn fukui_support() {
        for k in 1..7u32 {
            let z = zeta_direct(&germ(&format!("x^{k}")), 30, Variant::Naive).unwrap();
            for n in 1..=30 {
                assert_eq!(z.coeff(n).is_zero(), n % k != 0, "k={k} n={n}");
            }
        }
    }

    fn arb_germ() -> impl Strategy<Value = GermSpec> {
        let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
        let diag = prop::collection::vec((sign.clone(), 1u32..7), 1..3).prop_map(|ts| {
            GermSpec::diagonal(ts.into_iter().map(|(sign, exp)| DiagonalTerm { sign, exp }).collect()).unwrap()
        });
        let triple_even = prop::collection::vec(1u32..4, 3).prop_map(|es| {
            GermSpec::diagonal(es.into_iter().map(|e| DiagonalTerm { sign: Sign::Plus, exp: 2 * e }).collect()).unwrap()
        });
        let mono = (prop::collection::vec(0u32..4, 1..4), sign)
            .prop_filter("nonzero", |(es, _)| es.iter().any(|&e| e > 0))
            .prop_map(|(es, s)| GermSpec::monomial(es, s).unwrap());
        prop_oneof![diag, triple_even, mono]
    }

    proptest! {
        #[test]
        fn degree_is_stratum_dimension(g in arb_germ(), n in 1u32..13) {
            let strata = chi_decompose(&g, n).unwrap();
            let beta = chi_beta(&g, n).unwrap();
            let dim = strata.iter().map(JetStratum::dim).max();
            prop_assert_eq!(beta.degree(), dim);
            for s in &strata {
                prop_assert_eq!(s.leading_beta.degree(), Some(s.leading_dim));
            }
        }

        #[test]
        fn sign_parts_are_bounded_by_naive(g in arb_germ(), n in 1u32..13) {
            let naive = chi_beta(&g, n).unwrap();
            let plus = chi_beta_sign(&g, n, Sign::Plus).unwrap();
            let minus = chi_beta_sign(&g, n, Sign::Minus).unwrap();
            if naive.is_zero() {
                prop_assert!(plus.is_zero() && minus.is_zero());
            } else {
                let both = &plus + &minus;
                prop_assert!(both.degree().unwrap_or(i64::MIN) <= naive.degree().unwrap());
            }
        }

        #[test]
        fn negation_swaps_sign_parts(g in arb_germ(), n in 1u32..10) {
            prop_assert_eq!(chi_beta_sign(&g, n, Sign::Plus).unwrap(), chi_beta_sign(&g.negated(), n, Sign::Minus).unwrap());
            prop_assert_eq!(chi_beta(&g, n).unwrap(), chi_beta(&g.negated(), n).unwrap());
        }
    }
}
