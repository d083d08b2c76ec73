//! Resolution data and closed rational forms for the germ families whose
//! resolutions are known by hand.

use super::datum::{Component, ResolutionDatum, Stratum};
use super::ZetaError;
use crate::jets::{GermSpec, Sign};
use crate::ring::{LaurentPoly, ZetaExpr};

fn comp(id: &str, big_n: u32, nu: u32, over_origin: bool) -> Component {
    Component {
        id: id.into(),
        big_n,
        nu,
        over_origin,
    }
}

fn stratum(ids: &[&str], beta0: &str, beta_plus: &str, beta_minus: &str) -> Stratum {
    let p = |s: &str| s.parse::<LaurentPoly>().expect("catalogue polynomial");
    Stratum {
        ids: ids.iter().map(|s| s.to_string()).collect(),
        beta0: p(beta0),
        beta_plus: p(beta_plus),
        beta_minus: p(beta_minus),
    }
}

/// `x^k + y^k` after one blow-up of the origin. For odd `k` the strict
/// transform meets the exceptional line in one point.
pub fn pair_datum(k: u32) -> ResolutionDatum {
    assert!(k >= 2, "pair datum needs k >= 2");
    if k % 2 == 0 {
        ResolutionDatum {
            dimension: 2,
            components: vec![comp("E1", k, 2, true)],
            strata: vec![stratum(&["E1"], "u+1", "u+1", "0")],
        }
    } else {
        ResolutionDatum {
            dimension: 2,
            components: vec![comp("E1", k, 2, true), comp("S", 1, 1, false)],
            strata: vec![
                stratum(&["E1"], "u", "u", "u"),
                stratum(&["E1", "S"], "1", "1", "1"),
            ],
        }
    }
}

/// `x^2 + y^4` after two blow-ups.
///
/// Over `E1^0` (a line) the equation `t^2 = 1/unit` has two real solutions
/// everywhere; over `E2^0` (a line minus a point) the unit changes sign
/// across the removed point, so exactly one of its two halves is covered
/// twice.
pub fn x2_y4_datum() -> ResolutionDatum {
    ResolutionDatum {
        dimension: 2,
        components: vec![comp("E1", 2, 2, true), comp("E2", 4, 3, true)],
        strata: vec![
            stratum(&["E1"], "u", "2*u", "0"),
            stratum(&["E2"], "u", "u-1", "0"),
            stratum(&["E1", "E2"], "1", "2", "0"),
        ],
    }
}

/// Identity resolution of `unit * prod x_i^{N_i}`: the coordinate
/// hyperplanes with `N_i > 0` and the origin as the only stratum over 0.
pub fn monomial_datum(exponents: &[u32], unit: Sign) -> ResolutionDatum {
    let active: Vec<(String, u32)> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (format!("H{}", i + 1), e))
        .collect();
    let all_even = active.iter().all(|(_, e)| e % 2 == 0);
    let sheets = |s: Sign| match () {
        _ if !all_even => "1",
        _ if s == unit => "2",
        _ => "0",
    };
    let ids: Vec<&str> = active.iter().map(|(id, _)| id.as_str()).collect();
    // components through the origin fiber only; the flag is never evaluated
    ResolutionDatum {
        dimension: exponents.len() as u32,
        components: active.iter().map(|(id, e)| comp(id, *e, 1, true)).collect(),
        strata: vec![stratum(&ids, "1", sheets(Sign::Plus), sheets(Sign::Minus))],
    }
}

/// Naive and sign zeta functions as rational expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub naive: ZetaExpr,
    pub plus: ZetaExpr,
    pub minus: ZetaExpr,
}

impl ClosedForm {
    pub fn get(&self, variant: crate::jets::Variant) -> &ZetaExpr {
        use crate::jets::Variant;
        match variant {
            Variant::Naive => &self.naive,
            Variant::Plus => &self.plus,
            Variant::Minus => &self.minus,
        }
    }
}

/// Closed forms for `±x^k`, normal-crossing monomials and `x^k ± y^k`
/// (odd `k`, or even `k` with equal signs).
pub fn closed_form(g: &GermSpec) -> Result<ClosedForm, ZetaError> {
    let from = |r: ResolutionDatum| -> Result<ClosedForm, ZetaError> {
        Ok(ClosedForm {
            naive: r.naive_expr()?,
            plus: r.sign_expr(Sign::Plus)?,
            minus: r.sign_expr(Sign::Minus)?,
        })
    };
    match g {
        GermSpec::Monomial {
            exponents,
            unit_sign,
        } => from(monomial_datum(exponents, *unit_sign)),
        GermSpec::Diagonal { terms } => match terms.as_slice() {
            [t] => from(monomial_datum(&[t.exp], t.sign)),
            [a, b] if a.exp == b.exp && a.exp >= 2 => {
                let k = a.exp;
                if k % 2 == 1 {
                    return from(pair_datum(k));
                }
                if a.sign != b.sign {
                    return Err(ZetaError::Unsupported(format!("{g} has no closed form")));
                }
                let r = pair_datum(k);
                let mut form = from(r)?;
                if a.sign == Sign::Minus {
                    std::mem::swap(&mut form.plus, &mut form.minus);
                }
                Ok(form)
            }
            _ => Err(ZetaError::Unsupported(format!("{g} has no closed form"))),
        },
    }
}
