//! Recovery of `±x^p ± y^q` (`2 <= p <= q`) from its naive and sign zeta
//! functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::jets::{zeta_direct, GermSpec, JetError, Variant};
use crate::ring::{expand_term, LaurentPoly, ZetaSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Plus,
    Minus,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    Determined,
    /// `p` odd and `q = kp` with `k` even: the sign of `y^q` is not read off
    /// the invariants.
    OpenCase,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrieskornClass {
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub eps_p: SignClass,
    pub eps_q: SignClass,
    pub status: ClassStatus,
    pub notes: Vec<String>,
}

impl BrieskornClass {
    fn inconsistent(p: Option<u32>, q: Option<u32>, note: String) -> Self {
        Self {
            p,
            q,
            eps_p: SignClass::Undetermined,
            eps_q: SignClass::Undetermined,
            status: ClassStatus::Inconsistent,
            notes: vec![note],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("class serializes")
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignClass::Plus => "plus",
            SignClass::Minus => "minus",
            SignClass::Undetermined => "undetermined",
        })
    }
}

impl fmt::Display for BrieskornClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| v.map_or("?".to_string(), |x| x.to_string());
        let status = match self.status {
            ClassStatus::Determined => "determined",
            ClassStatus::OpenCase => "open_case",
            ClassStatus::Inconsistent => "inconsistent",
        };
        writeln!(
            f,
            "p = {}, q = {}, eps_p = {}, eps_q = {}, status = {status}",
            show(self.p),
            show(self.q),
            self.eps_p,
            self.eps_q
        )?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("all coefficients vanish up to order {0}")]
    AllZero(u32),
    #[error("series agrees with the one of x^{p} up to order {order}; truncation too small")]
    NoDeparture { p: u32, order: u32 },
}

/// Index of the first nonzero coefficient.
pub fn recover_p(z: &ZetaSeries) -> Result<u32, ClassifyError> {
    z.support().first().copied().ok_or(ClassifyError::AllZero(z.order()))
}

/// Naive zeta of `x^p`, which is also the one of `x^p` in two variables.
fn single_power_series(p: u32, order: u32) -> ZetaSeries {
    expand_term(1, p, order).scale(&LaurentPoly::u_minus_one())
}

/// First index `l` where `z` departs from the zeta of `x^p`, and `q`.
pub fn recover_q_with_departure(z: &ZetaSeries, p: u32) -> Result<(u32, u32), ClassifyError> {
    let reference = single_power_series(p, z.order());
    let l = z.first_difference(&reference).ok_or(ClassifyError::NoDeparture {
        p,
        order: z.order(),
    })?;
    let shifted_tie = p % 2 == 1 && (l - 1) % p == 0 && !z.coeff(l).is_u_minus_one_times_monomial();
    Ok((l, if shifted_tie { l - 1 } else { l }))
}

pub fn recover_q(z: &ZetaSeries, p: u32) -> Result<u32, ClassifyError> {
    recover_q_with_departure(z, p).map(|(_, q)| q)
}

/// Signs of the two terms. An odd exponent's sign is never determined, nor
/// is the sign of `y^q` when `q` is an even multiple of an odd `p`.
pub fn recover_signs(zplus: &ZetaSeries, zminus: &ZetaSeries, p: u32, q: u32) -> (SignClass, SignClass) {
    let eps_p = if p % 2 == 1 {
        SignClass::Undetermined
    } else if zplus.coeff(p).is_zero() {
        SignClass::Minus
    } else {
        SignClass::Plus
    };
    if q % 2 == 1 || (p % 2 == 1 && q % p == 0) {
        return (eps_p, SignClass::Undetermined);
    }
    // the coefficient at q of the series of sign opposite to eps_p (plus for
    // odd p) vanishes exactly when the two signs agree
    let (probe, reference) = match eps_p {
        SignClass::Minus => (zplus, SignClass::Minus),
        _ => (zminus, SignClass::Plus),
    };
    let eps_q = if probe.coeff(q).is_zero() {
        reference
    } else {
        match reference {
            SignClass::Plus => SignClass::Minus,
            _ => SignClass::Plus,
        }
    };
    (eps_p, eps_q)
}

/// Full classification. Requires all three series to reach order `2q + 2`.
pub fn classify(z: &ZetaSeries, zplus: &ZetaSeries, zminus: &ZetaSeries) -> BrieskornClass {
    let p = match recover_p(z) {
        Ok(p) => p,
        Err(e) => return BrieskornClass::inconsistent(None, None, e.to_string()),
    };
    if p == 1 {
        return BrieskornClass::inconsistent(
            Some(1),
            None,
            "p = 1: the germ is a coordinate up to isomorphism and is excluded".into(),
        );
    }
    let (l, q) = match recover_q_with_departure(z, p) {
        Ok(v) => v,
        Err(e) => return BrieskornClass::inconsistent(Some(p), None, e.to_string()),
    };
    let order = z.order().min(zplus.order()).min(zminus.order());
    if order < 2 * q + 2 {
        return BrieskornClass::inconsistent(
            Some(p),
            Some(q),
            format!("truncation order {order} is below the required 2q + 2 = {}", 2 * q + 2),
        );
    }
    let mut notes = vec![format!("first departure from the zeta of x^{p} at index {l}")];
    if q != l {
        notes.push("q = l - 1: the departure comes from a cancelling tie one step above q".into());
    }
    let (eps_p, eps_q) = recover_signs(zplus, zminus, p, q);
    let open = p % 2 == 1 && q % p == 0 && (q / p) % 2 == 0;
    if p % 2 == 1 || q % 2 == 1 {
        notes.push("signs of odd exponents are absorbed by x -> -x or y -> -y".into());
    }
    if open {
        notes.push(format!(
            "open case: x^{p} + y^{q} and x^{p} - y^{q} have the same invariants computed here"
        ));
    } else if q % 2 == 0 {
        notes.push(format!("eps_q read from the sign series at index {q}"));
    }
    if p == q && p % 2 == 0 && eps_p != eps_q {
        notes.push(format!("opposite signs reported as x^{p} - y^{q}"));
    }
    BrieskornClass {
        p: Some(p),
        q: Some(q),
        eps_p,
        eps_q,
        status: if open {
            ClassStatus::OpenCase
        } else {
            ClassStatus::Determined
        },
        notes,
    }
}

/// Computes the three series of `g` directly and classifies them.
pub fn classify_germ(g: &GermSpec, order: u32) -> Result<BrieskornClass, JetError> {
    let z = zeta_direct(g, order, Variant::Naive)?;
    let zp = zeta_direct(g, order, Variant::Plus)?;
    let zm = zeta_direct(g, order, Variant::Minus)?;
    Ok(classify(&z, &zp, &zm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(s: &str) -> GermSpec {
        s.parse().unwrap()
    }

    fn z(g: &str, order: u32) -> ZetaSeries {
        zeta_direct(&germ(g), order, Variant::Naive).unwrap()
    }

    #[test]
    fn exponent_recovery() {
        assert_eq!(recover_p(&z("x^2+y^2", 10)), Ok(2));
        assert_eq!(recover_p(&z("x^3+y^4", 10)), Ok(3));
        assert_eq!(recover_p(&z("x^5+y^7", 10)), Ok(5));
        assert_eq!(recover_q(&z("x^3+y^4", 12), 3), Ok(4));
        assert_eq!(recover_q(&z("x^3+y^6", 16), 3), Ok(6));
        assert_eq!(recover_q(&z("x^3+y^7", 18), 3), Ok(7));
        assert_eq!(recover_q(&z("x^2+y^2", 8), 2), Ok(2));
        assert_eq!(recover_p(&ZetaSeries::zero(5)), Err(ClassifyError::AllZero(5)));
        assert!(recover_q(&z("x^3+y^9", 8), 3).is_err());
    }

    #[test]
    fn sign_recovery() {
        let signs = |g: &str, p, q| {
            let g = germ(g);
            recover_signs(
                &zeta_direct(&g, 20, Variant::Plus).unwrap(),
                &zeta_direct(&g, 20, Variant::Minus).unwrap(),
                p,
                q,
            )
        };
        use SignClass::*;
        assert_eq!(signs("x^2+y^2", 2, 2), (Plus, Plus));
        assert_eq!(signs("-x^2-y^4", 2, 4), (Minus, Minus));
        assert_eq!(signs("-x^2+y^4", 2, 4), (Minus, Plus));
        assert_eq!(signs("x^3+y^3", 3, 3), (Undetermined, Undetermined));
        assert_eq!(signs("x^3-y^3", 3, 3), (Undetermined, Undetermined));
        assert_eq!(signs("x^3-y^4", 3, 4), (Undetermined, Minus));
    }

    #[test]
    fn classification_examples() {
        let c = classify_germ(&germ("x^3+y^6"), 20).unwrap();
        assert_eq!(c.status, ClassStatus::OpenCase);
        assert_eq!((c.p, c.q), (Some(3), Some(6)));

        let plus = classify_germ(&germ("x^3+y^4"), 24).unwrap();
        let minus = classify_germ(&germ("x^3-y^4"), 24).unwrap();
        assert_eq!(plus.eps_q, SignClass::Plus);
        assert_eq!(minus.eps_q, SignClass::Minus);

        let c = classify_germ(&germ("x^4-y^6"), 20).unwrap();
        assert_eq!((c.p, c.q, c.eps_p, c.eps_q), (Some(4), Some(6), SignClass::Plus, SignClass::Minus));
        assert_eq!(c.status, ClassStatus::Determined);

        let c = classify_germ(&germ("-x^2+y^2"), 10).unwrap();
        assert_eq!((c.eps_p, c.eps_q), (SignClass::Plus, SignClass::Minus));
    }

    #[test]
    fn rejected_inputs() {
        let c = classify_germ(&germ("x+y^3"), 12).unwrap();
        assert_eq!(c.status, ClassStatus::Inconsistent);
        let c = classify_germ(&germ("x^3+y^5"), 11).unwrap();
        assert_eq!(c.status, ClassStatus::Inconsistent);
        assert!(c.notes[0].contains("2q + 2"));
        let zero = ZetaSeries::zero(10);
        assert_eq!(classify(&zero, &zero, &zero).status, ClassStatus::Inconsistent);
    }

    #[test]
    fn report_json_shape() {
        let c = classify_germ(&germ("x^3+y^6"), 20).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["status"], "open_case");
        assert_eq!(v["eps_p"], "undetermined");
        assert_eq!(v["p"], 3);
        assert!(v["notes"].is_array());
    }

    #[test]
    fn odd_p_is_blind_to_the_sign_of_x() {
        for (p, q) in [(3u32, 4u32), (3, 6), (5, 8), (3, 3), (5, 7)] {
            for s in ["+", "-"] {
                let a = classify_germ(&germ(&format!("x^{p}{s}y^{q}")), 2 * q + 2).unwrap();
                let b = classify_germ(&germ(&format!("-x^{p}{s}y^{q}")), 2 * q + 2).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
