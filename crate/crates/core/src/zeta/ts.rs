//! Thom–Sebastiani convolution for sums `f(x) + g(y)` of two germs of the
//! same constant sign.

use serde::{Deserialize, Serialize};

use super::ZetaError;
use crate::ring::{LaurentPoly, ZetaSeries};

/// Precondition that the series cannot certify on their own.
pub const SAME_SIGN_ASSUMPTION: &str =
    "valid only when both germs are nonnegative or both are nonpositive; not checked";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TsOutput {
    pub series: ZetaSeries,
    pub assumption: String,
}

/// `A_n = 1 - sum_{j<=n} a_j` for `n = 0..=order`.
pub fn tail_sums(z: &ZetaSeries) -> Vec<LaurentPoly> {
    let mut out = Vec::with_capacity(z.order() as usize + 1);
    let mut acc = LaurentPoly::one();
    out.push(acc.clone());
    for n in 1..=z.order() {
        if let Some(a) = z.coeff_ref(n) {
            acc -= a;
        }
        out.push(acc.clone());
    }
    out
}

/// `c_n = a_n B_n + A_n b_n + a_n b_n`.
pub fn ts_convolve(zf: &ZetaSeries, zg: &ZetaSeries) -> Result<TsOutput, ZetaError> {
    if zf.order() != zg.order() {
        return Err(ZetaError::OrderMismatch {
            left: zf.order(),
            right: zg.order(),
        });
    }
    let big_a = tail_sums(zf);
    let big_b = tail_sums(zg);
    let mut c = ZetaSeries::zero(zf.order());
    for n in 1..=zf.order() {
        let a = zf.coeff(n);
        let b = zg.coeff(n);
        let i = n as usize;
        let cn = &(&(&a * &big_b[i]) + &(&big_a[i] * &b)) + &(&a * &b);
        c.set(n, cn);
    }
    Ok(TsOutput {
        series: c,
        assumption: SAME_SIGN_ASSUMPTION.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::{zeta_direct, GermSpec, Variant};
    use proptest::prelude::*;

    fn z(g: &str, order: u32) -> ZetaSeries {
        zeta_direct(&g.parse::<GermSpec>().unwrap(), order, Variant::Naive).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn squares_convolve_to_sum_of_squares() {
        let c = ts_convolve(&z("x^2", 20), &z("x^2", 20)).unwrap();
        for n in 1..=10u32 {
            assert_eq!(c.series.coeff(2 * n), poly("u^2-1").shift(-2 * n as i64));
            assert!(c.series.coeff(2 * n - 1).is_zero());
        }
        assert_eq!(c.series, z("x^2+y^2", 20));
        assert_eq!(c.assumption, SAME_SIGN_ASSUMPTION);
    }

    #[test]
    fn square_and_fourth_power() {
        let c = ts_convolve(&z("x^2", 20), &z("x^4", 20)).unwrap().series;
        for n in 1..=5u32 {
            assert_eq!(c.coeff(4 * n), poly("u^2-1").shift(-3 * n as i64));
        }
        for n in 0..=4u32 {
            assert_eq!(c.coeff(4 * n + 2), poly("u-1").shift(-(3 * n as i64) - 1));
        }
        assert_eq!(c, z("x^2+y^4", 20));
    }

    #[test]
    fn zero_and_mismatch() {
        let c = ts_convolve(&z("x^2", 12), &ZetaSeries::zero(12)).unwrap();
        assert_eq!(c.series, z("x^2", 12));
        assert_eq!(
            ts_convolve(&z("x^2", 12), &z("x^2", 10)).unwrap_err(),
            ZetaError::OrderMismatch { left: 12, right: 10 }
        );
    }

    proptest! {
        #[test]
        fn tail_sum_differences(k in 1u32..6, order in 1u32..30) {
            let s = z(&format!("x^{k}"), order);
            let a = tail_sums(&s);
            prop_assert!(a[0].is_one());
            for n in 1..=order {
                prop_assert_eq!(&a[n as usize - 1] - &a[n as usize], s.coeff(n));
            }
        }

        #[test]
        fn convolution_is_symmetric(k in 1u32..6, l in 1u32..6) {
            let (f, g) = (z(&format!("x^{k}"), 18), z(&format!("x^{l}"), 18));
            prop_assert_eq!(ts_convolve(&f, &g).unwrap(), ts_convolve(&g, &f).unwrap());
        }
    }
}
