//! Comparison of invariant tuples. Differing coefficients certify that two
//! germs are not equivalent; agreeing coefficients certify nothing.

use serde::{Deserialize, Serialize};

use crate::jets::Variant;
use crate::ring::{LaurentPoly, ZetaSeries};

/// `Z`, and optionally `Z^+` and `Z^-`, of one germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub naive: ZetaSeries,
    pub plus: Option<ZetaSeries>,
    pub minus: Option<ZetaSeries>,
}

impl Invariants {
    pub fn naive_only(naive: ZetaSeries) -> Self {
        Self {
            naive,
            plus: None,
            minus: None,
        }
    }

    fn series(&self, v: Variant) -> Option<&ZetaSeries> {
        match v {
            Variant::Naive => Some(&self.naive),
            Variant::Plus => self.plus.as_ref(),
            Variant::Minus => self.minus.as_ref(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Comparison {
    Distinguished {
        series: Variant,
        index: u32,
        left: LaurentPoly,
        right: LaurentPoly,
    },
    /// All compared coefficients agree up to `order`.
    NotDistinguished { order: u32 },
}

/// Finds the smallest index at which some series differs; ties go to the
/// naive series, then `Z^+`, then `Z^-`. Sign series are compared only when
/// both sides carry them, each pair up to its smaller order.
pub fn compare_invariants(left: &Invariants, right: &Invariants) -> Comparison {
    let mut order = u32::MAX;
    let mut best: Option<(u32, Variant)> = None;
    for v in [Variant::Naive, Variant::Plus, Variant::Minus] {
        let (Some(l), Some(r)) = (left.series(v), right.series(v)) else {
            continue;
        };
        order = order.min(l.order()).min(r.order());
        if let Some(i) = l.first_difference(r) {
            if best.map_or(true, |(j, _)| i < j) {
                best = Some((i, v));
            }
        }
    }
    match best {
        Some((index, v)) => {
            let l = left.series(v).expect("compared series present");
            let r = right.series(v).expect("compared series present");
            Comparison::Distinguished {
                series: v,
                index,
                left: l.coeff(index),
                right: r.coeff(index),
            }
        }
        None => Comparison::NotDistinguished { order },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::{zeta_direct, GermSpec};

    fn inv(g: &str, order: u32) -> Invariants {
        let g: GermSpec = g.parse().unwrap();
        Invariants {
            naive: zeta_direct(&g, order, Variant::Naive).unwrap(),
            plus: Some(zeta_direct(&g, order, Variant::Plus).unwrap()),
            minus: Some(zeta_direct(&g, order, Variant::Minus).unwrap()),
        }
    }

    #[test]
    fn distinguishes_sphere_family_members() {
        let c = compare_invariants(&inv("x^2+y^2+z^2", 12), &inv("x^2+y^4+z^4", 12));
        assert_eq!(
            c,
            Comparison::Distinguished {
                series: Variant::Naive,
                index: 2,
                left: "u^3-1".parse::<LaurentPoly>().unwrap().shift(-3),
                right: "u-1".parse::<LaurentPoly>().unwrap().shift(-1),
            }
        );
    }

    #[test]
    fn naive_series_alone_can_fail_to_distinguish() {
        let l = inv("x^3+y^4", 24);
        let r = inv("x^3-y^4", 24);
        let c = compare_invariants(&Invariants::naive_only(l.naive.clone()), &Invariants::naive_only(r.naive.clone()));
        assert_eq!(c, Comparison::NotDistinguished { order: 24 });
        assert!(matches!(
            compare_invariants(&l, &r),
            Comparison::Distinguished { series: Variant::Plus | Variant::Minus, index: 4, .. }
        ));
        let same = inv("x^2-y^2", 10);
        assert_eq!(compare_invariants(&same, &same), Comparison::NotDistinguished { order: 10 });
    }

    #[test]
    fn comparison_respects_smaller_order() {
        let c = compare_invariants(&inv("x^2", 3), &inv("x^4", 10));
        assert!(matches!(c, Comparison::Distinguished { index: 2, .. }));
        let c = compare_invariants(&inv("x^5", 3), &inv("x^4", 10));
        assert_eq!(c, Comparison::NotDistinguished { order: 3 });
    }
}
