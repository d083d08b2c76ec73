//! Virtual Poincaré polynomials of the real algebraic sets cut out by the
//! leading-coefficient ("face") polynomial `sum_{i in D} s_i v_i^{p_i}` of a
//! diagonal germ.

use super::germ::{DiagonalTerm, Sign};
use super::JetError;
use crate::ring::LaurentPoly;

/// Right-hand side of a face equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Zero,
    One(Sign),
}

fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_pairs(pairs.iter().copied())
}

fn is_definite(face: &[DiagonalTerm]) -> bool {
    face.iter().all(|t| t.exp % 2 == 0 && t.sign == face[0].sign)
}

/// Number of real solutions of `s * a^p = level`.
pub fn level_points(p: u32, s: Sign, level: Level) -> u32 {
    match level {
        Level::Zero => 1,
        Level::One(_) if p % 2 == 1 => 1,
        Level::One(t) if t == s => 2,
        Level::One(_) => 0,
    }
}

/// `beta` of `{(a, b) in R^2 : e1 a^p + e2 b^q = level}`.
///
/// Both coordinates enter with positive exponents, so every such curve is a
/// union of branches homeomorphic to `R` or an oval:
/// level 0 is a point (definite), a topological line (some exponent odd) or
/// two lines through the origin; level `±1` is an oval, empty, one graph or
/// two disjoint graphs.
pub fn tie_curve_beta(p: u32, q: u32, e1: Sign, e2: Sign, level: Level) -> LaurentPoly {
    assert!(p > 0 && q > 0, "exponents must be positive");
    let both_even = p % 2 == 0 && q % 2 == 0;
    match level {
        Level::Zero if !both_even => LaurentPoly::u(),
        Level::Zero if e1 == e2 => LaurentPoly::one(),
        Level::Zero => lp(&[(1, 2), (0, -1)]),
        Level::One(_) if !both_even => LaurentPoly::u(),
        Level::One(t) if e1 == e2 && e1 == t => lp(&[(1, 1), (0, 1)]),
        Level::One(_) if e1 == e2 => LaurentPoly::zero(),
        Level::One(_) => lp(&[(1, 2)]),
    }
}

fn three_way(face: &[DiagonalTerm]) -> JetError {
    JetError::Unsupported {
        n: None,
        reason: format!(
            "indefinite three-way tie (exponents {}, {}, {})",
            face[0].exp, face[1].exp, face[2].exp
        ),
    }
}

/// `beta` of the zero set of the face polynomial in `R^|D|`.
pub fn face_zero_beta(face: &[DiagonalTerm]) -> Result<LaurentPoly, JetError> {
    match face {
        [_] => Ok(LaurentPoly::one()),
        [a, b] => Ok(tie_curve_beta(a.exp, b.exp, a.sign, b.sign, Level::Zero)),
        [_, _, _] if is_definite(face) => Ok(LaurentPoly::one()),
        [_, _, _] => Err(three_way(face)),
        _ => unreachable!("faces have 1 to 3 terms"),
    }
}

/// `beta` of `{face = ±1}` in `R^|D|`.
pub fn face_level_beta(face: &[DiagonalTerm], target: Sign) -> Result<LaurentPoly, JetError> {
    let level = Level::One(target);
    match face {
        [a] => Ok(LaurentPoly::constant(level_points(a.exp, a.sign, level) as i64)),
        [a, b] => Ok(tie_curve_beta(a.exp, b.exp, a.sign, b.sign, level)),
        // an ellipsoid-like sphere or nothing
        [a, _, _] if is_definite(face) => Ok(if a.sign == target {
            lp(&[(2, 1), (0, 1)])
        } else {
            LaurentPoly::zero()
        }),
        [_, _, _] => Err(three_way(face)),
        _ => unreachable!("faces have 1 to 3 terms"),
    }
}

/// `beta` of the face zero set intersected with the torus `(R^*)^|S|`.
pub fn torus_zero_beta(face: &[DiagonalTerm]) -> Result<LaurentPoly, JetError> {
    match face {
        [_] => Ok(LaurentPoly::zero()),
        [_, _] => Ok(&face_zero_beta(face)? - &LaurentPoly::one()),
        [_, _, _] if is_definite(face) => Ok(LaurentPoly::zero()),
        [_, _, _] => Err(three_way(face)),
        _ => unreachable!("faces have 1 to 3 terms"),
    }
}
