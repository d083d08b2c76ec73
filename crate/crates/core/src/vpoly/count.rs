//! Finite-field point counts of piece descriptions, used as an independent
//! check of `beta`: every atom except the sphere is polynomial-count with
//! counting polynomial equal to its `beta`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{beta_expr, PieceAtom, PieceExpr, VpolyError};
use crate::ring::LaurentPoly;

/// Returns `Some(p)` when `q = p^k` for a prime `p` and `k >= 1`.
pub(crate) fn prime_power_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

fn big_pow(q: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(q), e as usize)
}

/// Number of solutions of `x_0^2 + ... + x_k^2 = 1` over `F_q`, `q = 3 mod 4`.
fn sphere_count(k: u32, q: u64) -> BigInt {
    let n = k + 1;
    // eta(-1) = -1 for q = 3 mod 4
    if n % 2 == 0 {
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        big_pow(q, n - 1) - BigInt::from(sign) * big_pow(q, (n - 2) / 2)
    } else {
        let sign = if ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        big_pow(q, n - 1) + BigInt::from(sign) * big_pow(q, (n - 1) / 2)
    }
}

fn count_atom(a: &PieceAtom, q: u64) -> Result<BigInt, VpolyError> {
    Ok(match a {
        PieceAtom::Affine(m) => big_pow(q, *m),
        PieceAtom::Torus(k) => big_pow(q - 1, *k),
        PieceAtom::PuncturedAffine(m) => big_pow(q, *m) - 1,
        PieceAtom::Points(c) => BigInt::from(*c),
        PieceAtom::ProjSpace(k) => (0..=*k).map(|e| big_pow(q, e)).sum(),
        PieceAtom::Sphere(k) => {
            if q % 4 != 3 {
                return Err(VpolyError::BadFieldSize {
                    q,
                    reason: "sphere counts are only taken for q = 3 mod 4".into(),
                });
            }
            sphere_count(*k, q)
        }
        PieceAtom::Custom { name, .. } => {
            return Err(VpolyError::UnsupportedAtom(format!("custom atom {name:?}")))
        }
    })
}

/// Number of `F_q`-points of the description.
///
/// For spheres this is the affine quadric count, which agrees with `beta`
/// only for `S^0` and `S^1`.
pub fn count_points(e: &PieceExpr, q: u64) -> Result<BigInt, VpolyError> {
    if prime_power_base(q).is_none() {
        return Err(VpolyError::BadFieldSize {
            q,
            reason: "not a prime power".into(),
        });
    }
    count_rec(e, q)
}

fn count_rec(e: &PieceExpr, q: u64) -> Result<BigInt, VpolyError> {
    match e {
        PieceExpr::Atom(a) => count_atom(a, q),
        PieceExpr::Ref(name) => Err(VpolyError::UndefinedSymbol(name.clone())),
        PieceExpr::Union(xs) => xs.iter().map(|x| count_rec(x, q)).sum(),
        PieceExpr::Product(xs) => xs
            .iter()
            .try_fold(BigInt::one(), |acc, x| Ok(acc * count_rec(x, q)?)),
        PieceExpr::Difference(w, p) => Ok(count_rec(w, q)? - count_rec(p, q)?),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyCountOutcome {
    /// The counts interpolate to `beta`.
    Ok { witness: LaurentPoly },
    Mismatch {
        counts: Vec<(u64, BigInt)>,
        expected: LaurentPoly,
        /// The interpolating polynomial, when it has integer coefficients.
        witness: Option<LaurentPoly>,
    },
}

/// Lagrange interpolation through `(x_i, y_i)`; coefficients in increasing degree.
fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut result = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, b) in basis.iter().enumerate() {
            result[k] += b * &scale;
        }
    }
    result
}

/// Counts the description over each `F_q`, interpolates a polynomial in `q`
/// and compares it with `beta`.
pub fn verify_polynomial_count(e: &PieceExpr, qs: &[u64]) -> Result<PolyCountOutcome, VpolyError> {
    let expected = beta_expr(e)?;
    let needed = expected.degree().map_or(1, |d| d.max(0) as usize + 1);
    if qs.len() < needed {
        return Err(VpolyError::NeedMoreSamples {
            needed,
            got: qs.len(),
        });
    }
    for (i, a) in qs.iter().enumerate() {
        if qs[..i].contains(a) {
            return Err(VpolyError::BadFieldSize {
                q: *a,
                reason: "field sizes must be pairwise distinct".into(),
            });
        }
    }
    let counts = qs
        .iter()
        .map(|&q| Ok((q, count_points(e, q)?)))
        .collect::<Result<Vec<_>, VpolyError>>()?;
    let points: Vec<_> = counts
        .iter()
        .map(|(q, c)| {
            (
                BigRational::from_integer(BigInt::from(*q)),
                BigRational::from_integer(c.clone()),
            )
        })
        .collect();
    let coeffs = interpolate(&points);
    let witness = coeffs
        .iter()
        .all(|c| c.is_integer())
        .then(|| {
            LaurentPoly::from_pairs(
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (k as i64, c.to_integer())),
            )
        });
    Ok(match witness {
        Some(w) if w == expected => PolyCountOutcome::Ok { witness: w },
        witness => PolyCountOutcome::Mismatch {
            counts,
            expected,
            witness,
        },
    })
}
