//! Brute-force count of `chi_n(F_q)`: jets over a prime field whose image
//! under the germ has order exactly `n`.

use std::collections::HashMap;

use super::germ::{GermSpec, Sign};
use super::JetError;

/// Largest `q^{dn}` accepted by [`count_jets`].
pub const ENUMERATION_CAP: u64 = 10_000_000;

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|p| p * p <= q).all(|p| q % p != 0)
}

/// Truncated power series mod `t^{n+1}`, coefficients mod `q`, index = degree.
type Trunc = Vec<u64>;

fn mul(a: &[u64], b: &[u64], q: u64) -> Trunc {
    let n = a.len();
    let mut out = vec![0; n];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b[..n - i].iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    out
}

fn power(a: &[u64], e: u32, q: u64) -> Trunc {
    let mut r = vec![0; a.len()];
    r[0] = 1;
    for _ in 0..e {
        r = mul(&r, a, q);
    }
    r
}

/// Multiset of `gamma^e` over all jets `gamma = sum_{j=1..n} c_j t^j`.
fn power_distribution(e: u32, n: u32, q: u64) -> HashMap<Trunc, u64> {
    let len = n as usize + 1;
    let mut out = HashMap::new();
    let mut gamma = vec![0u64; len];
    loop {
        *out.entry(power(&gamma, e, q)).or_insert(0) += 1;
        let mut i = 1;
        while i < len {
            gamma[i] += 1;
            if gamma[i] < q {
                break;
            }
            gamma[i] = 0;
            i += 1;
        }
        if i == len {
            return out;
        }
    }
}

/// Number of `gamma in (F_q[t]/t^{n+1})^d` with `gamma(0) = 0` and
/// `ord f(gamma) = n`.
pub fn count_jets(g: &GermSpec, n: u32, q: u64) -> Result<u64, JetError> {
    if n == 0 {
        return Err(JetError::ZeroN);
    }
    if !is_prime(q) {
        return Err(JetError::BadField(q));
    }
    let d = g.dim();
    let size = (q as u128).checked_pow(d as u32 * n);
    if size.map_or(true, |s| s > ENUMERATION_CAP as u128) {
        return Err(JetError::TooLarge {
            q,
            d,
            n,
            size: size.map_or_else(|| format!("{q}^{}", d as u32 * n), |s| s.to_string()),
            cap: ENUMERATION_CAP,
        });
    }
    let (dists, combine): (Vec<_>, Box<dyn Fn(&[u64], &[u64]) -> Trunc>) = match g {
        GermSpec::Monomial { exponents, .. } => (
            exponents.iter().map(|&e| power_distribution(e, n, q)).collect(),
            Box::new(move |a, b| mul(a, b, q)),
        ),
        GermSpec::Diagonal { terms } => (
            terms
                .iter()
                .map(|t| {
                    let dist = power_distribution(t.exp, n, q);
                    if t.sign == Sign::Plus {
                        return dist;
                    }
                    dist.into_iter()
                        .map(|(k, c)| (k.iter().map(|&x| (q - x) % q).collect(), c))
                        .collect()
                })
                .collect(),
            Box::new(move |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % q).collect()),
        ),
    };
    // the unit sign of a monomial does not change orders
    let start = match g {
        GermSpec::Monomial { .. } => {
            let mut one = vec![0; n as usize + 1];
            one[0] = 1;
            one
        }
        GermSpec::Diagonal { .. } => vec![0; n as usize + 1],
    };
    let mut partial: HashMap<Trunc, u64> = HashMap::from([(start, 1)]);
    for dist in &dists {
        let mut next = HashMap::new();
        for (acc, c1) in &partial {
            for (v, c2) in dist {
                *next.entry(combine(acc, v)).or_insert(0) += c1 * c2;
            }
        }
        partial = next;
    }
    Ok(partial
        .into_iter()
        .filter(|(s, _)| s.iter().position(|&x| x != 0) == Some(n as usize))
        .map(|(_, c)| c)
        .sum())
}
