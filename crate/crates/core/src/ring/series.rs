//! Truncated power series in `T` over `Z[u, u^-1]`, starting at `T^1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RingError};

/// Default truncation order used throughout the crate.
pub const DEFAULT_ORDER: u32 = 64;

/// A series `sum_{n=1}^{order} c_n T^n` with `c_n` in `Z[u, u^-1]`.
///
/// Coefficients above `order` are unknown, not zero; arithmetic on series of
/// different orders keeps the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    order: u32,
    coeffs: BTreeMap<u32, LaurentPoly>,
}

impl ZetaSeries {
    /// The zero series truncated at `order`.
    ///
    /// Panics if `order` is zero.
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        Self {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a series from `(n, c_n)` pairs. Indices must lie in `1..=order`.
    pub fn from_coeffs(
        order: u32,
        coeffs: impl IntoIterator<Item = (u32, LaurentPoly)>,
    ) -> Result<Self, RingError> {
        if order == 0 {
            return Err(RingError::ZeroOrder);
        }
        let mut s = Self::zero(order);
        for (n, c) in coeffs {
            if n == 0 || n > order {
                return Err(RingError::IndexOutOfRange { index: n, order });
            }
            s.add_to(n, &c);
        }
        Ok(s)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `T^n`; zero for `n = 0` and for absent entries.
    pub fn coeff(&self, n: u32) -> LaurentPoly {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, n: u32) -> Option<&LaurentPoly> {
        self.coeffs.get(&n)
    }

    /// Nonzero coefficients in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    /// Indices of the nonzero coefficients.
    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub(crate) fn add_to(&mut self, n: u32, c: &LaurentPoly) {
        debug_assert!(n >= 1 && n <= self.order);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub(crate) fn set(&mut self, n: u32, c: LaurentPoly) {
        debug_assert!(n >= 1 && n <= self.order);
        if c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    /// Restriction to order `m`; `m` larger than the current order is clamped.
    pub fn truncate(&self, m: u32) -> Self {
        let m = m.clamp(1, self.order);
        Self {
            order: m,
            coeffs: self.coeffs.range(..=m).map(|(n, c)| (*n, c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.order);
        for (n, c) in other.coeffs.range(..=out.order) {
            out.add_to(*n, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    /// Truncated product; the result order is the smaller input order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (i, a) in &self.coeffs {
            for (j, b) in other.coeffs.range(..=order.saturating_sub(*i)) {
                out.add_to(i + j, &(a * b));
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.order);
        for (n, a) in &self.coeffs {
            out.set(*n, a * c);
        }
        out
    }

    /// First index at which the two series differ, compared up to the
    /// smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<u32> {
        let order = self.order.min(other.order);
        (1..=order).find(|&n| self.coeff_ref(n) != other.coeff_ref(n))
    }

    /// Coefficientwise equality up to the smaller order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Parses the text form produced by `Display`; the order is not part of
    /// the text and must be supplied.
    pub fn parse_text(s: &str, order: u32) -> Result<Self, RingError> {
        let err = |reason: &str| RingError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed == "0" {
            return Self::from_coeffs(order, []);
        }
        let mut out = Vec::new();
        let mut rest = trimmed;
        loop {
            rest = rest.trim_start();
            let inner_start = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = inner_start.find(')').ok_or_else(|| err("unbalanced '('"))?;
            let mut coef: LaurentPoly = inner_start[..close].parse()?;
            rest = &inner_start[close + 1..];
            let mut power = None;
            while let Some(after) = rest.trim_start().strip_prefix('*') {
                let after = after.trim_start();
                let (var, tail) = after.split_at(after.chars().next().map_or(0, char::len_utf8));
                let (exp, tail) = match tail.strip_prefix('^') {
                    Some(t) => {
                        let end = t
                            .char_indices()
                            .find(|(i, ch)| !(ch.is_ascii_digit() || (*i == 0 && *ch == '-')))
                            .map_or(t.len(), |(i, _)| i);
                        let e: i64 = t[..end].parse().map_err(|_| err("bad exponent"))?;
                        (e, &t[end..])
                    }
                    None => (1, tail),
                };
                match var {
                    "u" => coef = coef.shift(exp),
                    "T" => {
                        let n = u32::try_from(exp).map_err(|_| err("negative power of T"))?;
                        power = Some(n);
                    }
                    _ => return Err(err("expected 'u' or 'T' factor")),
                }
                rest = tail;
            }
            let n = power.ok_or_else(|| err("term without T^n"))?;
            out.push((n, coef));
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix('+').ok_or_else(|| err("expected '+'"))?;
        }
        Self::from_coeffs(order, out)
    }
}

impl fmt::Display for ZetaSeries {
    /// `(u-1)*u^-1*T^3 + (u-1)*u^-2*T^6`: each coefficient is written as a
    /// polynomial with nonzero constant term times a power of `u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let (content, k) = c.split_monomial();
            write!(f, "({content})")?;
            if k == 1 {
                f.write_str("*u")?;
            } else if k != 0 {
                write!(f, "*u^{k}")?;
            }
            if *n == 1 {
                f.write_str("*T")?;
            } else {
                write!(f, "*T^{n}")?;
            }
        }
        Ok(())
    }
}

/// One coefficient entry of the JSON series document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub n: u32,
    pub coef: LaurentPoly,
}

/// JSON form of a series: `{"order": 9, "coefficients": [{"n": 3, "coef": "1-u^-1"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SeriesDoc {
    order: u32,
    coefficients: Vec<SeriesEntry>,
}

impl Serialize for ZetaSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesDoc {
            order: self.order,
            coefficients: self
                .iter()
                .map(|(n, c)| SeriesEntry { n, coef: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZetaSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = SeriesDoc::deserialize(deserializer)?;
        ZetaSeries::from_coeffs(doc.order, doc.coefficients.into_iter().map(|e| (e.n, e.coef)))
            .map_err(serde::de::Error::custom)
    }
}

/// `sum_{m >= 1} u^{-m nu} T^{m N}` truncated at `order`: the expansion of
/// `u^-nu T^N / (1 - u^-nu T^N)`.
pub fn expand_term(nu: u32, big_n: u32, order: u32) -> ZetaSeries {
    assert!(nu >= 1 && big_n >= 1, "nu and N must be positive");
    let mut s = ZetaSeries::zero(order);
    let mut m = 1u32;
    while let Some(n) = m.checked_mul(big_n).filter(|n| *n <= order) {
        s.set(n, LaurentPoly::monomial(1, -(i64::from(m) * i64::from(nu))));
        m += 1;
    }
    s
}
