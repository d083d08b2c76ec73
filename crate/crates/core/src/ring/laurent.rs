//! Sparse Laurent polynomials in one variable `u` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RingError;

/// An element of `Z[u, u^-1]`.
///
/// Stored as a map from exponent to nonzero coefficient, so equality of
/// values is equality of the maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("exponent overflow: u^{a} * u^{b}"))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(1, 1)
    }

    /// `u - 1`, the class of the punctured line.
    pub fn u_minus_one() -> Self {
        Self::from_pairs([(1, 1), (0, -1)])
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * u^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `u = q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational, RingError> {
        if q.is_zero() {
            if self.low_degree().is_some_and(|e| e < 0) {
                return Err(RingError::EvalAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut total = BigRational::zero();
        for (e, c) in self.terms() {
            let e = i32::try_from(e).map_err(|_| RingError::ExponentOverflow)?;
            total += q.pow(e) * BigRational::from_integer(c.clone());
        }
        Ok(total)
    }

    /// Substitutes `u = q` for an integer `q`; fails if the value is not an
    /// integer (negative exponents with `|q| > 1`).
    pub fn eval_int(&self, q: i64) -> Result<BigInt, RingError> {
        let v = self.eval(&BigRational::from_integer(BigInt::from(q)))?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(RingError::NonIntegralValue(v.to_string()))
        }
    }

    /// Splits `self = content * u^k` with `content` having lowest exponent 0.
    pub fn split_monomial(&self) -> (Self, i64) {
        match self.low_degree() {
            None => (Self::zero(), 0),
            Some(k) => (self.shift(-k), k),
        }
    }

    /// True when `self = (u - 1) * u^k` for some integer `k`.
    pub fn is_u_minus_one_times_monomial(&self) -> bool {
        let (content, _) = self.split_monomial();
        content == Self::u_minus_one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(*ea, *eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing exponent: `u^2-1`, `2*u-1`, `u^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if *e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if *e == 1 {
                f.write_str("u")?;
            } else {
                write!(f, "u^{e}")?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn err(&self, reason: &str) -> RingError {
        RingError::Parse {
            input: self.src.to_string(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let mut out = LaurentPoly::zero();
        if cur.peek().is_none() {
            return Err(cur.err("empty polynomial"));
        }
        let mut first = true;
        while cur.peek().is_some() {
            let negative = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') {
                false
            } else if first {
                false
            } else {
                return Err(cur.err("expected '+' or '-'"));
            };
            first = false;
            let coef = match cur.digits() {
                Some(d) => Some(d.parse::<BigInt>().map_err(|_| cur.err("bad integer"))?),
                None => None,
            };
            let star = coef.is_some() && cur.eat(b'*');
            let exp = if cur.eat(b'u') {
                if cur.eat(b'^') {
                    let neg = cur.eat(b'-');
                    if !neg {
                        cur.eat(b'+');
                    }
                    let d = cur.digits().ok_or_else(|| cur.err("missing exponent"))?;
                    let e: i64 = d.parse().map_err(|_| cur.err("exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else {
                if coef.is_none() {
                    return Err(cur.err("expected integer or 'u'"));
                }
                if star {
                    return Err(cur.err("expected 'u' after '*'"));
                }
                0
            };
            let mut c = coef.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
