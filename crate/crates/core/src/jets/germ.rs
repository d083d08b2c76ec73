//! Germ descriptions: monomials `±x^a*y^b*z^c` and diagonal (Brieskorn-type)
//! sums `±x^p±y^q±z^r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::JetError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One term `sign * var^exp` of a diagonal germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalTerm {
    pub sign: Sign,
    pub exp: u32,
}

const VARS: [char; 3] = ['x', 'y', 'z'];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GermSpec {
    /// `unit_sign * prod x_i^{N_i}` in `exponents.len()` variables.
    Monomial { exponents: Vec<u32>, unit_sign: Sign },
    /// `sum sign_i x_i^{p_i}` with `p_1 <= p_2 <= ...`.
    Diagonal { terms: Vec<DiagonalTerm> },
}

impl GermSpec {
    pub fn monomial(exponents: Vec<u32>, unit_sign: Sign) -> Result<Self, JetError> {
        if exponents.is_empty() || exponents.len() > 3 {
            return Err(JetError::InvalidGerm("monomial germs take 1 to 3 variables".into()));
        }
        if exponents.iter().all(|&e| e == 0) {
            return Err(JetError::InvalidGerm("monomial germ with all exponents zero".into()));
        }
        Ok(GermSpec::Monomial {
            exponents,
            unit_sign,
        })
    }

    /// Builds a diagonal germ; terms are sorted by exponent (a coordinate
    /// permutation, which does not change any invariant).
    pub fn diagonal(mut terms: Vec<DiagonalTerm>) -> Result<Self, JetError> {
        if terms.is_empty() || terms.len() > 3 {
            return Err(JetError::InvalidGerm("diagonal germs take 1 to 3 variables".into()));
        }
        if terms.iter().any(|t| t.exp == 0) {
            return Err(JetError::InvalidGerm("diagonal exponents must be positive".into()));
        }
        terms.sort_by_key(|t| t.exp);
        Ok(GermSpec::Diagonal { terms })
    }

    /// Shorthand for a diagonal germ from `(sign, exponent)` pairs given as
    /// `(+1 | -1, p)`.
    pub fn brieskorn(pairs: &[(i8, u32)]) -> Result<Self, JetError> {
        Self::diagonal(
            pairs
                .iter()
                .map(|&(s, exp)| DiagonalTerm {
                    sign: if s < 0 { Sign::Minus } else { Sign::Plus },
                    exp,
                })
                .collect(),
        )
    }

    /// Number of variables.
    pub fn dim(&self) -> usize {
        match self {
            GermSpec::Monomial { exponents, .. } => exponents.len(),
            GermSpec::Diagonal { terms } => terms.len(),
        }
    }

    /// True when the germ takes only one sign near the origin (away from its
    /// zero set), together with that sign.
    pub fn definite_sign(&self) -> Option<Sign> {
        match self {
            GermSpec::Monomial {
                exponents,
                unit_sign,
            } => exponents.iter().all(|e| e % 2 == 0).then_some(*unit_sign),
            GermSpec::Diagonal { terms } => {
                let s = terms[0].sign;
                terms
                    .iter()
                    .all(|t| t.exp % 2 == 0 && t.sign == s)
                    .then_some(s)
            }
        }
    }

    /// The germ `-f`.
    pub fn negated(&self) -> Self {
        match self {
            GermSpec::Monomial {
                exponents,
                unit_sign,
            } => GermSpec::Monomial {
                exponents: exponents.clone(),
                unit_sign: unit_sign.flip(),
            },
            GermSpec::Diagonal { terms } => GermSpec::Diagonal {
                terms: terms
                    .iter()
                    .map(|t| DiagonalTerm {
                        sign: t.sign.flip(),
                        exp: t.exp,
                    })
                    .collect(),
            },
        }
    }
}

impl fmt::Display for GermSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermSpec::Monomial {
                exponents,
                unit_sign,
            } => {
                if *unit_sign == Sign::Minus {
                    f.write_str("-")?;
                }
                let mut first = true;
                for (v, e) in VARS.iter().zip(exponents) {
                    if *e == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    write!(f, "{v}^{e}")?;
                }
                Ok(())
            }
            GermSpec::Diagonal { terms } => {
                for (i, (v, t)) in VARS.iter().zip(terms).enumerate() {
                    match (t.sign, i) {
                        (Sign::Minus, _) => f.write_str("-")?,
                        (Sign::Plus, 0) => {}
                        (Sign::Plus, _) => f.write_str("+")?,
                    }
                    write!(f, "{v}^{}", t.exp)?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `x`, `x^3`, `y^12`; returns (variable index, exponent, rest).
fn parse_power(s: &str) -> Result<(usize, u32, &str), JetError> {
    let bad = |why: &str| JetError::Parse(format!("{s:?}: {why}"));
    let mut chars = s.chars();
    let v = chars.next().ok_or_else(|| bad("expected a variable"))?;
    let idx = VARS
        .iter()
        .position(|&c| c == v)
        .ok_or_else(|| bad("variables are x, y, z"))?;
    let rest = chars.as_str();
    match rest.strip_prefix('^') {
        Some(t) => {
            let end = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
            if end == 0 {
                return Err(bad("missing exponent"));
            }
            let e = t[..end].parse().map_err(|_| bad("exponent out of range"))?;
            Ok((idx, e, &t[end..]))
        }
        None => Ok((idx, 1, rest)),
    }
}

impl FromStr for GermSpec {
    type Err = JetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(JetError::Parse("empty germ".into()));
        }
        let (unit_sign, body) = match compact.strip_prefix('-') {
            Some(b) => (Sign::Minus, b),
            None => (Sign::Plus, compact.strip_prefix('+').unwrap_or(&compact)),
        };
        if body.contains('*') {
            let mut exponents = Vec::new();
            for factor in body.split('*') {
                let (idx, e, rest) = parse_power(factor)?;
                if !rest.is_empty() {
                    return Err(JetError::Parse(format!("{s:?}: unexpected {rest:?}")));
                }
                if idx < exponents.len() {
                    return Err(JetError::Parse(format!(
                        "{s:?}: variables must appear once, in the order x, y, z"
                    )));
                }
                exponents.resize(idx, 0);
                exponents.push(e);
            }
            return GermSpec::monomial(exponents, unit_sign);
        }
        let mut terms = Vec::new();
        let mut sign = unit_sign;
        let mut rest = body;
        loop {
            let (idx, exp, tail) = parse_power(rest)?;
            if idx != terms.len() {
                return Err(JetError::Parse(format!(
                    "{s:?}: diagonal terms must use x, y, z in order"
                )));
            }
            terms.push(DiagonalTerm { sign, exp });
            if tail.is_empty() {
                break;
            }
            let (next_sign, t) = match (tail.strip_prefix('+'), tail.strip_prefix('-')) {
                (Some(t), _) => (Sign::Plus, t),
                (_, Some(t)) => (Sign::Minus, t),
                _ => return Err(JetError::Parse(format!("{s:?}: unexpected {tail:?}"))),
            };
            sign = next_sign;
            rest = t;
        }
        GermSpec::diagonal(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_diagonal() {
        let g: GermSpec = "x^3+y^4".parse().unwrap();
        assert_eq!(g, GermSpec::brieskorn(&[(1, 3), (1, 4)]).unwrap());
        let g: GermSpec = "-x^2-y^2".parse().unwrap();
        assert_eq!(g, GermSpec::brieskorn(&[(-1, 2), (-1, 2)]).unwrap());
        assert_eq!(g.to_string(), "-x^2-y^2");
        let g: GermSpec = "x^4 - y^3".parse().unwrap();
        assert_eq!(g.to_string(), "-x^3+y^4");
        let g: GermSpec = "x^3".parse().unwrap();
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn parse_monomial() {
        let g: GermSpec = "x^2*y^3".parse().unwrap();
        assert_eq!(g, GermSpec::monomial(vec![2, 3], Sign::Plus).unwrap());
        let g: GermSpec = "x^2*y^5*z^0".parse().unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.to_string(), "x^2*y^5");
        let g: GermSpec = "-y^2*z".parse().unwrap();
        assert_eq!(g, GermSpec::monomial(vec![0, 2, 1], Sign::Minus).unwrap());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "w^2", "x^", "x^2+x^3", "y^2+x^3", "x^2*x", "x^0*y^0", "x^2+", "x^2 y^2", "x^0+y^2"] {
            assert!(bad.parse::<GermSpec>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^2+y^4", "-x^3+y^3-z^5", "x^1*z^2", "-x^7"] {
            let g: GermSpec = s.parse().unwrap();
            assert_eq!(g.to_string().parse::<GermSpec>().unwrap(), g);
        }
    }
}
