//! Exact rational numbers and their string encoding.
//!
//! Rationals are written as `"p/q"` in lowest terms, or as a bare integer
//! string when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a comma-separated list such as `0,1,4,6` or `-1/2,1/2`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Returns the value as `i64` if it is an integer that fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.numer()).ok()
    } else {
        None
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Serde adapter for a single rational as a string.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of rationals as a list of strings.
pub mod serde_rational_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
