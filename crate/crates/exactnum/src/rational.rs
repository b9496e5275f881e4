//! Arbitrary-precision rationals and their `"p/q"` string encoding.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ExactError;

pub type Rational = num_rational::BigRational;

pub fn from_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Encodes as `"p/q"`, or `"p"` when the denominator is one.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Result<Rational, ExactError> {
    let err = |reason: &str| ExactError::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parses either an exact `"p/q"` string or a decimal literal such as `"0.25"`.
pub fn parse_decimal(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    if let Some((int, frac)) = t.split_once('.') {
        if frac.contains('/') || frac.is_empty() && int.is_empty() {
            return Err(ExactError::Parse {
                input: s.to_string(),
                reason: "malformed decimal".into(),
            });
        }
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| ExactError::Parse {
            input: s.to_string(),
            reason: "malformed decimal".into(),
        })?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    parse(t)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Nearest rational with denominator `10^digits`; used to lift float CLI input.
pub fn from_f64_rounded(x: f64, digits: u32) -> Rational {
    let scale = 10f64.powi(digits as i32);
    let n = (x * scale).round();
    Rational::new(
        BigInt::from(n as i128),
        num_traits::pow(BigInt::from(10), digits as usize),
    )
}

pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}
