//! Elements of Q(√2,√3).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{Field, FromScalar};
use crate::rational::{self, Rational};
use crate::{ExactError, Result};

/// `a + b√2 + c√3 + d√6` with rational coordinates.
///
/// Stored as four integer numerators over one positive common denominator,
/// reduced so that the five integers share no factor. The basis is linearly
/// independent over Q, so equality is coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    num: [BigInt; 4],
    den: BigInt,
}

impl FieldScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        let den = [&a, &b, &c, &d]
            .iter()
            .fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let lift = |r: &Rational| r.numer() * (&den / r.denom());
        Self::reduced([lift(&a), lift(&b), lift(&c), lift(&d)], den)
    }

    fn reduced(mut num: [BigInt; 4], mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for n in &mut num {
                *n = -&*n;
            }
        }
        if num.iter().all(Zero::is_zero) {
            return FieldScalar { num, den: BigInt::one() };
        }
        let g = num.iter().fold(den.clone(), |g, n| g.gcd(n));
        if !g.is_one() {
            for n in &mut num {
                *n /= &g;
            }
            den /= &g;
        }
        FieldScalar { num, den }
    }

    pub fn from_rational(r: Rational) -> Self {
        let (n, d) = r.into();
        FieldScalar {
            num: [n, BigInt::zero(), BigInt::zero(), BigInt::zero()],
            den: d,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(rational::from_i64(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(rational::ratio(p, q))
    }

    fn basis(k: usize) -> Self {
        let mut num = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        num[k] = BigInt::one();
        FieldScalar { num, den: BigInt::one() }
    }

    pub fn sqrt2() -> Self {
        Self::basis(1)
    }

    pub fn sqrt3() -> Self {
        Self::basis(2)
    }

    pub fn sqrt6() -> Self {
        Self::basis(3)
    }

    fn coord(&self, k: usize) -> Rational {
        Rational::new(self.num[k].clone(), self.den.clone())
    }

    /// Coefficient of 1.
    pub fn a(&self) -> Rational {
        self.coord(0)
    }

    /// Coefficient of √2.
    pub fn b(&self) -> Rational {
        self.coord(1)
    }

    /// Coefficient of √3.
    pub fn c(&self) -> Rational {
        self.coord(2)
    }

    /// Coefficient of √6.
    pub fn d(&self) -> Rational {
        self.coord(3)
    }

    /// The value when the scalar lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.a())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::reduced(
            self.num.clone().map(|n| n * r.numer()),
            &self.den * r.denom(),
        )
    }

    /// Galois conjugate with √2 ↦ −√2.
    pub fn conj2(&self) -> Self {
        let [a, b, c, d] = self.num.clone();
        FieldScalar { num: [a, -b, c, -d], den: self.den.clone() }
    }

    /// Galois conjugate with √3 ↦ −√3.
    pub fn conj3(&self) -> Self {
        let [a, b, c, d] = self.num.clone();
        FieldScalar { num: [a, b, -c, -d], den: self.den.clone() }
    }

    /// Product of all four conjugates, a rational number.
    pub fn norm(&self) -> Rational {
        let (p, q) = self.norm_to_sqrt3();
        let n = &p * &p - BigInt::from(3) * &q * &q;
        Rational::new(n, num_traits::pow(self.den.clone(), 4))
    }

    // den²·x·conj2(x) = (a + c√3)² − 2(b + d√3)² on the numerators, as p + q√3.
    fn norm_to_sqrt3(&self) -> (BigInt, BigInt) {
        let [a, b, c, d] = &self.num;
        let p = a * a + BigInt::from(3) * c * c - BigInt::from(2) * (b * b + BigInt::from(3) * d * d);
        let q = BigInt::from(2) * a * c - BigInt::from(4) * b * d;
        (p, q)
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.a())
            + rational::to_f64(&self.b()) * std::f64::consts::SQRT_2
            + rational::to_f64(&self.c()) * 3f64.sqrt()
            + rational::to_f64(&self.d()) * 6f64.sqrt()
    }

    /// Parses sums of terms such as `-4√3/9`, `1/2 - √3/2` or `2sqrt6`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = |reason: &str| ExactError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let cleaned: String = s.replace("sqrt", "√").chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.replace("+-", "-").replace("--", "+");
        if cleaned.is_empty() {
            return Err(err("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);
        let mut acc = FieldScalar::zero();
        for term in terms {
            acc = acc + parse_term(term).ok_or_else(|| err("unrecognized term"))?;
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Option<FieldScalar> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (numer_part, denom) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let (coef, radical) = match numer_part.split_once('√') {
        Some((c, r)) => (c, Some(r)),
        None => (numer_part, None),
    };
    let mut value = if coef.is_empty() {
        radical?;
        rational::from_i64(1)
    } else {
        rational::parse(coef).ok()?
    };
    if let Some(d) = denom {
        let d = rational::parse(d).ok()?;
        if Zero::is_zero(&d) {
            return None;
        }
        value /= d;
    }
    if neg {
        value = -value;
    }
    let basis = match radical {
        None | Some("1") => FieldScalar::int(1),
        Some("2") => FieldScalar::sqrt2(),
        Some("3") => FieldScalar::sqrt3(),
        Some("6") => FieldScalar::sqrt6(),
        Some("4") => FieldScalar::int(2),
        Some("9") => FieldScalar::int(3),
        _ => return None,
    };
    Some(basis.scale(&value))
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: &mut bool, coef: &Rational, radical: &str) -> fmt::Result {
    if Zero::is_zero(coef) {
        return Ok(());
    }
    let sign = if coef.is_negative() { "-" } else { "+" };
    if *first {
        if coef.is_negative() {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    *first = false;
    let abs = coef.abs();
    let numer = abs.numer();
    let denom = abs.denom();
    if radical.is_empty() {
        write!(f, "{abs}")
    } else {
        if !numer.is_one() {
            write!(f, "{numer}")?;
        }
        write!(f, "√{radical}")?;
        if !denom.is_one() {
            write!(f, "/{denom}")?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Field::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        fmt_term(f, &mut first, &self.a(), "")?;
        fmt_term(f, &mut first, &self.b(), "2")?;
        fmt_term(f, &mut first, &self.c(), "3")?;
        fmt_term(f, &mut first, &self.d(), "6")
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&FieldScalar> for FieldScalar {
    type Output = FieldScalar;
    fn add(self, o: &FieldScalar) -> FieldScalar {
        if self.den == o.den {
            let [a, b, c, d] = self.num;
            return Self::reduced([a + &o.num[0], b + &o.num[1], c + &o.num[2], d + &o.num[3]], self.den);
        }
        let num = std::array::from_fn(|k| &self.num[k] * &o.den + &o.num[k] * &self.den);
        Self::reduced(num, &self.den * &o.den)
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, o: FieldScalar) -> FieldScalar {
        self + &o
    }
}

impl Add<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, o: &FieldScalar) -> FieldScalar {
        self.clone() + o
    }
}

impl Sub<&FieldScalar> for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, o: &FieldScalar) -> FieldScalar {
        self + &(-o)
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, o: FieldScalar) -> FieldScalar {
        self - &o
    }
}

impl Sub<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, o: &FieldScalar) -> FieldScalar {
        self.clone() - o
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            num: self.num.map(|n| -n),
            den: self.den,
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -(self.clone())
    }
}

impl Mul<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6·√6 = 6
    fn mul(self, o: &FieldScalar) -> FieldScalar {
        if self.is_rational() && o.is_rational() {
            let num = [&self.num[0] * &o.num[0], BigInt::zero(), BigInt::zero(), BigInt::zero()];
            return FieldScalar::reduced(num, &self.den * &o.den);
        }
        let [a, b, c, d] = &self.num;
        let [e, f, g, h] = &o.num;
        let one_part = a * e + ((b * f) << 1) + BigInt::from(3) * c * g + BigInt::from(6) * d * h;
        let s2 = a * f + b * e + BigInt::from(3) * (c * h + d * g);
        let s3 = a * g + c * e + ((b * h + d * f) << 1);
        let s6 = a * h + d * e + b * g + c * f;
        FieldScalar::reduced([one_part, s2, s3, s6], &self.den * &o.den)
    }
}

impl Mul<&FieldScalar> for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, o: &FieldScalar) -> FieldScalar {
        &self * o
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, o: FieldScalar) -> FieldScalar {
        &self * &o
    }
}

impl Field for FieldScalar {
    fn zero() -> Self {
        FieldScalar::from_rational(Zero::zero())
    }

    fn one() -> Self {
        FieldScalar::int(1)
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Multiplies by the three nontrivial conjugates so the denominator is rational.
    fn inv(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(FieldScalar::reduced(
                [self.den.clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
                self.num[0].clone(),
            ));
        }
        // x⁻¹ = conj2(x)·(p − q√3)/(p² − 3q²) with den²·x·conj2(x) = p + q√3
        let (p, q) = self.norm_to_sqrt3();
        let n = &p * &p - BigInt::from(3) * &q * &q;
        let rest = FieldScalar {
            num: [p, BigInt::zero(), -q, BigInt::zero()],
            den: BigInt::one(),
        };
        let conj = FieldScalar {
            num: self.conj2().num,
            den: BigInt::one(),
        };
        let out = &conj * &rest;
        Ok(FieldScalar::reduced(out.num.map(|v| v * &self.den), n))
    }

    fn from_i64(n: i64) -> Self {
        FieldScalar::int(n)
    }
}

impl FromScalar for FieldScalar {
    fn from_scalar(x: &FieldScalar) -> Self {
        x.clone()
    }
}

#[derive(Serialize, Deserialize)]
struct Coordinates {
    #[serde(with = "rational::serde_str")]
    a: Rational,
    #[serde(with = "rational::serde_str")]
    b: Rational,
    #[serde(with = "rational::serde_str")]
    c: Rational,
    #[serde(with = "rational::serde_str")]
    d: Rational,
}

impl Serialize for FieldScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Coordinates {
            a: self.a(),
            b: self.b(),
            c: self.c(),
            d: self.d(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarInput {
    Coordinates(Coordinates),
    Text(String),
    Integer(i64),
}

/// Accepts the coordinate object as well as the textual form (`"-4√3/9"`) or
/// a bare integer, so hand-written data files stay readable.
impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ScalarInput::deserialize(d)? {
            ScalarInput::Coordinates(c) => Ok(FieldScalar::new(c.a, c.b, c.c, c.d)),
            ScalarInput::Text(t) => FieldScalar::parse(&t).map_err(serde::de::Error::custom),
            ScalarInput::Integer(n) => Ok(FieldScalar::int(n)),
        }
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        FieldScalar::from_rational(r)
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        FieldScalar::int(n)
    }
}
