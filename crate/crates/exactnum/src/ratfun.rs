//! Rational functions in one variable over Q(√2,√3).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{Field, FromScalar};
use crate::{ExactError, FieldScalar, Poly, Rational, Result};

/// `numerator / denominator`, always stored reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly<FieldScalar>,
    den: Poly<FieldScalar>,
}

impl RationalFunction {
    pub fn new(num: Poly<FieldScalar>, den: Poly<FieldScalar>) -> Result<Self> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly<FieldScalar>, den: Poly<FieldScalar>) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    /// Re-runs normalization; a no-op on any value built through the public API.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn from_poly(p: Poly<FieldScalar>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: FieldScalar) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly<FieldScalar> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<FieldScalar> {
        &self.den
    }

    pub fn as_constant(&self) -> Option<FieldScalar> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(n, &self.den * &self.den)
    }

    pub fn eval(&self, x: &FieldScalar) -> Result<FieldScalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactError::Pole(x.to_string()));
        }
        self.num.eval(x).try_div(&d)
    }

    /// Evaluates in any field containing the coefficients, e.g. `f64` or
    /// another rational function (which gives composition).
    pub fn eval_in<T: FromScalar>(&self, x: &T) -> Result<T> {
        let d = self.den.eval_in(x);
        if d.is_zero() {
            return Err(ExactError::Pole(format!("{x:?}")));
        }
        self.num.eval_in(x).try_div(&d)
    }

    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        let d = self.den.eval_in(&x);
        if d == 0.0 {
            return Err(ExactError::Pole(x.to_string()));
        }
        Ok(self.num.eval_in(&x) / d)
    }

    pub fn compose(&self, inner: &RationalFunction) -> Result<Self> {
        self.eval_in(inner)
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num.coeffs(), self.den.coeffs())
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly<FieldScalar>) -> fmt::Result {
    let terms: Vec<(usize, &FieldScalar)> = p.coeffs().iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).collect();
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (pos, (k, c)) in terms.into_iter().enumerate() {
        let (negative, body) = match c.as_rational() {
            Some(r) if r < Rational::from_integer(0.into()) => (true, (-r).to_string()),
            Some(r) => (false, r.to_string()),
            None => (false, format!("({c})")),
        };
        match (pos, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let unit = body == "1";
        match k {
            0 => write!(f, "{body}")?,
            1 if unit => write!(f, "x")?,
            1 => write!(f, "{body}x")?,
            _ if unit => write!(f, "x^{k}")?,
            _ => write!(f, "{body}x^{k}")?,
        }
    }
    Ok(())
}

fn write_factor(f: &mut fmt::Formatter<'_>, p: &Poly<FieldScalar>) -> fmt::Result {
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
        write!(f, "(")?;
        write_poly(f, p)?;
        write!(f, ")")
    } else {
        write_poly(f, p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write_poly(f, &self.num);
        }
        write_factor(f, &self.num)?;
        write!(f, " / ")?;
        write_factor(f, &self.den)
    }
}

impl Add<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return Self::normalized(&self.num + &o.num, self.den);
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::normalized(n, &self.den * &o.den)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        self + &o
    }
}

impl Sub<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o.clone())
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        self - &o
    }
}

impl Mul<&RationalFunction> for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        Self::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        self * &o
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(FieldScalar::int(n))
    }
}

impl FromScalar for RationalFunction {
    fn from_scalar(x: &FieldScalar) -> Self {
        Self::constant(x.clone())
    }
}

#[derive(Serialize, Deserialize)]
struct Encoded {
    numerator: Poly<FieldScalar>,
    denominator: Poly<FieldScalar>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            numerator: self.num.clone(),
            denominator: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let e = Encoded::deserialize(d)?;
        RationalFunction::new(e.numerator, e.denominator).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1], &[1, -1]).to_string(), "-1 / (x - 1)");
        assert_eq!(rf(&[1, 1], &[0, 0, 1]).to_string(), "(x + 1) / x^2");
        assert_eq!(rf(&[0, 3, 0, -2], &[1]).to_string(), "-2x^3 + 3x");
        let sqrt = RationalFunction::from_scalar(&FieldScalar::sqrt3());
        assert_eq!((sqrt * &RationalFunction::x()).to_string(), "(√3)x");
    }

    #[test]
    fn derivatives() {
        // d/dz 1/(1+z) = −1/(1+z)²
        assert_eq!(rf(&[1], &[1, 1]).derivative(), rf(&[-1], &[1, 2, 1]));
        // d/dz (1−z)/z² = (z−2)/z³
        assert_eq!(rf(&[1, -1], &[0, 0, 1]).derivative(), rf(&[-2, 1], &[0, 0, 0, 1]));
    }

    #[test]
    fn evaluation_and_poles() {
        assert_eq!(rf(&[1], &[1, 1]).eval(&FieldScalar::int(1)).unwrap(), FieldScalar::ratio(1, 2));
        let err = rf(&[1], &[1, 1]).eval(&FieldScalar::int(-1)).unwrap_err();
        assert_eq!(err, ExactError::Pole("-1".into()));
        assert!((rf(&[1], &[1, 1]).eval_f64(3.0).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn reduces_on_construction() {
        // (z²−1)/(2z−2) = (z+1)/2
        let r = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(r.denominator(), &Poly::from_ints(&[1]));
        assert_eq!(r.numerator(), &Poly::new(vec![FieldScalar::ratio(1, 2), FieldScalar::ratio(1, 2)]));
        assert!(RationalFunction::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn composition() {
        // 1/(1+z) at z = 1/x is x/(x+1)
        let inner = RationalFunction::x().inv().unwrap();
        assert_eq!(rf(&[1], &[1, 1]).compose(&inner).unwrap(), rf(&[0, 1], &[1, 1]));
    }
}
