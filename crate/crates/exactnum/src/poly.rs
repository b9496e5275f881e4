//! Dense univariate polynomials, coefficient index = degree.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{Field, FromScalar};
use crate::{ExactError, FieldScalar, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    /// Builds a polynomial, dropping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => Poly::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &F::from_i64(k as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Poly<F>) -> Poly<F> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// Euclidean division; errors when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let dd = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].clone() * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - &(c.clone() * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Pseudo-remainder `prem(a, b) = lc(b)^(deg a − deg b + 1)·a mod b`.
    pub fn pseudo_rem(&self, divisor: &Poly<F>) -> Result<Poly<F>> {
        let db = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok(Poly::zero());
        };
        if da < db {
            return Ok(self.clone());
        }
        let lc = divisor.coeffs[db].clone();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let shift = Poly::monomial(r.coeffs[dr].clone(), dr - db);
            r = &r.scale(&lc) - &(&shift * divisor);
            steps -= 1;
        }
        for _ in 0..steps {
            r = r.scale(&lc);
        }
        Ok(r)
    }

    /// Monic greatest common divisor by the subresultant remainder sequence.
    ///
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly<F>) -> Poly<F> {
        let (mut a, mut b) = match (self.degree(), other.degree()) {
            (None, None) => return Poly::zero(),
            (None, Some(_)) => return other.monic(),
            (Some(_), None) => return self.monic(),
            (Some(x), Some(y)) if x >= y => (self.clone(), other.clone()),
            _ => (other.clone(), self.clone()),
        };
        let mut g = F::one();
        let mut h = F::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b).expect("nonzero divisor");
            match r.degree() {
                None => return b.monic(),
                Some(0) => return Poly::one(),
                Some(_) => {}
            }
            let denom = g.clone() * &pow_u(&h, delta);
            a = b;
            b = r.scale(&denom.inv().expect("nonzero subresultant scale"));
            g = a.leading().unwrap().clone();
            // h ← g^δ / h^(δ−1)
            h = if delta == 0 {
                h
            } else {
                pow_u(&g, delta).try_div(&pow_u(&h, delta - 1)).expect("nonzero h")
            };
        }
    }

    /// Extended Euclid: returns `(s, t, g)` with `s·a + t·b = g = gcd(a, b)` monic.
    pub fn ext_gcd(a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                (s0.scale(&inv), t0.scale(&inv), r0.scale(&inv))
            }
            None => (s0, t0, r0),
        }
    }

    /// Solves `s·a + t·b = c` with `deg s < deg b` when `gcd(a, b) | c`.
    pub fn diophantine(a: &Poly<F>, b: &Poly<F>, c: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let (s, t, g) = Poly::ext_gcd(a, b);
        let (q, r) = c.div_rem(&g)?;
        if !r.is_zero() {
            return Err(ExactError::NotDivisible);
        }
        let mut s = &s * &q;
        let mut t = &t * &q;
        if b.degree().is_some_and(|db| s.degree().is_some_and(|ds| ds >= db)) {
            let (k, rem) = s.div_rem(b)?;
            s = rem;
            t = &t + &(&k * a);
        }
        Ok((s, t))
    }
}

fn pow_u<F: Field>(x: &F, e: usize) -> F {
    (0..e).fold(F::one(), |acc, _| acc * x)
}

impl Poly<FieldScalar> {
    /// Evaluates with coefficients embedded into `T`.
    pub fn eval_in<T: FromScalar>(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + &T::from_scalar(c))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| FieldScalar::int(c)).collect())
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: Poly<F>) -> Poly<F> {
        &self + &o
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: Poly<F>) -> Poly<F> {
        &self - &o
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: Poly<F>) -> Poly<F> {
        &self * &o
    }
}

impl<F: Serialize> Serialize for Poly<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de, F: Field + Deserialize<'de>> Deserialize<'de> for Poly<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::new(Vec::<F>::deserialize(d)?))
    }
}
