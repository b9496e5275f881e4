//! The Gauss hypergeometric layer: the parameter family `α = −ρ, β = −3ρ,
//! γ = 1 − 2ρ`, exact rational solution pairs for integer `ρ`, and numeric
//! evaluation for everything else.

mod frobenius;
mod hermite;
mod numeric;

pub use frobenius::{frobenius_rational_solutions, frobenius_series, reduction_of_order};
pub use hermite::{hermite_reduce, integrate_rational};
pub use numeric::{hg_series_eval, NumericPair, PsiValues};

use kzr_exact::rational::{from_i64, serde_str};
use kzr_exact::{Field, FieldScalar, Poly, Rational, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::{KzError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGParams {
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    #[serde(with = "serde_str")]
    pub beta: Rational,
    #[serde(with = "serde_str")]
    pub gamma: Rational,
}

impl HGParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        HGParams { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        HGParams::new(from_i64(alpha), from_i64(beta), from_i64(gamma))
    }
}

/// `(α, β, γ) = (−ρ, −3ρ, 1 − 2ρ)`.
pub fn kz_hg_params(rho: &Rational) -> HGParams {
    HGParams {
        alpha: -rho.clone(),
        beta: -(rho * from_i64(3)),
        gamma: Rational::one() - rho * from_i64(2),
    }
}

/// Exponents of the indicial equation `r(r − 1 + γ) = 0` at `v = 0`.
pub fn indicial_exponents(p: &HGParams) -> (Rational, Rational) {
    (Rational::from_integer(0.into()), Rational::one() - &p.gamma)
}

/// Left side `v(1−v)ψ″ + [γ − (α+β+1)v]ψ′ − αβψ` as an exact rational function.
pub fn gauss_residual(psi: &RationalFunction, p: &HGParams) -> RationalFunction {
    let c = |r: &Rational| FieldScalar::from_rational(r.clone());
    let second = Poly::new(vec![FieldScalar::zero(), FieldScalar::one(), -FieldScalar::one()]);
    let first = Poly::new(vec![
        c(&p.gamma),
        -c(&(&p.alpha + &p.beta + Rational::one())),
    ]);
    let d1 = psi.derivative();
    let d2 = d1.derivative();
    RationalFunction::from_poly(second) * &d2 + &(RationalFunction::from_poly(first) * &d1)
        - (psi.scale(&c(&(&p.alpha * &p.beta))))
}

/// `f(−v)`: the single place where the `ψ(v) = φ(−v)` transport happens.
pub fn reflect(f: &RationalFunction) -> RationalFunction {
    f.compose(&RationalFunction::x().scale(&-FieldScalar::one()))
        .expect("composition with a polynomial")
}

/// Two rational solutions of the Gauss equation in the variable `v`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionPair {
    pub params: HGParams,
    pub psi1: RationalFunction,
    pub psi2: RationalFunction,
}

impl SolutionPair {
    /// `ψ₁ψ₂′ − ψ₂ψ₁′`.
    pub fn wronskian(&self) -> RationalFunction {
        self.psi1.clone() * &self.psi2.derivative() - self.psi2.clone() * &self.psi1.derivative()
    }

    pub fn members(&self) -> [&RationalFunction; 2] {
        [&self.psi1, &self.psi2]
    }

    /// Both residuals vanish and the Wronskian does not.
    pub fn check(&self) -> Result<()> {
        for (k, psi) in self.members().into_iter().enumerate() {
            if !gauss_residual(psi, &self.params).is_zero() {
                return Err(KzError::Domain(format!("psi{} does not solve the Gauss equation", k + 1)));
            }
        }
        if self.wronskian().is_zero() {
            return Err(KzError::Domain("solutions are linearly dependent".into()));
        }
        Ok(())
    }
}

/// Coefficient of the lowest power of `v` in the Laurent expansion at 0.
pub(crate) fn lowest_coefficient(f: &RationalFunction) -> FieldScalar {
    let first = |p: &Poly<FieldScalar>| p.coeffs().iter().find(|c| !c.is_zero()).cloned();
    match (first(f.numerator()), first(f.denominator())) {
        (Some(n), Some(d)) => n * &d.inv().expect("nonzero"),
        _ => FieldScalar::zero(),
    }
}
