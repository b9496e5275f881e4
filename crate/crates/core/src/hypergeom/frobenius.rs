use kzr_exact::rational::{from_i64, is_integer, to_i64};
use kzr_exact::{Field, FieldScalar, Poly, Rational, RationalFunction};

use super::{gauss_residual, indicial_exponents, kz_hg_params, lowest_coefficient, HGParams, SolutionPair};
use super::hermite::integrate_rational;
use crate::{KzError, Result};

/// First `terms` coefficients of the Frobenius series `v^r Σ c_k v^k`, `c_0 = 1`,
/// from `c_{k+1}(k+1+r)(k+r+γ) = c_k(k+r+α)(k+r+β)`. A coefficient left free
/// by a resonance is set to 0; `None` means the recurrence is inconsistent at
/// this exponent (a logarithmic solution).
pub fn frobenius_series(p: &HGParams, r: &Rational, terms: usize) -> Option<Vec<Rational>> {
    let mut c = Vec::with_capacity(terms);
    c.push(Rational::one());
    for k in 0..terms.saturating_sub(1) {
        let k = from_i64(k as i64) + r;
        let lhs = (&k + Rational::one()) * (&k + &p.gamma);
        let rhs = &c[c.len() - 1] * (&k + &p.alpha) * (&k + &p.beta);
        if lhs.is_zero() {
            if !rhs.is_zero() {
                return None;
            }
            c.push(Rational::zero());
        } else {
            c.push(rhs / lhs);
        }
    }
    Some(c)
}

fn to_poly(c: &[Rational]) -> Poly<FieldScalar> {
    Poly::new(c.iter().cloned().map(FieldScalar::from_rational).collect())
}

fn one_minus_v_pow(b: usize) -> Poly<FieldScalar> {
    Poly::new(vec![FieldScalar::one(), -FieldScalar::one()]).pow(b as u32)
}

fn v_pow(e: usize) -> Poly<FieldScalar> {
    Poly::monomial(FieldScalar::one(), e)
}

/// Looks for `(1 − v)^b · series` collapsing to a polynomial of degree at most
/// `bound`, for `b = 0..=bound`; every hit is confirmed by the exact residual.
fn detect_rational(p: &HGParams, r: i64, coeffs: &[Rational], bound: usize) -> Option<RationalFunction> {
    let series = to_poly(coeffs);
    let window = coeffs.len();
    for b in 0..=bound {
        let product = &series * &one_minus_v_pow(b);
        let truncated: Vec<FieldScalar> = product.coeffs().iter().take(window).cloned().collect();
        let Some(last) = truncated.iter().rposition(|c| !c.is_zero()) else {
            continue;
        };
        if last > bound || window - last <= bound {
            continue;
        }
        let mut num = Poly::new(truncated[..=last].to_vec());
        let mut den = one_minus_v_pow(b);
        if r >= 0 {
            num = &num * &v_pow(r as usize);
        } else {
            den = &den * &v_pow((-r) as usize);
        }
        let candidate = RationalFunction::new(num, den).expect("nonzero denominator");
        if gauss_residual(&candidate, p).is_zero() {
            return Some(candidate);
        }
    }
    None
}

fn normalized(f: RationalFunction) -> RationalFunction {
    let lead = lowest_coefficient(&f);
    f.scale(&lead.inv().expect("nonzero solution"))
}

/// Second solution `ψ₁ ∫ Wr/ψ₁²` with `Wr = v^{−γ}(1 − v)^{γ−α−β−1}`, provided
/// the integral is rational; scaled so its lowest Laurent coefficient is 1.
pub fn reduction_of_order(psi1: &RationalFunction, p: &HGParams) -> Result<RationalFunction> {
    let e0 = -p.gamma.clone();
    let e1 = &p.gamma - &p.alpha - &p.beta - Rational::one();
    let (Some(e0), Some(e1)) = (to_i64(&e0), to_i64(&e1)) else {
        return Err(KzError::Parameter("reduction of order needs integer exponents".into()));
    };
    let power = |base: Poly<FieldScalar>, e: i64| {
        let p = base.pow(e.unsigned_abs() as u32);
        if e >= 0 {
            RationalFunction::from_poly(p)
        } else {
            RationalFunction::new(Poly::one(), p).expect("nonzero")
        }
    };
    let wr = power(Poly::x(), e0) * &power(Poly::new(vec![FieldScalar::one(), -FieldScalar::one()]), e1);
    let integrand = wr * &(psi1.clone() * psi1).inv()?;
    let Some(integral) = integrate_rational(&integrand) else {
        return Err(KzError::Domain("the reduction-of-order integral has a logarithmic part".into()));
    };
    let psi2 = psi1.clone() * &integral;
    if psi2.is_zero() {
        return Err(KzError::Domain("reduction of order produced zero".into()));
    }
    Ok(normalized(psi2))
}

/// Degree bound for the rational search at coupling `ρ`.
pub fn degree_bound(rho: i64) -> usize {
    6 * rho.unsigned_abs() as usize + 4
}

/// Two linearly independent rational solutions of the Gauss equation with
/// parameters `(−ρ, −3ρ, 1 − 2ρ)`.
///
/// Each indicial exponent (0 and 2ρ) is seeded and its recurrence run exactly;
/// the resulting series is accepted once it is recognised as a polynomial or
/// as a polynomial over a power of `1 − v` and the candidate passes the exact
/// residual check. If the second exponent yields nothing independent, the
/// second solution comes from reduction of order with a rational integral.
///
/// `ψ₁` is the exponent-0 solution with `ψ₁(0) = 1`; `ψ₂` has lowest Laurent
/// coefficient 1.
pub fn frobenius_rational_solutions(rho: i64) -> Result<SolutionPair> {
    if rho == 0 {
        return Err(KzError::ZeroRho);
    }
    let p = kz_hg_params(&from_i64(rho));
    let bound = degree_bound(rho);
    let terms = 3 * bound + 3;
    let (r0, r1) = indicial_exponents(&p);
    let mut found: Vec<RationalFunction> = Vec::new();
    for r in [r0, r1] {
        debug_assert!(is_integer(&r));
        let r_int = to_i64(&r).expect("integer exponent");
        if let Some(coeffs) = frobenius_series(&p, &r, terms) {
            if let Some(sol) = detect_rational(&p, r_int, &coeffs, bound) {
                found.push(sol);
            }
        }
    }
    let psi1 = match found.first() {
        Some(f) => normalized(f.clone()),
        None => return Err(KzError::NoRationalSolution(bound)),
    };
    let independent = found.get(1).filter(|f| {
        let pair = SolutionPair {
            params: p.clone(),
            psi1: psi1.clone(),
            psi2: (*f).clone(),
        };
        !pair.wronskian().is_zero()
    });
    let psi2 = match independent {
        Some(f) => normalized(f.clone()),
        None => reduction_of_order(&psi1, &p).map_err(|_| KzError::NoRationalSolution(bound))?,
    };
    let pair = SolutionPair { params: p, psi1, psi2 };
    pair.check()?;
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kzr_exact::rational::ratio;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn rho_minus_one_pair() {
        let pair = frobenius_rational_solutions(-1).unwrap();
        assert_eq!(pair.psi1, rf(&[1], &[1, -1]));
        assert_eq!(pair.psi2, rf(&[1, 1], &[0, 0, 1]));
    }

    #[test]
    fn series_of_one_over_one_minus_v() {
        let c = frobenius_series(&HGParams::from_ints(1, 3, 3), &from_i64(0), 6).unwrap();
        assert!(c.iter().all(|x| *x == Rational::one()));
        // ₂F₁(1,1;2;v) = Σ v^k/(k+1)
        let c = frobenius_series(&HGParams::from_ints(1, 1, 2), &from_i64(0), 5).unwrap();
        assert_eq!(c[4], ratio(1, 5));
    }

    #[test]
    fn logarithmic_exponent_is_rejected() {
        // at r = 1 − γ = −1 the first step reads 0·c_1 = (α−1)(β−1)c_0 ≠ 0
        assert!(frobenius_series(&HGParams::from_ints(2, 2, 2), &from_i64(-1), 4).is_none());
    }

    #[test]
    fn reduction_of_order_recovers_the_laurent_solution() {
        let p = HGParams::from_ints(1, 3, 3);
        let psi2 = reduction_of_order(&rf(&[1], &[1, -1]), &p).unwrap();
        // independent of 1/(1−v) and normalized at its v^{-2} coefficient
        let pair = SolutionPair {
            params: p,
            psi1: rf(&[1], &[1, -1]),
            psi2: psi2.clone(),
        };
        pair.check().unwrap();
        assert_eq!(lowest_coefficient(&psi2), FieldScalar::one());
    }

    #[test]
    fn reduction_of_order_for_positive_rho() {
        for rho in 1..=3 {
            let p = kz_hg_params(&from_i64(rho));
            let psi1 = frobenius_rational_solutions(rho).unwrap().psi1;
            let psi2 = reduction_of_order(&psi1, &p).unwrap();
            SolutionPair { params: p, psi1, psi2 }.check().unwrap();
        }
    }

    #[test]
    fn log_case_has_no_rational_second_solution() {
        // ₂F₁(1,1;2;v) = −ln(1−v)/v is not rational, and neither is the
        // reduction-of-order partner of the polynomial solution 1 of (0,0,1)
        let p = HGParams::from_ints(0, 0, 1);
        assert!(reduction_of_order(&rf(&[1], &[1]), &p).is_err());
    }

    #[test]
    fn zero_rho_is_rejected() {
        assert!(matches!(frobenius_rational_solutions(0), Err(KzError::ZeroRho)));
    }
}
