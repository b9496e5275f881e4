use kzr_exact::rational::to_i64;
use kzr_exact::{pow_i, Field, FieldScalar, FromScalar, Matrix, Poly, Rational, RationalFunction};

use super::{describe, EquationId, Mode, ResidualReport, Sample};
use crate::hypergeom::{frobenius_rational_solutions, gauss_residual, reflect, SolutionPair};
use crate::kzcore::reduced_h;
use crate::kzsolve::{frame_on_line, ExactFrame};
use crate::symrep::builtin_s4_22;
use crate::{KzError, Result};

type RfMatrix = Matrix<RationalFunction>;

fn derivative(m: &RfMatrix) -> RfMatrix {
    m.map(|f| f.derivative())
}

fn finish(mut report: ResidualReport, residual: &RfMatrix) -> ResidualReport {
    let zero = residual.is_zero();
    if !zero {
        for (k, f) in residual.entries().iter().enumerate() {
            if !f.is_zero() {
                report.notes.push(format!("entry ({}, {}): {f}", k / residual.cols(), k % residual.cols()));
            }
        }
    }
    report.exact_zero = Some(zero);
    report.passed = zero;
    report
}

fn rf(c: &FieldScalar) -> RationalFunction {
    RationalFunction::from_scalar(c)
}

fn rho_scalar(rho: &Rational) -> RationalFunction {
    rf(&FieldScalar::from_rational(rho.clone()))
}

fn integer_rho(rho: &Rational) -> Result<i64> {
    to_i64(rho).ok_or_else(|| KzError::NonIntegerRho(rho.to_string()))
}

/// Restricts `frame` to a line, differentiates formally and returns the
/// exact residual of `equation`.
///
/// `fixed` is `z` for the `u₂`-equations and `y` for the `u₃`-equations;
/// boundary equations require `fixed = 0`.
pub fn exact_line_residual(frame: &ExactFrame, equation: EquationId, fixed: &FieldScalar) -> Result<ResidualReport> {
    let rep = builtin_s4_22();
    let rho = frame.rho().clone();
    let r = integer_rho(&rho)?;
    let x = RationalFunction::x();
    let c = rf(fixed);
    let one = RationalFunction::one();
    let p = |a: usize, b: usize| rep.get(a, b).expect("complete").lift::<RationalFunction>();
    let id = Matrix::<RationalFunction>::identity(2);
    let mut report = ResidualReport::new(equation, Mode::ExactLine, describe(frame));
    let residual = match equation {
        EquationId::KzU2 => {
            report.samples.push(Sample { z: Some(fixed.to_string()), ..Sample::default() });
            let w = frame_on_line(frame, None, Some(fixed))?;
            let (h2, _) = reduced_h(&rep, &x, &c)?;
            &derivative(&w) - &(&h2 * &w).scale(&rho_scalar(&rho))
        }
        EquationId::KzU3 | EquationId::KzU3Boundary => {
            if equation == EquationId::KzU3Boundary && !fixed.is_zero() {
                return Err(KzError::Parameter("the boundary equation lives on y = 0".into()));
            }
            report.samples.push(Sample { y: Some(fixed.to_string()), ..Sample::default() });
            let w = frame_on_line(frame, Some(fixed), None)?;
            let (_, h3) = reduced_h(&rep, &c, &x)?;
            &derivative(&w) - &(&h3 * &w).scale(&rho_scalar(&rho))
        }
        EquationId::GaugedU2 => {
            report.samples.push(Sample { z: Some(fixed.to_string()), ..Sample::default() });
            let w = frame_on_line(frame, None, Some(fixed))?;
            let y1 = one.clone() + &x;
            let q = y1.clone() + &(x.clone() * &c);
            let f = w.scale(&(pow_i(&y1, r)? * &pow_i(&q, r)?));
            let coef = &(&p(1, 3) + &id).scale(&y1.inv()?)
                + &(&p(1, 4) + &id).scale(&((one.clone() + &c) * &q.inv()?));
            &derivative(&f) - &(&coef * &f).scale(&rho_scalar(&rho))
        }
        EquationId::GaugedU3Boundary => {
            if !fixed.is_zero() {
                return Err(KzError::Parameter("the boundary equation lives on y = 0".into()));
            }
            report.samples.push(Sample { y: Some("0".into()), ..Sample::default() });
            let w = frame_on_line(frame, Some(fixed), None)?;
            let z1 = one.clone() + &x;
            let g = w.scale(&(pow_i(&x, r)? * &pow_i(&z1, r)?));
            let coef = &(&p(4, 3) + &id).scale(&x.inv()?) + &(&p(4, 2) + &id).scale(&z1.inv()?);
            &derivative(&g) - &(&coef * &g).scale(&rho_scalar(&rho))
        }
        other => {
            return Err(KzError::Parameter(format!("{other} is a scalar equation; use scalar_ode_checks")));
        }
    };
    Ok(finish(report, &residual))
}

fn scalar_report(equation: EquationId, subject: String, sample: Sample, residuals: &[RationalFunction]) -> ResidualReport {
    let mut report = ResidualReport::new(equation, Mode::ExactLine, subject);
    report.samples.push(sample);
    let m = Matrix::column_vector(residuals.to_vec());
    finish(report, &m)
}

fn poly(c: &[FieldScalar]) -> RationalFunction {
    RationalFunction::from_poly(Poly::new(c.to_vec()))
}

/// Second-order operator `a φ″ + b φ′ + c φ`.
fn second_order(a: &RationalFunction, b: &RationalFunction, c: &RationalFunction, phi: &RationalFunction) -> RationalFunction {
    let d1 = phi.derivative();
    let d2 = d1.derivative();
    a.clone() * &d2 + &(b.clone() * &d1) + &(c.clone() * phi)
}

/// Substitutes the rational solutions into every scalar reduction:
/// the `ρ = −1` boundary equation with its two displayed solutions, the
/// `y`-equations for the transported pair on three lines, the `v`- and Gauss
/// equations, and the boundary first-order system.
pub fn scalar_ode_checks(rho: &Rational) -> Result<Vec<ResidualReport>> {
    let r = integer_rho(rho)?;
    let pair: SolutionPair = frobenius_rational_solutions(r)?;
    let subject = |what: &str| format!("{what}, rho = {rho}");
    let q = |p: i64, d: i64| FieldScalar::ratio(p, d);
    let k = |c: FieldScalar| rf(&c);
    let x = RationalFunction::x();
    let one = RationalFunction::one();
    let rho_c = FieldScalar::from_rational(rho.clone());
    let rho_f = k(rho_c.clone());
    let sqrt3_rho = k(FieldScalar::sqrt3() * &rho_c);
    let three_rho2 = k(rho_c.clone() * &rho_c * &FieldScalar::int(3));
    let mut out = Vec::new();

    // ρ = −1 boundary equation and its displayed solutions
    let a = poly(&[q(0, 1), q(1, 1), q(1, 1)]);
    let b = poly(&[q(3, 1), q(5, 1)]);
    let phi11 = RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, 1]))?;
    let phi12 = RationalFunction::new(Poly::from_ints(&[1, -1]), Poly::from_ints(&[0, 0, 1]))?;
    let residuals = [second_order(&a, &b, &k(q(3, 1)), &phi11), second_order(&a, &b, &k(q(3, 1)), &phi12)];
    let mut report = scalar_report(
        EquationId::ScalarZRhoMinusOne,
        "1/(1+z) and (1-z)/z^2".into(),
        Sample::default(),
        &residuals,
    );
    // the general boundary coefficient 1 + z − 2ρ(1+2z) at ρ = −1
    let general = poly(&[q(1, 1) + &q(2, 1), q(1, 1) + &q(4, 1)]);
    if general != b {
        report.passed = false;
        report.notes.push("coefficient mismatch with the general boundary equation".into());
    }
    out.push(report);

    // Gauss equation and the v-equation for ψ and φ(v) = ψ(−v)
    let residuals: Vec<_> = pair.members().iter().map(|psi| gauss_residual(psi, &pair.params)).collect();
    out.push(scalar_report(EquationId::Gauss, subject("rational pair"), Sample::default(), &residuals));
    let av = poly(&[q(0, 1), q(1, 1), q(1, 1)]);
    let bv = one.clone() + &x - &(rho_f.clone() * &k(q(2, 1)) * &(one.clone() + &x.scale(&q(2, 1))));
    let residuals: Vec<_> = pair
        .members()
        .iter()
        .map(|psi| second_order(&av, &bv, &three_rho2, &reflect(psi)))
        .collect();
    out.push(scalar_report(EquationId::ScalarV, subject("reflected pair"), Sample::default(), &residuals));

    // y-equations on lines z = 7/5, 1/2, 3 with φ₁(y) = ψ((y+1)(z+1)/z)
    for z in [q(7, 5), q(1, 2), q(3, 1)] {
        let zc = k(z.clone());
        let z1 = one.clone() + &zc;
        let y1 = one.clone() + &x;
        let qy = y1.clone() + &(x.clone() * &zc);
        let t = y1.clone() * &z1 * &zc.inv()?;
        let sample = Sample { z: Some(z.to_string()), ..Sample::default() };
        let mut phi_res = Vec::new();
        let mut scalar_res = Vec::new();
        let mut first_res = Vec::new();
        for psi in pair.members() {
            let phi1 = psi.compose(&t)?;
            let phi2 = -(y1.clone() * &phi1.derivative() * &sqrt3_rho.inv()?);
            first_res.push(phi1.derivative() + &(sqrt3_rho.clone() * &phi2 * &y1.inv()?));
            let rhs = rho_f.clone()
                * &(phi2.clone() * &k(q(2, 1)) * &y1.inv()?
                    + &((phi2.clone() * &k(q(2, 1)) + &(k(FieldScalar::sqrt3()) * &phi1)) * &z1 * &qy.inv()?));
            phi_res.push(phi2.derivative() - &rhs);
            let s = z1.inv()? + &x;
            let bcoef = s.clone() - &(rho_f.clone() * &k(q(2, 1)) * &(s.clone() * &k(q(2, 1)) + &(zc.clone() * &z1.inv()?)));
            scalar_res.push(second_order(&(y1.clone() * &s), &bcoef, &three_rho2, &phi1));
        }
        out.push(scalar_report(EquationId::Phi1Y, subject("transported pair"), sample.clone(), &first_res));
        out.push(scalar_report(EquationId::Phi2Y, subject("transported pair"), sample.clone(), &phi_res));
        out.push(scalar_report(EquationId::ScalarY, subject("transported pair"), sample, &scalar_res));
    }

    // boundary: φ₁(z) = ψ(−z), φ₂ = zφ₁′/(√3ρ)
    let z1 = one.clone() + &x;
    let az = x.clone() * &z1;
    let bz = z1.clone() - &(rho_f.clone() * &k(q(2, 1)) * &(one.clone() + &x.scale(&q(2, 1))));
    let mut sys_res = Vec::new();
    let mut scalar_res = Vec::new();
    for psi in pair.members() {
        let phi1 = reflect(psi);
        let phi2 = x.clone() * &phi1.derivative() * &sqrt3_rho.inv()?;
        sys_res.push(phi1.derivative() - &(sqrt3_rho.clone() * &phi2 * &x.inv()?));
        let rhs = rho_f.clone()
            * &(phi2.clone() * &k(q(2, 1)) * &x.inv()? + &(phi2.clone() * &k(q(2, 1)) * &z1.inv()?)
                - &(k(FieldScalar::sqrt3()) * &phi1 * &z1.inv()?));
        sys_res.push(phi2.derivative() - &rhs);
        scalar_res.push(second_order(&az, &bz, &three_rho2, &phi1));
    }
    out.push(scalar_report(EquationId::PhiZ, subject("reflected pair"), Sample::default(), &sys_res));
    out.push(scalar_report(EquationId::ScalarZ, subject("reflected pair"), Sample::default(), &scalar_res));
    Ok(out)
}
