use kzr_exact::rational::{from_f64_rounded, ratio, serde_str, to_f64};
use kzr_exact::{FieldScalar, Matrix, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{EquationId, Mode, Precision, ResidualReport, Sample};
use crate::kzcore::reduced_h;
use crate::kzsolve::SolutionFrame;
use crate::symrep::{builtin_s4_22, Representation};
use crate::{KzError, Result};

/// Minimum distance to the loci `y = −1`, `z = 0`, `z = −1`, `1 + y + yz = 0`.
pub const POLE_MARGIN: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    #[serde(with = "serde_str")]
    pub y: Rational,
    #[serde(with = "serde_str")]
    pub z: Rational,
}

impl GridPoint {
    pub fn new(y: Rational, z: Rational) -> Self {
        GridPoint { y, z }
    }
}

/// The 5×5 grid on `[1/2, 3/2]²` with spacing 1/4.
pub fn default_grid() -> Vec<GridPoint> {
    let ticks: Vec<Rational> = (2..=6).map(|k| ratio(k, 4)).collect();
    ticks
        .iter()
        .flat_map(|y| ticks.iter().map(move |z| GridPoint::new(y.clone(), z.clone())))
        .collect()
}

/// Distance from `(y, z)` to the nearest singular locus of the reduced system.
pub fn pole_distance(y: f64, z: f64) -> f64 {
    [(y + 1.0).abs(), z.abs(), (z + 1.0).abs(), (1.0 + y + y * z).abs()]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

enum Outcome {
    /// Absolute residual and the frame's largest entry at the point.
    Residual(f64, f64),
    Skipped(String),
}

/// Frame values at `p` and at `p ± h` along the differentiated variable. Exact
/// frames are evaluated exactly at the rational abscissae and rounded once.
fn stencil(frame: &SolutionFrame, eq: EquationId, p: &GridPoint, h: &Rational) -> Result<[Matrix<f64>; 3]> {
    let shifted = |sign: i64| {
        let d = h * Rational::from_integer(sign.into());
        match eq {
            EquationId::KzU2 => (&p.y + &d, p.z.clone()),
            _ => (p.y.clone(), &p.z + &d),
        }
    };
    let at = |(y, z): (Rational, Rational)| -> Result<Matrix<f64>> {
        match frame.as_exact() {
            Some(f) => Ok(f.eval(&FieldScalar::from_rational(y), &FieldScalar::from_rational(z))?.to_f64()),
            None => frame.eval_f64(to_f64(&y), to_f64(&z)),
        }
    };
    Ok([at(shifted(-1))?, at(shifted(0))?, at(shifted(1))?])
}

fn residual_double(frame: &SolutionFrame, rep: &Representation, eq: EquationId, p: &GridPoint, h: &Rational) -> Result<(f64, f64)> {
    let [minus, w, plus] = stencil(frame, eq, p, h)?;
    let dw = (&plus - &minus).scale(&(0.5 / to_f64(h)));
    let (h2, h3) = reduced_h(rep, &to_f64(&p.y), &to_f64(&p.z))?;
    let coef = if eq == EquationId::KzU2 { h2 } else { h3 };
    Ok(((&dw - &(&coef * &w).scale(&frame.rho_f64())).max_abs(), w.max_abs()))
}

fn residual_exact(frame: &SolutionFrame, rep: &Representation, eq: EquationId, p: &GridPoint, h: &Rational) -> Result<(f64, f64)> {
    let exact = frame.as_exact().expect("checked by caller");
    let c = |r: &Rational| FieldScalar::from_rational(r.clone());
    let (y, z) = (c(&p.y), c(&p.z));
    let hh = c(h);
    let (plus, minus) = match eq {
        EquationId::KzU2 => (exact.eval(&(&y + &hh), &z)?, exact.eval(&(&y - &hh), &z)?),
        _ => (exact.eval(&y, &(&z + &hh))?, exact.eval(&y, &(&z - &hh))?),
    };
    let inv_2h = c(&(Rational::from_integer(1.into()) / (h * Rational::from_integer(2.into()))));
    let dw = (&plus - &minus).scale(&inv_2h);
    let (h2, h3) = reduced_h(rep, &y, &z)?;
    let coef = if eq == EquationId::KzU2 { h2 } else { h3 };
    let w = exact.eval(&y, &z)?;
    let res = &dw - &(&coef * &w).scale(&c(exact.rho()));
    Ok((res.max_abs_by(FieldScalar::to_f64), w.max_abs_by(FieldScalar::to_f64)))
}

/// Central-difference residual `‖∂W − ρHW‖∞` of one equation at every grid
/// point, evaluated in parallel; the report lists points in sorted order.
/// A point passes when its residual is at most `tol · max(1, ‖W‖∞)`.
pub fn fd_grid_residual(
    frame: &SolutionFrame,
    equation: EquationId,
    grid: &[GridPoint],
    h: f64,
    tol: f64,
    precision: Precision,
) -> Result<ResidualReport> {
    if !matches!(equation, EquationId::KzU2 | EquationId::KzU3 | EquationId::KzU3Boundary) {
        return Err(KzError::Parameter(format!("no grid check for {equation}")));
    }
    if !(h > 0.0 && tol > 0.0) {
        return Err(KzError::Parameter("step and tolerance must be positive".into()));
    }
    let rep = builtin_s4_22();
    let mut report = ResidualReport::new(equation, Mode::FiniteDifference, super::frame_subject(frame));
    report.tolerance = Some(tol);
    report.step = Some(h);
    let precision = match (precision, frame.as_exact()) {
        (Precision::Exact, None) => {
            report.notes.push("numeric frame: exact precision unavailable, using double".into());
            Precision::Double
        }
        (p, _) => p,
    };
    let h_exact = from_f64_rounded(h, 15);
    let mut points: Vec<GridPoint> = grid
        .iter()
        .map(|p| {
            if equation == EquationId::KzU3Boundary {
                GridPoint::new(Rational::from_integer(0.into()), p.z.clone())
            } else {
                p.clone()
            }
        })
        .collect();
    points.sort();
    points.dedup();
    let margin = POLE_MARGIN.max(2.0 * h);
    let outcomes: Vec<Result<Outcome>> = points
        .par_iter()
        .map(|p| {
            let (y, z) = (to_f64(&p.y), to_f64(&p.z));
            if pole_distance(y, z) <= margin {
                return Ok(Outcome::Skipped(format!("skipped (y, z) = ({}, {}): within {margin:e} of a pole", p.y, p.z)));
            }
            let (r, scale) = match precision {
                Precision::Double => residual_double(frame, &rep, equation, p, &h_exact)?,
                Precision::Exact => residual_exact(frame, &rep, equation, p, &h_exact)?,
            };
            Ok(Outcome::Residual(r, scale))
        })
        .collect();
    let mut max = 0.0f64;
    let mut max_scaled = 0.0f64;
    for (p, outcome) in points.iter().zip(outcomes) {
        match outcome? {
            Outcome::Residual(r, scale) => {
                max = max.max(r);
                max_scaled = max_scaled.max(r / scale.max(1.0));
                report.samples.push(Sample {
                    y: Some(p.y.to_string()),
                    z: Some(p.z.to_string()),
                    residual: Some(r),
                });
            }
            Outcome::Skipped(note) => {
                report.skipped += 1;
                report.notes.push(note);
            }
        }
    }
    if report.samples.is_empty() {
        return Err(KzError::Domain("every grid point lies too close to a pole".into()));
    }
    report.max_abs_residual = Some(max);
    report.notes.push(format!("max residual relative to max(1, |W|): {max_scaled:e}"));
    report.passed = max_scaled <= tol;
    Ok(report)
}

/// Ratio of the maximal grid residual at step `h` to the one at `h/2`; close
/// to 4 for a second-order difference quotient applied to an exact solution.
pub fn fd_convergence_factor(
    frame: &SolutionFrame,
    equation: EquationId,
    grid: &[GridPoint],
    h: f64,
    precision: Precision,
) -> Result<f64> {
    let coarse = fd_grid_residual(frame, equation, grid, h, f64::MAX, precision)?;
    let fine = fd_grid_residual(frame, equation, grid, h / 2.0, f64::MAX, precision)?;
    let (a, b) = (coarse.max_abs_residual.unwrap_or(0.0), fine.max_abs_residual.unwrap_or(0.0));
    if b == 0.0 {
        return Err(KzError::Domain("residual vanished at the finer step".into()));
    }
    Ok(a / b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kzsolve::{compose_w, fundamental_w2, ExactFrame};
    use kzr_exact::rational::from_i64;

    #[test]
    fn default_grid_shape() {
        let g = default_grid();
        assert_eq!(g.len(), 25);
        assert_eq!(g[0], GridPoint::new(ratio(1, 2), ratio(1, 2)));
        assert_eq!(g[24], GridPoint::new(ratio(3, 2), ratio(3, 2)));
    }

    #[test]
    fn composed_frame_passes_on_default_grid() {
        let w = compose_w(&from_i64(-1)).unwrap();
        for eq in [EquationId::KzU2, EquationId::KzU3] {
            let r = fd_grid_residual(&w, eq, &default_grid(), 1e-6, 1e-8, Precision::Double).unwrap();
            assert!(r.passed, "{eq}: {:?}", r.max_abs_residual);
            assert_eq!(r.samples.len(), 25);
        }
    }

    #[test]
    fn boundary_frame_on_grid() {
        let w2 = fundamental_w2(&from_i64(-1)).unwrap();
        let r = fd_grid_residual(&w2, EquationId::KzU3Boundary, &default_grid(), 1e-6, 1e-8, Precision::Double).unwrap();
        assert!(r.passed);
        assert_eq!(r.samples.len(), 5);
    }

    #[test]
    fn constant_frame_fails() {
        let frame = SolutionFrame::Exact(ExactFrame::constant(Matrix::identity(2), &from_i64(-1)));
        let r = fd_grid_residual(&frame, EquationId::KzU2, &default_grid(), 1e-6, 1e-8, Precision::Double).unwrap();
        assert!(!r.passed);
        assert!(r.max_abs_residual.unwrap() > 0.1);
    }

    #[test]
    fn poles_are_skipped() {
        let w = compose_w(&from_i64(-1)).unwrap();
        let grid = vec![GridPoint::new(ratio(1, 2), ratio(1, 2)), GridPoint::new(from_i64(-1), ratio(1, 2))];
        let r = fd_grid_residual(&w, EquationId::KzU2, &grid, 1e-6, 1e-8, Precision::Double).unwrap();
        assert_eq!(r.skipped, 1);
        let only_pole = vec![GridPoint::new(ratio(1, 2), from_i64(0))];
        assert!(fd_grid_residual(&w, EquationId::KzU2, &only_pole, 1e-6, 1e-8, Precision::Double).is_err());
    }

    #[test]
    fn exact_precision_mode() {
        let w = compose_w(&from_i64(-1)).unwrap();
        let grid: Vec<_> = default_grid().into_iter().step_by(6).collect();
        let r = fd_grid_residual(&w, EquationId::KzU3, &grid, 1e-6, 1e-8, Precision::Exact).unwrap();
        assert!(r.passed);
        assert!(r.max_abs_residual.unwrap() < 1e-10);
    }

    #[test]
    fn second_order_convergence() {
        let w = compose_w(&from_i64(-1)).unwrap();
        for eq in [EquationId::KzU2, EquationId::KzU3] {
            let f = fd_convergence_factor(&w, eq, &default_grid(), 1e-2, Precision::Double).unwrap();
            assert!((3.5..=4.5).contains(&f), "{eq}: {f}");
        }
    }
}
