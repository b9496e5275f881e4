use kzr_exact::rational::to_f64;
use kzr_exact::{Matrix, Rational};
use serde::{Deserialize, Serialize};

use super::{frame_subject, EquationId, Mode, ResidualReport, Sample};
use crate::kzcore::reduced_h;
use crate::kzsolve::{compose_w, SolutionFrame};
use crate::symrep::builtin_s4_22;
use crate::{KzError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RkOptions {
    /// Used as both relative and absolute local error tolerance.
    pub tol: f64,
    pub initial_step: f64,
    pub min_step: f64,
    pub max_steps: usize,
    /// Pass threshold for the relative Frobenius error at the endpoint.
    pub accept: f64,
}

impl Default for RkOptions {
    fn default() -> Self {
        RkOptions {
            tol: 1e-11,
            initial_step: 1e-3,
            min_step: 1e-14,
            max_steps: 1_000_000,
            accept: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RkSolution<const N: usize> {
    pub state: [f64; N],
    pub accepted: usize,
    pub rejected: usize,
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Adaptive Dormand–Prince 5(4) integration of `x' = f(t, x)` from `t0` to `t1`.
pub fn dormand_prince<const N: usize, F>(f: F, t0: f64, x0: [f64; N], t1: f64, opts: &RkOptions) -> Result<RkSolution<N>>
where
    F: Fn(f64, &[f64; N]) -> Result<[f64; N]>,
{
    if !(opts.tol > 0.0) {
        return Err(KzError::Parameter("integration tolerance must be positive".into()));
    }
    let mut out = RkSolution { state: x0, accepted: 0, rejected: 0 };
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(out);
    }
    let dir = span.signum();
    let mut t = t0;
    let mut h = opts.initial_step.abs().min(span.abs());
    let mut k = [[0.0; N]; 7];
    k[0] = f(t, &out.state)?;
    for _ in 0..opts.max_steps {
        if (t1 - t) * dir <= 0.0 {
            return Ok(out);
        }
        let last = h >= (t1 - t).abs();
        if last {
            h = (t1 - t).abs();
        }
        let hs = h * dir;
        for s in 1..7 {
            let mut xs = out.state;
            for (i, x) in xs.iter_mut().enumerate() {
                *x += hs * (0..s).map(|j| A[s][j] * k[j][i]).sum::<f64>();
            }
            k[s] = f(t + C[s] * hs, &xs)?;
        }
        let mut next = out.state;
        let mut err = 0.0;
        for i in 0..N {
            let hi = (0..7).map(|s| B5[s] * k[s][i]).sum::<f64>();
            let lo = (0..7).map(|s| B4[s] * k[s][i]).sum::<f64>();
            next[i] += hs * hi;
            let scale = opts.tol * (1.0 + out.state[i].abs().max(next[i].abs()));
            err += (hs * (hi - lo) / scale).powi(2);
        }
        let err = (err / N as f64).sqrt();
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        if err <= 1.0 {
            t = if last { t1 } else { t + hs };
            out.state = next;
            out.accepted += 1;
            k[0] = k[6];
        } else {
            out.rejected += 1;
        }
        h *= factor;
        if h < opts.min_step && (t1 - t) * dir > 0.0 {
            return Err(KzError::StepUnderflow(t));
        }
    }
    Err(KzError::StepUnderflow(t))
}

fn flatten(m: &Matrix<f64>) -> [f64; 4] {
    let e = m.entries();
    [e[0], e[1], e[2], e[3]]
}

/// Integrates `∂W/∂y = ρ H₂ W` along `y0 → y1` at fixed `z`, starting from the
/// frame's value at `y0`, and compares the endpoint with the frame itself.
pub fn rk_cross_check_frame(frame: &SolutionFrame, z: f64, y0: f64, y1: f64, opts: &RkOptions) -> Result<ResidualReport> {
    let rep = builtin_s4_22();
    let rho = frame.rho_f64();
    let start = frame.eval_f64(y0, z)?;
    let rhs = |y: f64, x: &[f64; 4]| -> Result<[f64; 4]> {
        let w = Matrix::new(2, 2, x.to_vec())?;
        let (h2, _) = reduced_h(&rep, &y, &z)?;
        Ok(flatten(&(&h2 * &w).scale(&rho)))
    };
    let solution = dormand_prince(rhs, y0, flatten(&start), y1, opts)?;
    let target = frame.eval_f64(y1, z)?;
    let integrated = Matrix::new(2, 2, solution.state.to_vec())?;
    let norm = target.frobenius_norm();
    if norm == 0.0 {
        return Err(KzError::SingularFrame(format!("frame vanishes at y = {y1}")));
    }
    let rel = (&integrated - &target).frobenius_norm() / norm;
    let mut report = ResidualReport::new(EquationId::KzU2, Mode::RkCompare, frame_subject(frame));
    report.tolerance = Some(opts.accept);
    report.max_abs_residual = Some(rel);
    report.samples.push(Sample { y: Some(y1.to_string()), z: Some(z.to_string()), residual: Some(rel) });
    report.notes.push(format!(
        "y from {y0} to {y1}, tol {:e}, {} accepted / {} rejected steps",
        opts.tol, solution.accepted, solution.rejected
    ));
    report.passed = rel <= opts.accept;
    Ok(report)
}

/// [`rk_cross_check_frame`] applied to the composed fundamental solution.
pub fn rk_cross_check(rho: &Rational, z: f64, y0: f64, y1: f64, opts: &RkOptions) -> Result<ResidualReport> {
    if to_f64(rho) == 0.0 {
        return Err(KzError::ZeroRho);
    }
    rk_cross_check_frame(&compose_w(rho)?, z, y0, y1, opts)
}
