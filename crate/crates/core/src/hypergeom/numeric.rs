use kzr_exact::rational::{is_integer, to_f64};
use kzr_exact::{FieldScalar, Rational};
use num_traits::Signed;

use super::{HGParams, SolutionPair};
use crate::{KzError, Result};

const MAX_TERMS: usize = 1_000_000;
const SERIES_TOL: f64 = 1e-16;
const QUAD_TOL: f64 = 1e-14;
const QUAD_DEPTH: u32 = 40;

fn degenerate_gamma(gamma: &Rational) -> bool {
    is_integer(gamma) && !gamma.is_positive()
}

fn series(a: f64, b: f64, c: f64, v: f64, tol: f64) -> Result<f64> {
    let settle = 2.0 * a.abs().max(b.abs()).max(c.abs()) + 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let factor = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        term *= factor * v;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if kf > settle {
            // past this index the term ratio moves monotonically toward |v|
            let ratio = (factor * v).abs().max(v.abs());
            if ratio < 1.0 && term.abs() * ratio / (1.0 - ratio) < tol * sum.abs().max(1.0) {
                return Ok(sum);
            }
        }
    }
    Err(KzError::Domain(format!("series did not converge at v = {v}")))
}

/// Partial sums of `Σ (α)_k(β)_k / ((γ)_k k!) v^k` until the tail bound drops
/// below `tol`.
pub fn hg_series_eval(p: &HGParams, v: f64, tol: f64) -> Result<f64> {
    if !(v.abs() < 1.0) {
        return Err(KzError::Domain(format!("|v| = {} is not below 1", v.abs())));
    }
    if degenerate_gamma(&p.gamma) {
        return Err(KzError::Parameter(format!("gamma = {} is a nonpositive integer", p.gamma)));
    }
    series(to_f64(&p.alpha), to_f64(&p.beta), to_f64(&p.gamma), v, tol)
}

/// Values and first derivatives of the two members of a solution pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsiValues {
    pub psi: [f64; 2],
    pub dpsi: [f64; 2],
}

/// Floating-point solution pair of the Gauss equation for any `γ` that is
/// not a nonpositive integer, valid for `0 < |t| < 1`.
///
/// `ψ₁` is the hypergeometric series. `ψ₂ = k ψ₁ ∫_{t₀}^t Wr/ψ₁² + m ψ₁`
/// with `Wr = |s|^{−γ}|1 − s|^{γ−α−β−1}` and base `t₀ = ±1/3` on the side of
/// `t`; the constants `(k, m)` default to `(1, 0)` and can be matched to an
/// exact pair.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericPair {
    alpha: f64,
    beta: f64,
    gamma: f64,
    // (k, m) for t > 0 and t < 0
    sides: [(f64, f64); 2],
}

impl NumericPair {
    pub const BASE: f64 = 1.0 / 3.0;

    pub fn new(p: &HGParams) -> Result<Self> {
        if degenerate_gamma(&p.gamma) {
            return Err(KzError::Parameter(format!(
                "gamma = {} is a nonpositive integer; no analytic solution at 0",
                p.gamma
            )));
        }
        Ok(NumericPair {
            alpha: to_f64(&p.alpha),
            beta: to_f64(&p.beta),
            gamma: to_f64(&p.gamma),
            sides: [(1.0, 0.0), (1.0, 0.0)],
        })
    }

    /// Chooses `(k, m)` on both sides so `ψ₂` coincides with the exact `ψ₂`;
    /// the exact pair is only consulted at the two base points.
    pub fn matched_to(mut self, exact: &SolutionPair) -> Result<Self> {
        for (side, t0) in [(0, Self::BASE), (1, -Self::BASE)] {
            let at = FieldScalar::from_rational(kzr_exact::rational::from_f64_rounded(t0, 17));
            let exact_t0 = at.to_f64();
            let a = exact.psi2.eval(&at)?.to_f64();
            let b = exact.psi2.derivative().eval(&at)?.to_f64();
            let (p, dp) = self.psi1(exact_t0)?;
            let wr = self.wronskian(exact_t0);
            let k = (b * p - dp * a) / wr;
            if k == 0.0 {
                return Err(KzError::Domain("exact psi2 is proportional to psi1".into()));
            }
            // the rounded base differs from t0 by < 1e-17, inside the quadrature tolerance
            self.sides[side] = (k, a / p);
        }
        Ok(self)
    }

    fn psi1(&self, t: f64) -> Result<(f64, f64)> {
        let (a, b, c) = (self.alpha, self.beta, self.gamma);
        let value = series(a, b, c, t, SERIES_TOL)?;
        let slope = a * b / c * series(a + 1.0, b + 1.0, c + 1.0, t, SERIES_TOL)?;
        Ok((value, slope))
    }

    fn wronskian(&self, s: f64) -> f64 {
        s.abs().powf(-self.gamma) * (1.0 - s).abs().powf(self.gamma - self.alpha - self.beta - 1.0)
    }

    pub fn eval(&self, t: f64) -> Result<PsiValues> {
        if !(t.abs() < 1.0) || t == 0.0 {
            return Err(KzError::Domain(format!("numeric solutions need 0 < |t| < 1, got {t}")));
        }
        let (side, t0) = if t > 0.0 { (0, Self::BASE) } else { (1, -Self::BASE) };
        let (k, m) = self.sides[side];
        let (p, dp) = self.psi1(t)?;
        let integrand = |s: f64| -> Result<f64> {
            let (q, _) = self.psi1(s)?;
            if q == 0.0 {
                return Err(KzError::Domain(format!("psi1 vanishes at {s}")));
            }
            Ok(self.wronskian(s) / (q * q))
        };
        let integral = adaptive_simpson(&integrand, t0, t, QUAD_TOL)?;
        Ok(PsiValues {
            psi: [p, k * p * integral + m * p],
            dpsi: [dp, k * (dp * integral + self.wronskian(t) / p) + m * dp],
        })
    }
}

fn adaptive_simpson(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (fa, fb) = (f(a)?, f(b)?);
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, QUAD_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> Result<f64>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    Ok(simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
}
