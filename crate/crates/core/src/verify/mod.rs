//! Independent checks of the solution frames: exact residuals along rational
//! lines, finite-difference residuals on grids, and Runge–Kutta transport.

mod exact;
mod fd;
mod rk;

pub use exact::{exact_line_residual, scalar_ode_checks};
pub use fd::{default_grid, fd_convergence_factor, fd_grid_residual, pole_distance, GridPoint, POLE_MARGIN};
pub use rk::{dormand_prince, rk_cross_check, rk_cross_check_frame, RkOptions};

use std::fmt;
use std::str::FromStr;

use kzr_exact::{Field, FieldScalar, Rational};
use serde::{Deserialize, Serialize};

use crate::kzsolve::{ExactFrame, Provenance, SolutionFrame};
use crate::{KzError, Result};

/// The equations a report can be about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationId {
    /// `∂W/∂u₂ = ρH₂W`.
    KzU2,
    /// `∂W/∂u₃ = ρH₃W`.
    KzU3,
    /// The `u₂`-equation after the gauge `F = W(1+y)^ρ(1+y+yz)^ρ`.
    GaugedU2,
    /// `φ₁′ = −√3ρφ₂/(1+y)`.
    Phi1Y,
    /// `φ₂′ = ρ(2φ₂/(1+y) + (2φ₂+√3φ₁)(1+z)/(1+y+yz))`.
    Phi2Y,
    /// Second-order scalar equation for `φ₁(y)`.
    ScalarY,
    /// Scalar equation in `v = −(y+1)(z+1)/z`.
    ScalarV,
    /// Gauss hypergeometric equation.
    Gauss,
    /// `u₃`-equation on the line `u₂ = 0`.
    KzU3Boundary,
    /// Boundary equation after the gauge `G = W₂ z^ρ(1+z)^ρ`.
    GaugedU3Boundary,
    /// First-order system for `(φ₁(z), φ₂(z))` on the boundary.
    PhiZ,
    /// Second-order scalar equation for `φ₁(z)`.
    ScalarZ,
    /// `z(1+z)φ″ + (3+5z)φ′ + 3φ = 0`.
    ScalarZRhoMinusOne,
}

impl EquationId {
    pub const ALL: [EquationId; 13] = [
        EquationId::KzU2,
        EquationId::KzU3,
        EquationId::GaugedU2,
        EquationId::Phi1Y,
        EquationId::Phi2Y,
        EquationId::ScalarY,
        EquationId::ScalarV,
        EquationId::Gauss,
        EquationId::KzU3Boundary,
        EquationId::GaugedU3Boundary,
        EquationId::PhiZ,
        EquationId::ScalarZ,
        EquationId::ScalarZRhoMinusOne,
    ];

    pub fn name(&self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .expect("unit variant")
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for EquationId {
    type Err = KzError;
    fn from_str(s: &str) -> Result<Self> {
        EquationId::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| KzError::Parameter(format!("unknown equation {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactLine,
    FiniteDifference,
    RkCompare,
}

/// Floating-point evaluation strategy for grid checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Precision {
    /// Frames evaluated in `f64`.
    #[default]
    Double,
    /// Frames and difference quotients evaluated exactly at rational points,
    /// only the final residual rounded.
    Exact,
}

impl Precision {
    pub const ENV: &'static str = "KZR_PRECISION";

    /// Reads `KZR_PRECISION` (`double` or `exact`); unset means `double`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV) {
            Err(_) => Ok(Precision::Double),
            Ok(s) => s.parse(),
        }
    }
}

impl FromStr for Precision {
    type Err = KzError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "double" | "" => Ok(Precision::Double),
            "exact" => Ok(Precision::Exact),
            other => Err(KzError::Parameter(format!("unknown precision {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub equation: EquationId,
    pub mode: Mode,
    pub subject: String,
    /// Set only by exact evaluation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_abs_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
    pub samples: Vec<Sample>,
    /// Grid points left out because they sit too close to a pole.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub passed: bool,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl ResidualReport {
    pub(crate) fn new(equation: EquationId, mode: Mode, subject: impl Into<String>) -> Self {
        ResidualReport {
            equation,
            mode,
            subject: subject.into(),
            exact_zero: None,
            max_abs_residual: None,
            tolerance: None,
            step: None,
            samples: Vec::new(),
            skipped: 0,
            notes: Vec::new(),
            passed: false,
        }
    }
}

pub(crate) fn describe(frame: &ExactFrame) -> String {
    let name = match frame.provenance() {
        Provenance::W1 => "W1",
        Provenance::W2 => "W2",
        Provenance::Composed => "composed W",
        Provenance::ExplicitY => "explicit [Y1, Y2]",
        Provenance::ExplicitU => "explicit [U1, U2]",
        Provenance::Constant => "constant frame",
    };
    format!("{name}, rho = {}", frame.rho())
}

pub(crate) fn frame_subject(frame: &SolutionFrame) -> String {
    match frame {
        SolutionFrame::Exact(f) => describe(f),
        SolutionFrame::Numeric(f) => format!("numeric {:?} frame, rho = {}", f.provenance(), f.rho()),
    }
}

/// Parameters of the standard verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub rho: Rational,
    pub lines: usize,
    pub grid: Vec<GridPoint>,
    pub h: f64,
    pub tol: f64,
    pub precision: Precision,
}

impl SuiteConfig {
    pub fn new(rho: Rational) -> Self {
        SuiteConfig {
            rho,
            lines: 3,
            grid: default_grid(),
            h: 1e-6,
            tol: 1e-8,
            precision: Precision::Double,
        }
    }
}

/// Fixed values for line checks: `z` for the `u₂`-equation, `y` for the `u₃`-equation.
pub fn line_values() -> (Vec<FieldScalar>, Vec<FieldScalar>) {
    (
        vec![FieldScalar::ratio(7, 5), FieldScalar::ratio(1, 2), FieldScalar::int(3)],
        vec![FieldScalar::zero(), FieldScalar::ratio(1, 3), FieldScalar::int(1)],
    )
}

/// Every check for an integer `ρ`: exact line residuals of all frames, the
/// scalar equations, finite differences of the composed frame, and RK
/// transport along `z = 1`. A non-integer `ρ` only gets the RK
/// self-consistency check of the numeric `W₁` for `y` from −0.9 to −0.6.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<ResidualReport>> {
    let rho = &config.rho;
    if rho.is_zero() {
        return Err(KzError::ZeroRho);
    }
    if !kzr_exact::rational::is_integer(rho) {
        let w1 = crate::kzsolve::fundamental_w1(rho)?;
        let opts = RkOptions { accept: 1e-6, ..RkOptions::default() };
        return Ok(vec![rk_cross_check_frame(&w1, 1.0, -0.9, -0.6, &opts)?]);
    }
    let composed = ExactFrame::composed(rho)?;
    let w1 = ExactFrame::w1(rho)?;
    let w2 = ExactFrame::w2(rho)?;
    let (zs, ys) = line_values();
    let lines = config.lines.clamp(1, 3);
    let mut out = Vec::new();
    for z in &zs[..lines] {
        out.push(exact_line_residual(&composed, EquationId::KzU2, z)?);
        out.push(exact_line_residual(&w1, EquationId::KzU2, z)?);
        out.push(exact_line_residual(&w1, EquationId::GaugedU2, z)?);
    }
    for y in &ys[..lines] {
        out.push(exact_line_residual(&composed, EquationId::KzU3, y)?);
    }
    let zero = FieldScalar::zero();
    out.push(exact_line_residual(&w2, EquationId::KzU3Boundary, &zero)?);
    out.push(exact_line_residual(&w2, EquationId::GaugedU3Boundary, &zero)?);
    out.extend(scalar_ode_checks(rho)?);
    let frame = SolutionFrame::Exact(composed);
    for eq in [EquationId::KzU2, EquationId::KzU3] {
        out.push(fd_grid_residual(&frame, eq, &config.grid, config.h, config.tol, config.precision)?);
    }
    out.push(rk_cross_check(rho, 1.0, 1.0, 2.0, &RkOptions::default())?);
    Ok(out)
}
