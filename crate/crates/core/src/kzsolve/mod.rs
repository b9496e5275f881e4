//! Closed-form fundamental solutions of the reduced `n = 4` system in the
//! variables `y = u_2`, `z = u_3`: the `y`-frame `W₁`, the boundary frame `W₂`
//! on `u_2 = 0`, and their composition `W(y,z) = W₁(y,z) W₁(0,z)⁻¹ W₂(z)`.

mod explicit;
mod numeric;

pub use explicit::ExplicitForms;
pub use numeric::NumericFrame;

use kzr_exact::rational::{is_integer, to_f64, to_i64};
use kzr_exact::{pow_i, Field, FieldMatrix, FieldScalar, FromScalar, Matrix, Rational, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::hypergeom::{frobenius_rational_solutions, SolutionPair};
use crate::{KzError, Result};

/// The constant vectors diagonalising the `y`- and `z`-equations.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisVectors {
    pub w1: FieldMatrix,
    pub w2: FieldMatrix,
    pub v1: FieldMatrix,
    pub v2: FieldMatrix,
}

impl BasisVectors {
    pub fn standard() -> Self {
        let col = |a: FieldScalar, b: FieldScalar| Matrix::column_vector(vec![a, b]);
        let s3 = FieldScalar::sqrt3();
        BasisVectors {
            w1: col(s3.clone(), FieldScalar::one()),
            w2: col(FieldScalar::one(), s3.clone()),
            v1: col(FieldScalar::zero(), FieldScalar::int(2)),
            v2: col(FieldScalar::one(), -s3),
        }
    }
}

/// `a·x + b·y` for constant columns `x`, `y`.
pub(crate) fn combine<T: FromScalar>(a: &T, x: &FieldMatrix, b: &T, y: &FieldMatrix) -> Matrix<T> {
    &x.lift::<T>().scale(a) + &y.lift::<T>().scale(b)
}

fn nonzero<T: Field>(x: T, what: &str) -> Result<T> {
    if x.is_zero() {
        Err(KzError::InvalidPoint(format!("{what} = 0")))
    } else {
        Ok(x)
    }
}

fn integer_rho(rho: &Rational) -> Result<i64> {
    match to_i64(rho) {
        Some(0) => Err(KzError::ZeroRho),
        Some(r) => Ok(r),
        None => Err(KzError::NonIntegerRho(rho.to_string())),
    }
}

/// `Y = (1+y)^{−ρ}(1+y+yz)^{−ρ} [ψ(t) w₁ − t ψ′(t)/(√3 ρ) w₂]` with
/// `t = (y+1)(z+1)/z`, a solution of the `y`-equation for any solution `ψ`
/// of the Gauss equation.
pub fn assemble_y<T: FromScalar>(psi: &RationalFunction, rho: &Rational, y: &T, z: &T) -> Result<Matrix<T>> {
    let r = integer_rho(rho)?;
    let one = T::one();
    let basis = BasisVectors::standard();
    let y1 = nonzero(one.clone() + y, "1 + y")?;
    let q = nonzero(y1.clone() + &(y.clone() * z), "1 + y + yz")?;
    let z_inv = nonzero(z.clone(), "z")?.inv()?;
    let t = y1.clone() * &(one + z) * &z_inv;
    let value = psi.eval_in(&t)?;
    let slope = psi.derivative().eval_in(&t)?;
    let sqrt3_rho = T::from_scalar(&(FieldScalar::sqrt3() * &FieldScalar::int(r)));
    let coef2 = -(t * &slope * &sqrt3_rho.inv()?);
    let gauge = pow_i(&y1, -r)? * &pow_i(&q, -r)?;
    Ok(combine(&value, &basis.w1, &coef2, &basis.w2).scale(&gauge))
}

/// `U = [ψ(−z) v₁ − z ψ′(−z)/(√3 ρ) v₂] z^{−ρ}(1+z)^{−ρ}`, a solution of the
/// `z`-equation on the line `y = 0`.
pub fn assemble_u<T: FromScalar>(psi: &RationalFunction, rho: &Rational, z: &T) -> Result<Matrix<T>> {
    let r = integer_rho(rho)?;
    let basis = BasisVectors::standard();
    let z = nonzero(z.clone(), "z")?;
    let z1 = nonzero(T::one() + &z, "1 + z")?;
    let minus_z = -z.clone();
    let value = psi.eval_in(&minus_z)?;
    let slope = psi.derivative().eval_in(&minus_z)?;
    let sqrt3_rho = T::from_scalar(&(FieldScalar::sqrt3() * &FieldScalar::int(r)));
    let coef2 = -(z.clone() * &slope * &sqrt3_rho.inv()?);
    let gauge = pow_i(&z, -r)? * &pow_i(&z1, -r)?;
    Ok(combine(&value, &basis.v1, &coef2, &basis.v2).scale(&gauge))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    W1,
    W2,
    Composed,
    ExplicitY,
    ExplicitU,
    Constant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameKind {
    ExactRational,
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
enum Source {
    Pair(SolutionPair),
    Explicit,
    Constant(FieldMatrix),
}

/// A 2×2 matrix function of `(y, z)` with entries rational over Q(√3),
/// evaluable at exact points, on rational-function lines, or in `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactFrame {
    rho: Rational,
    provenance: Provenance,
    source: Source,
    perturbation: Option<(usize, usize, FieldScalar)>,
}

impl ExactFrame {
    fn from_pair(rho: &Rational, provenance: Provenance) -> Result<Self> {
        let r = integer_rho(rho)?;
        Ok(ExactFrame {
            rho: rho.clone(),
            provenance,
            source: Source::Pair(frobenius_rational_solutions(r)?),
            perturbation: None,
        })
    }

    pub fn w1(rho: &Rational) -> Result<Self> {
        Self::from_pair(rho, Provenance::W1)
    }

    pub fn w2(rho: &Rational) -> Result<Self> {
        Self::from_pair(rho, Provenance::W2)
    }

    pub fn composed(rho: &Rational) -> Result<Self> {
        Self::from_pair(rho, Provenance::Composed)
    }

    /// The displayed `ρ = −1` frames `[Y₁, Y₂]` (`Provenance::ExplicitY`) or
    /// `[U₁, U₂]` (`Provenance::ExplicitU`).
    pub fn explicit(provenance: Provenance) -> Result<Self> {
        if !matches!(provenance, Provenance::ExplicitY | Provenance::ExplicitU) {
            return Err(KzError::Parameter(format!("{provenance:?} is not an explicit frame")));
        }
        Ok(ExactFrame {
            rho: Rational::from_integer((-1).into()),
            provenance,
            source: Source::Explicit,
            perturbation: None,
        })
    }

    /// A constant frame; it solves nothing and serves as a negative control.
    pub fn constant(m: FieldMatrix, rho: &Rational) -> Self {
        ExactFrame {
            rho: rho.clone(),
            provenance: Provenance::Constant,
            source: Source::Constant(m),
            perturbation: None,
        }
    }

    /// Copy with entry `(i, j)` multiplied by `factor`.
    pub fn perturbed(&self, i: usize, j: usize, factor: FieldScalar) -> Self {
        ExactFrame {
            perturbation: Some((i, j, factor)),
            ..self.clone()
        }
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn pair(&self) -> Option<&SolutionPair> {
        match &self.source {
            Source::Pair(p) => Some(p),
            _ => None,
        }
    }

    /// Whether the frame depends on `y`; boundary frames live on `y = 0`.
    pub fn depends_on_y(&self) -> bool {
        !matches!(self.provenance, Provenance::W2 | Provenance::ExplicitU | Provenance::Constant)
    }

    fn y_frame<T: FromScalar>(&self, pair: &SolutionPair, y: &T, z: &T) -> Result<Matrix<T>> {
        let c1 = assemble_y(&pair.psi1, &self.rho, y, z)?;
        let c2 = assemble_y(&pair.psi2, &self.rho, y, z)?;
        Ok(Matrix::hstack(&[c1, c2])?)
    }

    fn z_frame<T: FromScalar>(&self, pair: &SolutionPair, z: &T) -> Result<Matrix<T>> {
        let c1 = assemble_u(&pair.psi1, &self.rho, z)?;
        let c2 = assemble_u(&pair.psi2, &self.rho, z)?;
        Ok(Matrix::hstack(&[c1, c2])?)
    }

    pub fn eval<T: FromScalar>(&self, y: &T, z: &T) -> Result<Matrix<T>> {
        let mut m = match (&self.source, self.provenance) {
            (Source::Pair(pair), Provenance::W1) => self.y_frame(pair, y, z)?,
            (Source::Pair(pair), Provenance::W2) => self.z_frame(pair, z)?,
            (Source::Pair(pair), _) => {
                let at_y = self.y_frame(pair, y, z)?;
                let at_0 = self.y_frame(pair, &T::zero(), z)?;
                let inv = at_0
                    .inverse()
                    .map_err(|_| KzError::SingularFrame(format!("W1(0, z) is singular at z = {z:?}")))?;
                &(&at_y * &inv) * &self.z_frame(pair, z)?
            }
            (Source::Explicit, Provenance::ExplicitY) => ExplicitForms::frame_y(y, z)?,
            (Source::Explicit, _) => ExplicitForms::frame_u(z)?,
            (Source::Constant(c), _) => c.lift::<T>(),
        };
        if let Some((i, j, factor)) = &self.perturbation {
            let scaled = m.get(*i, *j).clone() * &T::from_scalar(factor);
            m.set(*i, *j, scaled);
        }
        Ok(m)
    }
}

/// A fundamental-solution handle, exact for integer `ρ` and numeric otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum SolutionFrame {
    Exact(ExactFrame),
    Numeric(NumericFrame),
}

impl SolutionFrame {
    pub fn kind(&self) -> FrameKind {
        match self {
            SolutionFrame::Exact(_) => FrameKind::ExactRational,
            SolutionFrame::Numeric(_) => FrameKind::Numeric,
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            SolutionFrame::Exact(f) => f.provenance(),
            SolutionFrame::Numeric(f) => f.provenance(),
        }
    }

    pub fn rho_f64(&self) -> f64 {
        match self {
            SolutionFrame::Exact(f) => to_f64(f.rho()),
            SolutionFrame::Numeric(f) => f.rho(),
        }
    }

    pub fn depends_on_y(&self) -> bool {
        match self {
            SolutionFrame::Exact(f) => f.depends_on_y(),
            SolutionFrame::Numeric(f) => f.provenance() != Provenance::W2,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactFrame> {
        match self {
            SolutionFrame::Exact(f) => Some(f),
            SolutionFrame::Numeric(_) => None,
        }
    }

    pub fn eval_f64(&self, y: f64, z: f64) -> Result<Matrix<f64>> {
        match self {
            SolutionFrame::Exact(f) => f.eval(&y, &z),
            SolutionFrame::Numeric(f) => f.eval(y, z),
        }
    }
}

fn frame(rho: &Rational, provenance: Provenance) -> Result<SolutionFrame> {
    if is_integer(rho) {
        let exact = match provenance {
            Provenance::W1 => ExactFrame::w1(rho)?,
            Provenance::W2 => ExactFrame::w2(rho)?,
            _ => ExactFrame::composed(rho)?,
        };
        Ok(SolutionFrame::Exact(exact))
    } else {
        Ok(SolutionFrame::Numeric(NumericFrame::new(rho, provenance)?))
    }
}

/// `W₁ = [Y₁, Y₂]` built from the rational pair (integer `ρ`) or numerically.
pub fn fundamental_w1(rho: &Rational) -> Result<SolutionFrame> {
    frame(rho, Provenance::W1)
}

/// `W₂ = [U₁, U₂]` on the line `y = 0`.
pub fn fundamental_w2(rho: &Rational) -> Result<SolutionFrame> {
    frame(rho, Provenance::W2)
}

/// `W(y,z) = W₁(y,z) W₁(0,z)⁻¹ W₂(z)`, a fundamental solution of both equations.
pub fn compose_w(rho: &Rational) -> Result<SolutionFrame> {
    frame(rho, Provenance::Composed)
}

/// Entrywise `W(y,z)` restricted to a line as rational functions of the free
/// variable: `fixed_z = Some(z)` gives functions of `y`, otherwise `y` is
/// fixed and `z` varies.
pub fn frame_on_line(frame: &ExactFrame, fixed_y: Option<&FieldScalar>, fixed_z: Option<&FieldScalar>) -> Result<Matrix<RationalFunction>> {
    let free = RationalFunction::x();
    match (fixed_y, fixed_z) {
        (None, Some(z)) => frame.eval(&free, &RationalFunction::from_scalar(z)),
        (Some(y), None) => frame.eval(&RationalFunction::from_scalar(y), &free),
        _ => Err(KzError::Parameter("exactly one of y, z must be fixed".into())),
    }
}

#[cfg(test)]
mod tests;
