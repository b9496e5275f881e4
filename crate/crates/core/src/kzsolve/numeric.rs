use kzr_exact::rational::{is_integer, to_f64, to_i64};
use kzr_exact::{FieldMatrix, Matrix, Rational};

use super::Provenance;
use crate::hypergeom::{frobenius_rational_solutions, kz_hg_params, NumericPair};
use crate::{KzError, Result};

/// Floating-point frame for arbitrary real `ρ ≠ 0`, built from the series
/// and quadrature pair. Real powers use `|x|^{−ρ}` when `ρ` is not an
/// integer, which is a constant multiple of any branch on each pole-free
/// region. For integer `ρ` the pair is matched to the exact one so both
/// evaluation paths describe the same frame.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericFrame {
    rho: f64,
    integer_rho: Option<i32>,
    provenance: Provenance,
    pair: NumericPair,
    w: [[f64; 2]; 4],
}

fn column(m: &FieldMatrix) -> [f64; 2] {
    [m.get(0, 0).to_f64(), m.get(1, 0).to_f64()]
}

impl NumericFrame {
    pub fn new(rho: &Rational, provenance: Provenance) -> Result<Self> {
        if !matches!(provenance, Provenance::W1 | Provenance::W2 | Provenance::Composed) {
            return Err(KzError::Parameter(format!("no numeric version of {provenance:?}")));
        }
        let rho_f = to_f64(rho);
        if rho_f == 0.0 {
            return Err(KzError::ZeroRho);
        }
        let mut pair = NumericPair::new(&kz_hg_params(rho))?;
        let integer_rho = if is_integer(rho) {
            let r = to_i64(rho).ok_or_else(|| KzError::Parameter(format!("rho = {rho} is too large")))?;
            pair = pair.matched_to(&frobenius_rational_solutions(r)?)?;
            Some(r as i32)
        } else {
            None
        };
        let b = super::BasisVectors::standard();
        Ok(NumericFrame {
            rho: rho_f,
            integer_rho,
            provenance,
            pair,
            w: [column(&b.w1), column(&b.w2), column(&b.v1), column(&b.v2)],
        })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    fn power(&self, x: f64) -> f64 {
        match self.integer_rho {
            Some(r) => x.powi(-r),
            None => x.abs().powf(-self.rho),
        }
    }

    fn y_frame(&self, y: f64, z: f64) -> Result<Matrix<f64>> {
        let t = (y + 1.0) * (z + 1.0) / z;
        let v = self.pair.eval(t)?;
        let gauge = self.power(1.0 + y) * self.power(1.0 + y + y * z);
        let s = 3f64.sqrt() * self.rho;
        let [w1, w2] = [self.w[0], self.w[1]];
        Ok(Matrix::from_fn(2, 2, |i, k| {
            gauge * (v.psi[k] * w1[i] - t * v.dpsi[k] / s * w2[i])
        }))
    }

    fn z_frame(&self, z: f64) -> Result<Matrix<f64>> {
        let v = self.pair.eval(-z)?;
        let gauge = self.power(z) * self.power(1.0 + z);
        let s = 3f64.sqrt() * self.rho;
        let [v1, v2] = [self.w[2], self.w[3]];
        Ok(Matrix::from_fn(2, 2, |i, k| {
            gauge * (v.psi[k] * v1[i] - z * v.dpsi[k] / s * v2[i])
        }))
    }

    pub fn eval(&self, y: f64, z: f64) -> Result<Matrix<f64>> {
        match self.provenance {
            Provenance::W1 => self.y_frame(y, z),
            Provenance::W2 => self.z_frame(z),
            _ => {
                let inv = self
                    .y_frame(0.0, z)?
                    .inverse()
                    .map_err(|_| KzError::SingularFrame(format!("W1(0, z) is singular at z = {z}")))?;
                Ok(&(&self.y_frame(y, z)? * &inv) * &self.z_frame(z)?)
            }
        }
    }
}
