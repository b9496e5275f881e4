use kzr_exact::{Field, FieldScalar, FromScalar, Matrix};

use super::{combine, nonzero, BasisVectors};
use crate::Result;

/// The displayed closed forms at `ρ = −1`, kept as independent ground truth
/// for the assembled frames.
pub struct ExplicitForms;

impl ExplicitForms {
    fn sqrt3_inv<T: FromScalar>() -> T {
        T::from_scalar(&FieldScalar::sqrt3().inv().expect("nonzero"))
    }

    /// `Y₁ = −z(y+1) w₁ + z(z+1)(y+1)² / (√3(1+y+yz)) w₂`.
    pub fn y1<T: FromScalar>(y: &T, z: &T) -> Result<Matrix<T>> {
        let b = BasisVectors::standard();
        let y1 = y.clone() + &T::one();
        let z1 = z.clone() + &T::one();
        let q = nonzero(y1.clone() + &(y.clone() * z), "1 + y + yz")?;
        let a = -(z.clone() * &y1);
        let c = z.clone() * &z1 * &y1 * &y1 * &q.inv()? * &Self::sqrt3_inv::<T>();
        Ok(combine(&a, &b.w1, &c, &b.w2))
    }

    /// `Y₂ = [z²q/((z+1)²(y+1)) + zq/(z+1)] w₁ − [2z²q/(√3(z+1)²(y+1)) + zq/(√3(z+1))] w₂`
    /// with `q = 1 + y + yz`.
    pub fn y2<T: FromScalar>(y: &T, z: &T) -> Result<Matrix<T>> {
        let b = BasisVectors::standard();
        let y1 = nonzero(y.clone() + &T::one(), "1 + y")?;
        let z1 = nonzero(z.clone() + &T::one(), "1 + z")?;
        let q = y1.clone() + &(y.clone() * z);
        let first = z.clone() * z * &q * &(z1.clone() * &z1 * &y1).inv()?;
        let second = z.clone() * &q * &z1.inv()?;
        let a = first.clone() + &second;
        let c = -((first * &T::from_i64(2) + &second) * &Self::sqrt3_inv::<T>());
        Ok(combine(&a, &b.w1, &c, &b.w2))
    }

    /// `U₁ = z v₁ + z²/(√3(1+z)) v₂`.
    pub fn u1<T: FromScalar>(z: &T) -> Result<Matrix<T>> {
        let b = BasisVectors::standard();
        let z1 = nonzero(z.clone() + &T::one(), "1 + z")?;
        let c = z.clone() * z * &z1.inv()? * &Self::sqrt3_inv::<T>();
        Ok(combine(z, &b.v1, &c, &b.v2))
    }

    /// `U₂ = (1−z²)/z v₁ − (z−2)(z+1)/(√3 z) v₂`.
    pub fn u2<T: FromScalar>(z: &T) -> Result<Matrix<T>> {
        let b = BasisVectors::standard();
        let z_inv = nonzero(z.clone(), "z")?.inv()?;
        let a = (T::one() - &(z.clone() * z)) * &z_inv;
        let c = -((z.clone() - &T::from_i64(2)) * &(z.clone() + &T::one()) * &z_inv * &Self::sqrt3_inv::<T>());
        Ok(combine(&a, &b.v1, &c, &b.v2))
    }

    pub fn frame_y<T: FromScalar>(y: &T, z: &T) -> Result<Matrix<T>> {
        Ok(Matrix::hstack(&[Self::y1(y, z)?, Self::y2(y, z)?])?)
    }

    pub fn frame_u<T: FromScalar>(z: &T) -> Result<Matrix<T>> {
        Ok(Matrix::hstack(&[Self::u1(z)?, Self::u2(z)?])?)
    }
}
