use kzr_exact::{Field, FieldScalar};
use serde::{Deserialize, Serialize};

use crate::{KzError, Result};

/// Pairwise distinct configuration `(z_1, …, z_n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZPoint {
    z: Vec<FieldScalar>,
}

impl ZPoint {
    pub fn new(z: Vec<FieldScalar>) -> Result<Self> {
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                if z[i] == z[j] {
                    return Err(KzError::CoincidentPoints(i + 1, j + 1));
                }
            }
        }
        Ok(ZPoint { z })
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }
}

/// Varchenko coordinates `(u_1, u_2, u_3, u_4)` of a four-point configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UPoint {
    u: Vec<FieldScalar>,
}

impl UPoint {
    /// Rejects points whose preimage would have coinciding coordinates:
    /// `u_1, u_2, u_3 ≠ 0`, `u_2, u_3 ≠ −1` and `1 + u_2 + u_2u_3 ≠ 0`.
    pub fn new(u: Vec<FieldScalar>) -> Result<Self> {
        if u.len() != 4 {
            return Err(KzError::InvalidPoint(format!("expected 4 coordinates, got {}", u.len())));
        }
        let one = FieldScalar::one();
        let checks = [
            (u[0].clone(), "u1 = 0"),
            (u[1].clone(), "u2 = 0"),
            (u[2].clone(), "u3 = 0"),
            (&one + &u[1], "u2 = -1"),
            (&one + &u[2], "u3 = -1"),
            (&(&one + &u[1]) + &(&u[1] * &u[2]), "1 + u2 + u2·u3 = 0"),
        ];
        for (value, what) in checks {
            if value.is_zero() {
                return Err(KzError::InvalidPoint(what.to_string()));
            }
        }
        Ok(UPoint { u })
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.u
    }
}

/// `u_1 = z_1 − z_2`, `u_k = (z_k − z_{k+1})/(z_{k−1} − z_k)` for `k = 2, 3`,
/// `u_4 = z_1 + z_2 + z_3 + z_4`.
pub fn z_to_u(at: &ZPoint) -> Result<UPoint> {
    let z = at.coords();
    if z.len() != 4 {
        return Err(KzError::InvalidPoint(format!("expected 4 coordinates, got {}", z.len())));
    }
    let d: Vec<FieldScalar> = (0..3).map(|k| &z[k] - &z[k + 1]).collect();
    let u = vec![
        d[0].clone(),
        d[1].try_div(&d[0])?,
        d[2].try_div(&d[1])?,
        z.iter().fold(FieldScalar::zero(), |acc, x| acc + x),
    ];
    UPoint::new(u)
}

/// Solves `z_1 − z_2 = u_1`, `z_2 − z_3 = u_1u_2`, `z_3 − z_4 = u_1u_2u_3`,
/// `Σ z = u_4`.
pub fn u_to_z(at: &UPoint) -> Result<ZPoint> {
    let u = at.coords();
    let d1 = u[0].clone();
    let d2 = &d1 * &u[1];
    let d3 = &d2 * &u[2];
    // Σ z = 4 z_4 + 3 d3 + 2 d2 + d1
    let rest = &(&(&d3 * &FieldScalar::int(3)) + &(&d2 * &FieldScalar::int(2))) + &d1;
    let z4 = (&u[3] - &rest) * &FieldScalar::ratio(1, 4);
    let z3 = &z4 + &d3;
    let z2 = &z3 + &d2;
    let z1 = &z2 + &d1;
    ZPoint::new(vec![z1, z2, z3, z4])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::int(x)).collect()
    }

    #[test]
    fn forward_and_back() {
        let z = ZPoint::new(ints(&[3, 2, 1, 0])).unwrap();
        let u = z_to_u(&z).unwrap();
        assert_eq!(u.coords(), ints(&[1, 1, 1, 6]).as_slice());
        assert_eq!(u_to_z(&u).unwrap(), z);

        let z = ZPoint::new(ints(&[2, 0, -1, -3])).unwrap();
        let u = z_to_u(&z).unwrap();
        assert_eq!(
            u.coords(),
            &[FieldScalar::int(2), FieldScalar::ratio(1, 2), FieldScalar::int(2), FieldScalar::int(-2)]
        );
        assert_eq!(u_to_z(&u).unwrap(), z);
    }

    #[test]
    fn invalid_points() {
        assert!(matches!(ZPoint::new(ints(&[1, 2, 1])), Err(KzError::CoincidentPoints(1, 3))));
        assert!(UPoint::new(ints(&[1, -1, 1, 0])).is_err());
        assert!(UPoint::new(ints(&[0, 1, 1, 0])).is_err());
        // 1 + u2 + u2 u3 = 1 + 1 − 2 = 0
        assert!(UPoint::new(ints(&[1, 1, -2, 0])).is_err());
    }
}
