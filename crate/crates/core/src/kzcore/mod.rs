//! KZ connection data: the matrices `A_k` and `Q_k`, the reduced `n = 4`
//! system in Varchenko coordinates, and the algebraic integrability checks.

mod coords;
mod eigen;

pub use coords::{u_to_z, z_to_u, UPoint, ZPoint};
pub use eigen::{integer_eigenvalue_test, EigenReport};

use kzr_exact::{Field, FieldMatrix, FieldScalar, FromScalar, Matrix, Rational};

use crate::symrep::{disjoint_pairs, Representation, ValidationReport};
use crate::{KzError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct KZParams {
    pub rep: Representation,
    pub rho: Rational,
}

impl KZParams {
    pub fn new(rep: Representation, rho: Rational) -> Self {
        KZParams { rep, rho }
    }
}

fn pair(rep: &Representation, a: usize, b: usize) -> Result<&FieldMatrix> {
    rep.get(a, b).ok_or_else(|| KzError::MissingMatrix(vec![(a.min(b), a.max(b))]))
}

/// `A_k(z) = Σ_{j≠k} P_{k,j} / (z_k − z_j)`.
pub fn build_ak(params: &KZParams, k: usize, at: &ZPoint) -> Result<FieldMatrix> {
    let rep = &params.rep;
    let n = rep.n();
    if at.len() != n {
        return Err(KzError::InvalidPoint(format!("expected {n} coordinates, got {}", at.len())));
    }
    if k == 0 || k > n {
        return Err(KzError::InvalidTransposition(k, k, n));
    }
    let z = at.coords();
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for j in (1..=n).filter(|&j| j != k) {
        let gap = (z[k - 1].clone() - &z[j - 1]).inv()?;
        acc = &acc + &pair(rep, k, j)?.scale(&gap);
    }
    Ok(acc)
}

/// `Q_k = Σ_{j≠k} P_{k,j}`; works on partial data as long as row `k` is stored.
pub fn build_qk(params: &KZParams, k: usize) -> Result<FieldMatrix> {
    let rep = &params.rep;
    let n = rep.n();
    if k == 0 || k > n {
        return Err(KzError::InvalidTransposition(k, k, n));
    }
    let missing: Vec<(usize, usize)> = (1..=n)
        .filter(|&j| j != k && rep.get(k, j).is_none())
        .map(|j| (k.min(j), k.max(j)))
        .collect();
    if !missing.is_empty() {
        return Err(KzError::MissingMatrix(missing));
    }
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for j in (1..=n).filter(|&j| j != k) {
        acc = &acc + pair(rep, k, j)?;
    }
    Ok(acc)
}

/// `P_r = Σ_{j>r} P_{j,r}`.
pub fn p_r(rep: &Representation, r: usize) -> Result<FieldMatrix> {
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for j in r + 1..=rep.n() {
        acc = &acc + pair(rep, j, r)?;
    }
    Ok(acc)
}

/// `Ω_s = P_s + P_{s+1} + … + P_n`.
pub fn omega(rep: &Representation, s: usize) -> Result<FieldMatrix> {
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for r in s..=rep.n() {
        acc = &acc + &p_r(rep, r)?;
    }
    Ok(acc)
}

fn require_n4(rep: &Representation) -> Result<()> {
    if rep.n() != 4 || rep.is_partial() {
        return Err(KzError::Parameter(format!(
            "the reduced system needs a complete S_4 representation, got n = {}{}",
            rep.n(),
            if rep.is_partial() { " (partial)" } else { "" }
        )));
    }
    Ok(())
}

/// Coefficients of the `u_2` and `u_3` equations at `(u_2, u_3) = (y, z)`,
/// without the factor `ρ`. Generic so the same code runs on exact points, on
/// rational-function lines and in floating point.
pub fn reduced_h<T: FromScalar>(rep: &Representation, y: &T, z: &T) -> Result<(Matrix<T>, Matrix<T>)> {
    require_n4(rep)?;
    let one = T::one();
    let lift = |a: usize, b: usize| pair(rep, a, b).map(|m| m.lift::<T>());
    let q = one.clone() + y + &(y.clone() * z);
    let q_inv = q.inv().map_err(|_| KzError::InvalidPoint("1 + u2 + u2·u3 = 0".into()))?;
    let inv = |x: T, what: &str| x.inv().map_err(|_| KzError::InvalidPoint(format!("{what} = 0")));

    let omega2 = omega(rep, 2)?;
    let mut h2 = lift(1, 3)?.scale(&inv(one.clone() + y, "1 + u2")?);
    h2 = &h2 + &lift(1, 4)?.scale(&((one.clone() + z) * &q_inv));
    if !omega2.is_zero() {
        h2 = &h2 + &omega2.lift::<T>().scale(&inv(y.clone(), "u2")?);
    }

    let mut h3 = lift(4, 3)?.scale(&inv(z.clone(), "u3")?);
    h3 = &h3 + &lift(4, 2)?.scale(&inv(one + z, "1 + u3")?);
    h3 = &h3 + &lift(4, 1)?.scale(&(y.clone() * &q_inv));
    Ok((h2, h3))
}

/// `[H_1, H_2, H_3, H_4]` at a point of Varchenko coordinates: `∂W/∂u_j = ρ H_j W`.
pub fn build_h(params: &KZParams, at: &UPoint) -> Result<Vec<FieldMatrix>> {
    build_h_in(&params.rep, at.coords())
}

pub fn build_h_in<T: FromScalar>(rep: &Representation, u: &[T]) -> Result<Vec<Matrix<T>>> {
    require_n4(rep)?;
    if u.len() != 4 {
        return Err(KzError::InvalidPoint(format!("expected 4 coordinates, got {}", u.len())));
    }
    let omega1 = omega(rep, 1)?;
    let h1 = if omega1.is_zero() {
        Matrix::zeros(rep.dim(), rep.dim())
    } else {
        let u1 = u[0].inv().map_err(|_| KzError::InvalidPoint("u1 = 0".into()))?;
        omega1.lift::<T>().scale(&u1)
    };
    let (h2, h3) = reduced_h(rep, &u[1], &u[2])?;
    Ok(vec![h1, h2, h3, Matrix::zeros(rep.dim(), rep.dim())])
}

/// Exact check of the infinitesimal braid relations
/// `[P_ij, P_ik + P_jk] = 0` and `[P_ij, P_kl] = 0` for disjoint pairs.
pub fn check_flatness(rep: &Representation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = rep.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let (Some(pij), Some(pik), Some(pjk)) = (rep.get(i, j), rep.get(i, k), rep.get(j, k)) else {
                    continue;
                };
                let ok = pij.commutator(&(pik + pjk)).expect("square").is_zero();
                let mut idx = [i, j, k];
                idx.sort();
                report.record(ok, "infinitesimal-braid", vec![(i, j), (idx[0], idx[1]), (idx[1], idx[2])]);
            }
        }
    }
    for (s, t) in disjoint_pairs(n) {
        let (Some(a), Some(b)) = (rep.get(s.i(), s.j()), rep.get(t.i(), t.j())) else {
            continue;
        };
        let ok = a.commutator(b).expect("square").is_zero();
        report.record(ok, "disjoint-commutation", vec![(s.i(), s.j()), (t.i(), t.j())]);
    }
    if rep.is_partial() {
        report.notes.push("partial: relations involving absent pairs skipped".to_string());
    }
    report
}

/// The three indices a flatness violation is about.
pub fn violation_indices(pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut idx: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    idx.sort();
    idx.dedup();
    idx
}

/// Embeds an exact scalar; convenience for callers holding rationals.
pub fn scalar(r: &Rational) -> FieldScalar {
    FieldScalar::from_rational(r.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::{builtin_s4_22, builtin_s5_gen1, young_orthogonal};
    use kzr_exact::rational::from_i64;

    fn s4() -> KZParams {
        KZParams::new(builtin_s4_22(), from_i64(-1))
    }

    fn zpoint(v: &[i64]) -> ZPoint {
        ZPoint::new(v.iter().map(|&x| FieldScalar::int(x)).collect()).unwrap()
    }

    #[test]
    fn ak_at_integer_points() {
        let p = s4();
        let rep = &p.rep;
        let a1 = build_ak(&p, 1, &zpoint(&[3, 2, 1, 0])).unwrap();
        let expect = &(rep.get(1, 2).unwrap() + &rep.get(1, 3).unwrap().scale(&FieldScalar::ratio(1, 2)))
            + &rep.get(1, 4).unwrap().scale(&FieldScalar::ratio(1, 3));
        assert_eq!(a1, expect);

        let z = zpoint(&[3, 2, 1, 0]);
        let sum = (1..=4).fold(Matrix::zeros(2, 2), |acc: FieldMatrix, k| &acc + &build_ak(&p, k, &z).unwrap());
        assert!(sum.is_zero());
    }

    #[test]
    fn ak_two_points() {
        let rep = young_orthogonal(&"1,1".parse().unwrap(), 2).unwrap();
        let p = KZParams::new(rep.clone(), from_i64(1));
        assert_eq!(&build_ak(&p, 1, &zpoint(&[1, 0])).unwrap(), rep.get(1, 2).unwrap());
    }

    #[test]
    fn qk_values() {
        let p = s4();
        for k in 1..=4 {
            assert!(build_qk(&p, k).unwrap().is_zero());
        }
        let p5 = KZParams::new(builtin_s5_gen1(), from_i64(1));
        assert_eq!(build_qk(&p5, 1).unwrap().trace().unwrap(), FieldScalar::int(4));
        match build_qk(&p5, 2) {
            Err(KzError::MissingMatrix(m)) => assert_eq!(m, vec![(2, 3), (2, 4), (2, 5)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn omegas_vanish_for_s4() {
        let rep = builtin_s4_22();
        assert!(omega(&rep, 1).unwrap().is_zero());
        assert!(omega(&rep, 2).unwrap().is_zero());
    }

    #[test]
    fn h_at_boundary_line() {
        let p = s4();
        let z = FieldScalar::ratio(2, 3);
        // u2 = 0 is not a configuration point, but Ω2 = 0 removes the 1/u2 term
        let (_, h3) = reduced_h(&p.rep, &FieldScalar::zero(), &z).unwrap();
        let rep = &p.rep;
        let expect = &rep.get(4, 3).unwrap().scale(&z.inv().unwrap())
            + &rep.get(4, 2).unwrap().scale(&(FieldScalar::one() + &z).inv().unwrap());
        assert_eq!(h3, expect);
    }

    #[test]
    fn h_ends_vanish() {
        let p = s4();
        let u = z_to_u(&zpoint(&[2, 0, -1, -3])).unwrap();
        let h = build_h(&p, &u).unwrap();
        assert_eq!(h.len(), 4);
        assert!(h[0].is_zero());
        assert!(h[3].is_zero());
        assert!(!h[1].is_zero());
    }

    #[test]
    fn flatness() {
        assert!(check_flatness(&builtin_s4_22()).passed());
        assert!(check_flatness(&young_orthogonal(&"2,1".parse().unwrap(), 3).unwrap()).passed());
        let broken = builtin_s4_22().with_matrix(1, 3, Matrix::identity(2)).unwrap();
        let report = check_flatness(&broken);
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.identity == "infinitesimal-braid" && violation_indices(&v.pairs) == vec![1, 2, 3]));
    }
}
