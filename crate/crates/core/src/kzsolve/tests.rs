use super::*;
use crate::symrep::builtin_s4_22;
use kzr_exact::rational::{from_i64, ratio};

fn fs(s: &str) -> FieldScalar {
    FieldScalar::parse(s).unwrap()
}

fn q(p: i64, d: i64) -> FieldScalar {
    FieldScalar::ratio(p, d)
}

fn comb(a: &str, x: &FieldMatrix, b: &str, y: &FieldMatrix) -> FieldMatrix {
    combine(&fs(a), x, &fs(b), y)
}

#[test]
fn eigenvector_relations() {
    let rep = builtin_s4_22();
    let b = BasisVectors::standard();
    let id = Matrix::identity(2);
    let plus = |a: usize, c: usize| rep.get(a, c).unwrap() + &id;
    assert!((&plus(1, 3) * &b.w1).is_zero());
    assert_eq!(&plus(1, 3) * &b.w2, comb("-√3", &b.w1, "2", &b.w2));
    assert_eq!(&plus(1, 4) * &b.w1, b.w2.scale(&FieldScalar::sqrt3()));
    assert_eq!(&plus(1, 4) * &b.w2, b.w2.scale(&FieldScalar::int(2)));
    assert!((&plus(4, 3) * &b.v1).is_zero());
    assert_eq!(&plus(4, 2) * &b.v1, b.v2.scale(&-FieldScalar::sqrt3()));
    assert_eq!(&plus(4, 3) * &b.v2, comb("√3", &b.v1, "2", &b.v2));
    assert_eq!(&plus(4, 2) * &b.v2, b.v2.scale(&FieldScalar::int(2)));
}

#[test]
fn assembled_y_at_sample_points() {
    let pair = frobenius_rational_solutions(-1).unwrap();
    let b = BasisVectors::standard();
    let rho = from_i64(-1);
    let y1 = assemble_y(&pair.psi1, &rho, &q(1, 1), &q(1, 1)).unwrap();
    assert_eq!(y1, comb("-2", &b.w1, "8√3/9", &b.w2));
    let y1 = assemble_y(&pair.psi1, &rho, &q(1, 1), &q(2, 1)).unwrap();
    assert_eq!(y1, comb("-4", &b.w1, "2√3", &b.w2));
    assert_eq!(y1, ExplicitForms::y1(&q(1, 1), &q(2, 1)).unwrap());
}

#[test]
fn y_at_zero_is_the_bracket() {
    // ρ = −1 and y = 0: the gauge factor is 1, t = (z+1)/z
    let pair = frobenius_rational_solutions(-1).unwrap();
    let z = q(3, 2);
    let t = q(5, 3);
    let y = assemble_y(&pair.psi2, &from_i64(-1), &FieldScalar::zero(), &z).unwrap();
    let b = BasisVectors::standard();
    let value = pair.psi2.eval(&t).unwrap();
    let slope = pair.psi2.derivative().eval(&t).unwrap();
    let expect = combine(&value, &b.w1, &(&t * &slope * &FieldScalar::sqrt3().inv().unwrap()), &b.w2);
    assert_eq!(y, expect);
}

#[test]
fn explicit_values() {
    let b = BasisVectors::standard();
    assert_eq!(ExplicitForms::y1(&q(1, 1), &q(1, 1)).unwrap(), comb("-2", &b.w1, "8√3/9", &b.w2));
    assert_eq!(ExplicitForms::u2(&q(2, 1)).unwrap(), b.v1.scale(&q(-3, 2)));
    assert_eq!(ExplicitForms::y2(&q(0, 1), &q(1, 1)).unwrap(), comb("3/4", &b.w1, "-√3/3", &b.w2));
    let u1 = ExplicitForms::u1(&q(1, 1)).unwrap();
    assert_eq!(u1, Matrix::column_vector(vec![fs("√3/6"), q(3, 2)]));
}

#[test]
fn assembled_u_matches_explicit() {
    let pair = frobenius_rational_solutions(-1).unwrap();
    let rho = from_i64(-1);
    for z in [q(1, 1), q(2, 1), q(-1, 3), q(7, 5)] {
        assert_eq!(assemble_u(&pair.psi1, &rho, &z).unwrap(), ExplicitForms::u1(&z).unwrap());
        assert_eq!(assemble_u(&pair.psi2, &rho, &z).unwrap(), ExplicitForms::u2(&z).unwrap());
    }
}

#[test]
fn boundary_frame_is_invertible() {
    let w2 = ExactFrame::w2(&from_i64(-1)).unwrap();
    let m = w2.eval(&FieldScalar::zero(), &q(1, 1)).unwrap();
    assert!(!m.determinant().unwrap().is_zero());
}

#[test]
fn composition_collapses_at_y_zero() {
    for rho in [-2, -1, 1, 2] {
        let rho = from_i64(rho);
        let w = ExactFrame::composed(&rho).unwrap();
        let w2 = ExactFrame::w2(&rho).unwrap();
        for z in [q(1, 2), q(3, 1), q(7, 5)] {
            assert_eq!(w.eval(&FieldScalar::zero(), &z).unwrap(), w2.eval(&FieldScalar::zero(), &z).unwrap());
        }
    }
}

#[test]
fn zero_and_fractional_rho() {
    let pair = frobenius_rational_solutions(-1).unwrap();
    assert!(matches!(
        assemble_y(&pair.psi1, &from_i64(0), &q(1, 1), &q(1, 1)),
        Err(KzError::ZeroRho)
    ));
    assert!(matches!(
        assemble_u(&pair.psi1, &ratio(1, 2), &q(1, 1)),
        Err(KzError::NonIntegerRho(_))
    ));
    assert!(matches!(compose_w(&from_i64(0)), Err(KzError::ZeroRho)));
}

#[test]
fn poles_are_reported() {
    let w = ExactFrame::composed(&from_i64(-1)).unwrap();
    assert!(w.eval(&q(1, 1), &q(0, 1)).is_err());
    assert!(w.eval(&q(-1, 1), &q(1, 1)).is_err());
}

#[test]
fn numeric_boundary_frame_matches_exact() {
    let exact = fundamental_w2(&from_i64(-1)).unwrap();
    let numeric = SolutionFrame::Numeric(NumericFrame::new(&from_i64(-1), Provenance::W2).unwrap());
    let a = exact.eval_f64(0.0, 0.5).unwrap();
    let b = numeric.eval_f64(0.0, 0.5).unwrap();
    assert!((&a - &b).max_abs() < 1e-10, "{a:?} vs {b:?}");
}

#[test]
fn numeric_frame_for_half_integer_rho() {
    let w = compose_w(&ratio(-1, 2)).unwrap();
    assert_eq!(w.kind(), FrameKind::Numeric);
    let m = w.eval_f64(0.3, -0.7).unwrap();
    assert!(m.entries().iter().all(|x| x.is_finite()));
    let w2 = fundamental_w2(&ratio(-1, 2)).unwrap().eval_f64(0.0, -0.7).unwrap();
    assert!((&w.eval_f64(0.0, -0.7).unwrap() - &w2).max_abs() < 1e-12);
}
