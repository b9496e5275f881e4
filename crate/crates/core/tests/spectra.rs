use kzr_core::kzcore::{build_qk, integer_eigenvalue_test, KZParams};
use kzr_core::symrep::{builtin_s4_22, builtin_s5_gen1, young_orthogonal, Partition};
use kzr_exact::rational::{from_i64, ratio};
use kzr_exact::{FieldMatrix, FieldScalar, Matrix, Poly};

fn q(v: &[(i64, i64)]) -> Poly<FieldScalar> {
    Poly::new(v.iter().map(|&(p, d)| FieldScalar::ratio(p, d)).collect())
}

#[test]
fn s4_spectra_are_zero() {
    let params = KZParams::new(builtin_s4_22(), from_i64(-1));
    for k in 1..=4 {
        let report = integer_eigenvalue_test(&build_qk(&params, k).unwrap()).unwrap();
        assert_eq!(report.linear_roots, vec!["0", "0"]);
        assert!(report.integer_spectrum);
    }
}

#[test]
fn s5_star_sum_spectrum() {
    let params = KZParams::new(builtin_s5_gen1(), from_i64(-1));
    let q1 = build_qk(&params, 1).unwrap();
    assert_eq!(q1.trace().unwrap(), FieldScalar::int(4));
    assert!(q1.is_symmetric());
    let report = integer_eigenvalue_test(&q1).unwrap();
    // (λ−5/3)(λ−1/3)(λ−1/9)(λ²−17/9 λ−4/9)
    let expected = &(&q(&[(-5, 3), (1, 1)]) * &q(&[(-1, 3), (1, 1)]))
        * &(&q(&[(-1, 9), (1, 1)]) * &q(&[(-4, 9), (-17, 9), (1, 1)]));
    assert_eq!(report.charpoly, expected);
    assert_eq!(report.linear_roots, vec!["5/3", "1/3", "1/9"]);
    assert_eq!(report.residual_factor, q(&[(-4, 9), (-17, 9), (1, 1)]));
    assert_eq!(report.residual_roots.as_deref(), Some("(17±√433)/18"));
    assert!(report.roots.contains(&"(17+√433)/18".to_string()));
    assert!(!report.integer_spectrum);
}

#[test]
fn similarity_keeps_the_spectrum() {
    let q1 = build_qk(&KZParams::new(builtin_s5_gen1(), ratio(1, 1)), 1).unwrap();
    let mut s: FieldMatrix = Matrix::identity(5);
    for i in 0..5 {
        for j in 0..5 {
            if j > i {
                s.set(i, j, FieldScalar::ratio((i + 2 * j) as i64, 3));
            }
        }
    }
    s.set(4, 0, FieldScalar::sqrt3());
    let conj = &(&s * &q1) * &s.inverse().unwrap();
    let a = integer_eigenvalue_test(&q1).unwrap();
    let b = integer_eigenvalue_test(&conj).unwrap();
    assert_eq!(a, b);
}

#[test]
fn jucys_murphy_sums_have_integer_spectra() {
    // for a genuine irrep, Q_n is conjugate to a Jucys–Murphy element whose
    // eigenvalues are contents of boxes
    for (parts, n) in [(vec![2, 1], 3), (vec![3, 1], 4), (vec![2, 2], 4), (vec![3, 2], 5), (vec![2, 2, 1], 5)] {
        let rep = young_orthogonal(&Partition::new(parts.clone()).unwrap(), n).unwrap();
        let params = KZParams::new(rep, from_i64(1));
        for k in 1..=n {
            let report = integer_eigenvalue_test(&build_qk(&params, k).unwrap()).unwrap();
            assert!(report.integer_spectrum, "{parts:?} k={k}: {:?}", report.roots);
        }
    }
}
