mod common;

use common::oracle::*;

#[test]
fn path_p4() {
    // x⁴ − 3x² + 1
    let a = vec![vec![0, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![0, 0, 1, 0]];
    let p = characteristic_polynomial(&a);
    assert_eq!(p, Poly::from_ints(&[1, 0, -3, 0, 1]));
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    for (x, y) in oracle_eigenvalues(&a).iter().zip([phi, phi - 1.0, 1.0 - phi, -phi]) {
        assert!((x - y).abs() < 1e-10);
    }
    assert_eq!(oracle_multiplicity(&p, OracleValue::Omega), 1);
    assert_eq!(oracle_multiplicity(&p, OracleValue::MinusOmega), 1);
    assert_eq!(oracle_multiplicity(&p, OracleValue::Int(1)), 0);
}

#[test]
fn triangle_has_a_double_root() {
    let a = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
    let p = characteristic_polynomial(&a);
    assert_eq!(p, Poly::from_ints(&[-2, -3, 0, 1]));
    let roots = real_roots(&p, 1e-12);
    assert_eq!(roots.iter().map(|r| r.multiplicity).collect::<Vec<_>>(), [2, 1]);
    assert_eq!(oracle_multiplicity(&p, OracleValue::Int(-1)), 2);
    let e = oracle_eigenvalues(&a);
    assert!((e[0] - 2.0).abs() < 1e-10 && (e[1] + 1.0).abs() < 1e-10 && (e[2] + 1.0).abs() < 1e-10);
}

#[test]
fn c4_zero_root() {
    // x⁴ − 4x²
    let a = vec![vec![0, 0, 1, 1], vec![0, 0, 1, 1], vec![1, 1, 0, 0], vec![1, 1, 0, 0]];
    let p = characteristic_polynomial(&a);
    assert_eq!(p, Poly::from_ints(&[0, 0, -4, 0, 1]));
    assert_eq!(oracle_multiplicity(&p, OracleValue::Int(0)), 2);
    assert_eq!(oracle_eigenvalues(&a).len(), 4);
}
