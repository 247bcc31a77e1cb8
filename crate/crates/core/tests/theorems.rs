use chain_spectra::exact::{exact_multiplicity, QuadraticNumber};
use chain_spectra::graph::Graph;
use chain_spectra::theorems::{
    downer_classify, extend_by_duplicate, negate_classes, period10_vector, period6_vector, Eigenvalue, Mode,
};
use chain_spectra::Tolerances;

/// `A x = λ x` checked edge by edge.
fn is_eigenvector(g: &Graph, x: &[QuadraticNumber], lambda: &QuadraticNumber) -> bool {
    let mut ax = vec![QuadraticNumber::zero(); g.n()];
    for (a, b) in g.edges() {
        ax[a] = &ax[a] + &x[b];
        ax[b] = &ax[b] + &x[a];
    }
    x.iter().any(|e| !e.is_zero()) && ax.iter().zip(x).all(|(l, r)| *l == lambda * r)
}

fn check_duplicates(g: &Graph, x: &[QuadraticNumber], lambda: &QuadraticNumber) {
    assert!(is_eigenvector(g, x, lambda));
    let zeros: Vec<usize> = (0..g.n()).filter(|&v| x[v].is_zero()).collect();
    assert!(!zeros.is_empty());
    for v in zeros {
        let (bigger, y) = extend_by_duplicate(g, x, v).unwrap();
        assert!(is_eigenvector(&bigger, &y, lambda), "duplicate of {}", g.vertex_name(v));
        assert_eq!(exact_multiplicity(&bigger, lambda), 1);
        let lambda_exact = Eigenvalue::Exact(lambda.clone());
        let report = downer_classify(&bigger, &lambda_exact, Mode::Exact, &Tolerances::default()).unwrap();
        let non_downers = report.non_downers();
        // every zero of y is a non-downer, the new vertex and its twin included
        let expected: Vec<usize> = (0..bigger.n()).filter(|&u| y[u].is_zero()).collect();
        assert_eq!(non_downers, expected);
    }
}

#[test]
fn duplicating_zeros_of_h7_at_one() {
    let p = period6_vector(7).unwrap();
    assert_eq!(p.eigenvalue, QuadraticNumber::one());
    check_duplicates(&p.graph(), &p.full_vector(), &p.eigenvalue);
    let m = negate_classes(&p);
    check_duplicates(&m.graph(), &m.full_vector(), &m.eigenvalue);
}

#[test]
fn duplicating_zeros_of_h12_at_minus_omega() {
    let p = period10_vector(12).unwrap();
    assert_eq!(p.eigenvalue, -QuadraticNumber::omega());
    assert_eq!(p.zero_positions(), [3, 8]);
    check_duplicates(&p.graph(), &p.full_vector(), &p.eigenvalue);
}

#[test]
fn refused_lengths() {
    for k in [2, 3, 5, 6, 8] {
        assert!(period6_vector(k).is_err());
    }
    for k in [1, 3, 4, 5, 6, 8, 9, 10] {
        assert!(period10_vector(k).is_err());
    }
}
