use serde::Serialize;

use super::eig_symmetric;
use crate::config::Tolerances;

type IntMatrix = Vec<Vec<i64>>;

/// Bipartite block `C` of the half graph `H(k)`: `C[i][j] = 1` iff
/// `j ≤ k − i + 1` (1-based), rows indexed by `U`, columns by `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseBlock {
    k: usize,
    c: IntMatrix,
}

impl StaircaseBlock {
    pub fn new(k: usize) -> Self {
        let c = (0..k)
            .map(|i| (0..k).map(|j| i64::from(i + j < k)).collect())
            .collect();
        Self { k, c }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.c
    }

    /// The block with the `V` columns listed in reverse (`v_k, …, v_1`).
    /// This is the upper triangular all-ones matrix, which satisfies
    /// `C + Cᵀ = J + I`.
    pub fn reversed_columns(&self) -> IntMatrix {
        self.c
            .iter()
            .map(|row| row.iter().rev().copied().collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsdReport {
    pub k: usize,
    /// `C' + C'ᵀ = J + I` for the column-reversed block `C'`.
    pub staircase_ok: bool,
    /// `4C'C'ᵀ − 2C' − 2C'ᵀ + I = (2C'−I)(2C'−I)ᵀ = 4C'C'ᵀ − I − 2J`.
    pub identity_ok: bool,
    pub min_gram_eigenvalue: f64,
    /// `min_gram_eigenvalue ≥ 1/4 − gap_margin`.
    pub bound_ok: bool,
}

impl PsdReport {
    pub fn passed(&self) -> bool {
        self.staircase_ok && self.identity_ok && self.bound_ok
    }
}

fn mul_transpose(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter()
        .map(|x| b.iter().map(|y| x.iter().zip(y).map(|(p, q)| p * q).sum()).collect())
        .collect()
}

fn transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

fn combine(terms: &[(i64, &IntMatrix)], n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| terms.iter().map(|(s, m)| s * m[i][j]).sum()).collect())
        .collect()
}

/// Checks, in integer arithmetic, the matrix identity showing that
/// `4CCᵀ − I` is positive semidefinite for the half-graph block, and
/// reports the smallest eigenvalue of the Gram matrix `CCᵀ`.
///
/// Reversing the `V` columns leaves `CCᵀ` unchanged, so both the identity
/// and the eigenvalue bound are checked on the reversed block.
pub fn psd_identity_check(k: usize, tol: &Tolerances) -> PsdReport {
    let block = StaircaseBlock::new(k);
    let c = block.reversed_columns();
    let ct = transpose(&c);
    let ident: IntMatrix = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    let ones: IntMatrix = vec![vec![1; k]; k];

    let staircase_ok = combine(&[(1, &c), (1, &ct)], k) == combine(&[(1, &ones), (1, &ident)], k);

    let gram = mul_transpose(&c, &c);
    let d = combine(&[(2, &c), (-1, &ident)], k);
    let product = mul_transpose(&d, &d);
    let expanded = combine(&[(4, &gram), (-2, &c), (-2, &ct), (1, &ident)], k);
    let with_ones = combine(&[(4, &gram), (-1, &ident), (-2, &ones)], k);
    let identity_ok = product == expanded && product == with_ones;

    debug_assert_eq!(gram, mul_transpose(block.matrix(), block.matrix()));
    let gram_f: Vec<Vec<f64>> = gram.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    let min_gram_eigenvalue = eig_symmetric(&gram_f, tol)
        .ok()
        .and_then(|s| s.eigenvalues().last().copied())
        .unwrap_or(f64::NAN);
    PsdReport {
        k,
        staircase_ok,
        identity_ok,
        min_gram_eigenvalue,
        bound_ok: min_gram_eigenvalue >= 0.25 - tol.gap_margin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_shape() {
        let b = StaircaseBlock::new(2);
        assert_eq!(b.matrix(), &vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(b.reversed_columns(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn k1() {
        let r = psd_identity_check(1, &Tolerances::default());
        assert!(r.passed());
        assert!((r.min_gram_eigenvalue - 1.0).abs() < 1e-12);
    }

    #[test]
    fn k2_min_eigenvalue() {
        let r = psd_identity_check(2, &Tolerances::default());
        assert!(r.passed());
        assert!((r.min_gram_eigenvalue - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn unreversed_block_is_not_j_plus_i() {
        let b = StaircaseBlock::new(3);
        let c = b.matrix();
        let sym = combine(&[(1, c), (1, &transpose(c))], 3);
        assert_ne!(sym, vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }
}
