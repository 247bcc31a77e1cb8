use super::{ExactError, QuadraticNumber};

/// Dense matrix over ℚ(√5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QuadraticNumber>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 {
            return Err(ExactError::EmptyMatrix);
        }
        Ok(Self {
            rows,
            cols,
            entries: vec![QuadraticNumber::zero(); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self, ExactError> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, QuadraticNumber::one());
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<QuadraticNumber>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(ExactError::EmptyMatrix);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::RaggedRows);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadraticNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: QuadraticNumber) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[QuadraticNumber] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn to_rows(&self) -> Vec<Vec<QuadraticNumber>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    /// Rank by Gaussian elimination. The pivot of each column is the first
    /// row (at or below the current one) with a nonzero entry.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        echelon(&mut rows, self.cols, false).len()
    }

    /// Basis of the right null space, read off the reduced row echelon form.
    ///
    /// Each basis vector has a 1 in one free column and zeros in the others.
    pub fn null_space(&self) -> Vec<Vec<QuadraticNumber>> {
        let mut rows = self.to_rows();
        let pivots = echelon(&mut rows, self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![QuadraticNumber::zero(); self.cols];
                v[free] = QuadraticNumber::one();
                for &(r, c) in &pivots {
                    v[c] = -&rows[r][free];
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, x: &[QuadraticNumber]) -> Result<Vec<QuadraticNumber>, ExactError> {
        if x.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = QuadraticNumber::zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }
}

/// Row-reduces `rows` in place and returns the (row, column) pivot positions.
/// With `reduced`, pivots are scaled to one and cleared above as well.
fn echelon(rows: &mut [Vec<QuadraticNumber>], cols: usize, reduced: bool) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if reduced {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let targets: Box<dyn Iterator<Item = &mut Vec<QuadraticNumber>>> = if reduced {
            let (head, tail) = rows.split_at_mut(r);
            Box::new(head.iter_mut().chain(tail[1..].iter_mut()))
        } else {
            Box::new(rows[r + 1..].iter_mut())
        };
        for row in targets {
            if row[c].is_zero() {
                continue;
            }
            let factor = if reduced { row[c].clone() } else { &row[c] * &inv };
            for j in c..cols {
                if pivot_row[j].is_zero() {
                    continue;
                }
                let delta = &factor * &pivot_row[j];
                row[j] -= &delta;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadraticNumber {
        QuadraticNumber::from_integer(n)
    }

    #[test]
    fn identity_and_ones() {
        assert_eq!(ExactMatrix::identity(2).unwrap().rank(), 2);
        let ones = ExactMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]]).unwrap();
        assert_eq!(ones.rank(), 1);
        let ns = ones.null_space();
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(ExactMatrix::zeros(0, 3), Err(ExactError::EmptyMatrix));
        assert_eq!(ExactMatrix::from_rows(vec![]), Err(ExactError::EmptyMatrix));
    }

    #[test]
    fn null_space_vectors_are_annihilated() {
        let w = QuadraticNumber::omega();
        let m = ExactMatrix::from_rows(vec![
            vec![q(1), w.clone(), q(0)],
            vec![w.clone(), &w * &w, q(0)],
            vec![q(0), q(0), q(0)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).unwrap().iter().all(QuadraticNumber::is_zero));
        }
    }
}
