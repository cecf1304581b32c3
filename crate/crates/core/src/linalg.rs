//! Dense exact linear algebra over any field with `num_traits::Num`.

use std::fmt;

use num_traits::Num;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Num> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gaussian elimination to reduced row echelon form, in place.
    /// Returns the pivot columns and the sign of the row permutation.
    fn rref(&mut self, ncols: usize) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut row = 0;
        for col in 0..ncols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                self.swap_rows(p, row);
                odd = !odd;
            }
            let inv = T::one() / self.get(row, col).clone();
            for j in col..self.cols {
                let v = self.get(row, j).clone() * inv.clone();
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let factor = self.get(i, col).clone();
                for j in col..self.cols {
                    let v = self.get(i, j).clone() - factor.clone() * self.get(row, j).clone();
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (pivots, odd)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let cols = m.cols;
        m.rref(cols).0.len()
    }

    /// Exact determinant by fraction-producing elimination.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return T::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = T::zero() - det;
            }
            let pivot = m.get(col, col).clone();
            det = det * pivot.clone();
            for i in col + 1..n {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone() / pivot.clone();
                for j in col..n {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(col, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    /// Consistent but rank-deficient.
    Underdetermined { rank: usize, unknowns: usize },
    /// No solution; `rank` is the coefficient rank, `augmented_rank` that of `[A | b]`.
    Inconsistent { rank: usize, augmented_rank: usize },
}

/// Solves the (possibly overdetermined) system `A x = b`.
pub fn solve<T: Clone + Num>(a: &Matrix<T>, b: &[T]) -> Solution<T> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let n = a.cols;
    let mut aug = Matrix::from_fn(a.rows, n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (pivots, _) = aug.rref(n + 1);
    let rank = pivots.iter().filter(|&&c| c < n).count();
    if pivots.len() > rank {
        return Solution::Inconsistent { rank, augmented_rank: pivots.len() };
    }
    if rank < n {
        return Solution::Underdetermined { rank, unknowns: n };
    }
    Solution::Unique((0..n).map(|i| aug.get(i, n).clone()).collect())
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
