//! Dense linear algebra over `F_p`: just enough for ranks and exact solves.

use crate::modp::{Fp, Prime};

/// Row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

impl Matrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![p.zero(); rows * cols],
        }
    }

    pub fn from_rows(p: Prime, rows: &[Vec<Fp>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fp {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fp) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fp] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.value()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self, limit_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit_cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j) * inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(i, j) - f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let cols = m.cols;
        m.rref(cols).len()
    }

    /// Solves `X * self = rhs` for `X`; free variables are set to zero.
    /// Returns `None` when the system is inconsistent.
    pub fn solve_left(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, rhs.cols);
        // X * D = L  <=>  D^T * X^T = L^T
        let dt = self.transpose();
        let lt = rhs.transpose();
        let n = dt.cols;
        let mut aug = Matrix::zeros(self.p, dt.rows, n + lt.cols);
        for i in 0..dt.rows {
            for j in 0..n {
                aug.set(i, j, dt.get(i, j));
            }
            for j in 0..lt.cols {
                aug.set(i, n + j, lt.get(i, j));
            }
        }
        let pivots = aug.rref(n);
        for i in pivots.len()..aug.rows {
            if (n..aug.cols).any(|j| !aug.get(i, j).is_zero()) {
                return None;
            }
        }
        let mut xt = Matrix::zeros(self.p, n, lt.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..lt.cols {
                xt.set(c, j, aug.get(r, n + j));
            }
        }
        Some(xt.transpose())
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(p: Prime, vectors: &[Vec<Fp>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(p, vectors).rank()
}
