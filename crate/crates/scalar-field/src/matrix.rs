//! Exact dense linear algebra over [`crate::Scalar`].
//!
//! Everything downstream (structure-constant checks, Gram ranks, Ext
//! computations, chain-map spaces) reduces to ranks, kernels, and solves of
//! modest dense matrices over Q(t) or Q, so one shared Gaussian-elimination
//! toolkit lives here.

use crate::Scalar;

/// A dense matrix over Q(t), stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc += &(&self[(i, k)] * &other[(k, j)]);
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack height mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = &f * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel (columns x with self·x = 0), one basis
    /// vector per row of the returned matrix.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis[(k, fc)] = Scalar::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                basis[(k, pc)] = -&r[(prow, fc)];
            }
        }
        basis
    }

    /// Solves `self · x = b` for a column vector b given as a slice.
    /// Returns any particular solution, or None when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve rhs length mismatch");
        let rhs = Matrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constants column: inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (prow, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(prow, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let aug = self.hstack(&Matrix::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.rows, self.rows, |i, j| {
            r[(i, self.rows + j)].clone()
        }))
    }

    /// Determinant by fraction-based elimination (exact over the field).
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det = &det * &m[(c, c)];
            let inv = m[(c, c)].inverse().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    for j in c..m.cols {
                        let delta = &f * &m[(c, j)];
                        m[(i, j)] = &m[(i, j)] - &delta;
                    }
                }
            }
        }
        det
    }

    /// Applies [`Scalar::specialize`] entrywise.
    pub fn specialize(
        &self,
        v: &num::rational::BigRational,
    ) -> Result<Matrix, crate::ScalarError> {
        let mut out = Matrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].specialize(v)?;
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(1), s(0), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.nrows(), 1);
        let prod = m.matmul(&k.transpose());
        assert!(prod.is_zero());
    }

    #[test]
    fn inverse_over_function_field() {
        let t = Scalar::t();
        let m = Matrix::from_rows(vec![vec![t.clone(), s(1)], vec![s(1), s(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(2));
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]);
        assert_eq!(m.determinant(), s(-2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(2), s(2)]]);
        assert!(m.solve(&[s(3), s(6)]).is_some());
        assert!(m.solve(&[s(3), s(7)]).is_none());
    }
}
