//! Dense matrices over a prime field F_q (q small), with the exact linear
//! algebra needed for subspace canonical forms: multiplication, reduced row
//! echelon form, rank, kernels, and solving.

use serde::{Deserialize, Serialize};

/// A matrix over F_q, stored row-major with entries reduced mod q.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FqMat {
    pub q: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

fn inv_mod(a: u32, q: u32) -> u32 {
    // Fermat: a^(q-2) mod q for prime q.
    assert!(a % q != 0, "inverse of zero mod {q}");
    let mut acc = 1u64;
    let mut base = (a % q) as u64;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    acc as u32
}

impl FqMat {
    pub fn zero(q: u32, rows: usize, cols: usize) -> FqMat {
        FqMat {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(q: u32, n: usize) -> FqMat {
        let mut m = FqMat::zero(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(q: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> FqMat {
        let mut m = FqMat::zero(q, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j] as u32
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = (v % self.q) as u8;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn matmul(&self, other: &FqMat) -> FqMat {
        assert_eq!(self.q, other.q, "field mismatch");
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        FqMat::from_fn(self.q, self.rows, other.cols, |i, j| {
            let mut acc = 0u32;
            for k in 0..self.cols {
                acc = (acc + self.get(i, k) * other.get(k, j)) % self.q;
            }
            acc
        })
    }

    pub fn add(&self, other: &FqMat) -> FqMat {
        assert_eq!((self.rows, self.cols, self.q), (other.rows, other.cols, other.q));
        FqMat::from_fn(self.q, self.rows, self.cols, |i, j| {
            (self.get(i, j) + other.get(i, j)) % self.q
        })
    }

    pub fn neg(&self) -> FqMat {
        FqMat::from_fn(self.q, self.rows, self.cols, |i, j| {
            (self.q - self.get(i, j)) % self.q
        })
    }

    pub fn transpose(&self) -> FqMat {
        FqMat::from_fn(self.q, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FqMat) -> FqMat {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        assert_eq!(self.q, other.q);
        FqMat::from_fn(self.q, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &FqMat) -> FqMat {
        assert_eq!(self.rows, other.rows, "hstack height mismatch");
        assert_eq!(self.q, other.q);
        FqMat::from_fn(self.q, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FqMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(p, j));
                m.set(r, j, b);
                m.set(p, j, a);
            }
            let inv = inv_mod(m.get(r, c), m.q);
            for j in 0..m.cols {
                m.set(r, j, m.get(r, j) * inv % m.q);
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) != 0 {
                    let f = m.get(i, c);
                    for j in 0..m.cols {
                        let v = (m.get(i, j) + (m.q - f % m.q) * m.get(r, j)) % m.q;
                        m.set(i, j, v);
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

    /// Nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> FqMat {
        let (r, pivots) = self.rref();
        FqMat::from_fn(self.q, pivots.len(), self.cols, |i, j| r.get(i, j))
    }

    /// Basis of the right kernel, one vector per row of the result.
    pub fn kernel_basis(&self) -> FqMat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FqMat::zero(self.q, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (prow, &pc) in pivots.iter().enumerate() {
                basis.set(k, pc, (self.q - r.get(prow, fc)) % self.q);
            }
        }
        basis
    }

    /// Solves `self · X = B` column-by-column; None when inconsistent.
    pub fn solve(&self, b: &FqMat) -> Option<FqMat> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = FqMat::zero(self.q, self.cols, b.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(prow, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FqMat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        if self.rank() != self.rows {
            return None;
        }
        self.solve(&FqMat::identity(self.q, self.rows))
    }

    /// Row vectors as a list (used for canonical subspace encodings).
    pub fn rows_vec(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank_mod_3() {
        let m = FqMat::from_fn(3, 2, 3, |i, j| ((i + 1) * (j + 1)) as u32);
        // rows (1,2,3),(2,4,6) are proportional mod 3.
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = FqMat::from_fn(2, 2, 4, |i, j| ((i + j) % 2) as u32);
        let k = m.kernel_basis();
        assert_eq!(k.rows + m.rank(), 4);
        assert!(m.matmul(&k.transpose()).is_zero());
    }

    #[test]
    fn inverse_mod_3() {
        let mut m = FqMat::identity(3, 2);
        m.set(0, 1, 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), FqMat::identity(3, 2));
    }

    #[test]
    fn solve_roundtrip() {
        let a = FqMat::from_fn(3, 3, 2, |i, j| ((i + 2 * j + 1) % 3) as u32);
        let x = FqMat::from_fn(3, 2, 1, |i, _| (i % 3) as u32);
        let b = a.matmul(&x);
        let got = a.solve(&b).unwrap();
        assert_eq!(a.matmul(&got), b);
    }
}
