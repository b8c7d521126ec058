//! Finite-dimensional associative algebras over the scalar field, given by
//! structure constants: radical computation via the trace form (valid in
//! characteristic zero), minimal polynomials, idempotent search in the
//! semisimple quotient, and Newton lifting of idempotents along the radical.

use crate::DiagError;
use scalar_field::{FPoly, Matrix, Scalar};

/// A finite-dimensional unital algebra in a fixed basis: `mult[i][j]` holds
/// the coordinates of `b_i · b_j`.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
}

impl FdAlgebra {
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on coordinate columns.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut ej = vec![Scalar::zero(); self.dim];
            ej[j] = Scalar::one();
            cols.push(self.multiply(x, &ej));
        }
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    fn trace_of_left_mult(&self, x: &[Scalar]) -> Scalar {
        let mut tr = Scalar::zero();
        for j in 0..self.dim {
            for (i, a) in x.iter().enumerate() {
                if !a.is_zero() && !self.mult[i][j][j].is_zero() {
                    tr = &tr + &(a * &self.mult[i][j][j]);
                }
            }
        }
        tr
    }

    /// Gram matrix of the trace form `B(b_i, b_j) = tr(L_{b_i b_j})`.
    pub fn trace_form(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.trace_of_left_mult(&self.mult[i][j])
        })
    }

    /// Basis of the Jacobson radical (characteristic zero: the kernel of
    /// the trace form), as rows.
    pub fn radical_basis(&self) -> Matrix {
        self.trace_form().kernel_basis()
    }

    /// Checks associativity and the unit laws on all basis triples.
    pub fn verify(&self) -> bool {
        for i in 0..self.dim {
            let mut ei = vec![Scalar::zero(); self.dim];
            ei[i] = Scalar::one();
            if self.multiply(&self.unit, &ei) != ei || self.multiply(&ei, &self.unit) != ei {
                return false;
            }
            for j in 0..self.dim {
                let ij = self.mult[i][j].clone();
                for k in 0..self.dim {
                    let mut ek = vec![Scalar::zero(); self.dim];
                    ek[k] = Scalar::one();
                    let left = self.multiply(&ij, &ek);
                    let right = self.multiply(&ei, &self.mult[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Minimal polynomial of `x`.
    pub fn min_poly(&self, x: &[Scalar]) -> FPoly {
        let mut powers: Vec<Vec<Scalar>> = vec![self.unit.clone()];
        loop {
            // Try to express the next power in terms of the previous ones.
            let next = self.multiply(powers.last().unwrap(), x);
            let m = Matrix::from_fn(self.dim, powers.len(), |i, j| powers[j][i].clone());
            if let Some(c) = m.solve(&next) {
                let mut coeffs: Vec<Scalar> = c.iter().map(|a| -a).collect();
                coeffs.push(Scalar::one());
                return FPoly::new(coeffs);
            }
            powers.push(next);
            assert!(
                powers.len() <= self.dim + 1,
                "minimal polynomial search exceeded the dimension"
            );
        }
    }

    /// Evaluates a polynomial at an algebra element (Horner).
    pub fn eval_poly(&self, p: &FPoly, x: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim];
        for c in p.coeffs().iter().rev() {
            acc = self.multiply(&acc, x);
            for (a, u) in acc.iter_mut().zip(self.unit.iter()) {
                *a = &*a + &(c * u);
            }
        }
        acc
    }

    fn is_scalar(&self, x: &[Scalar]) -> bool {
        let m = Matrix::from_fn(2, self.dim, |i, j| {
            if i == 0 {
                self.unit[j].clone()
            } else {
                x[j].clone()
            }
        });
        m.rank() <= 1
    }

    /// Searches for an idempotent `e` with `e ≠ 0` and `e ≠ 1`, assuming
    /// the algebra is semisimple.  Returns `Ok(None)` if the algebra is
    /// one-dimensional, and `Err(NonSplitField)` if the deterministic
    /// search exhausts its candidates without finding one (which certifies
    /// a division algebra of dimension > 1 for the algebras arising here).
    pub fn find_idempotent_semisimple(&self) -> Result<Option<Vec<Scalar>>, DiagError> {
        if self.dim <= 1 {
            return Ok(None);
        }
        let mut candidates: Vec<Vec<Scalar>> = Vec::new();
        let basis: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.dim];
                e[i] = Scalar::one();
                e
            })
            .collect();
        candidates.extend(basis.iter().cloned());
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    let sum: Vec<Scalar> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(a, b)| a + b)
                        .collect();
                    candidates.push(sum);
                }
                candidates.push(self.multiply(&basis[i], &basis[j]));
            }
        }
        for a in &candidates {
            if self.is_scalar(a) {
                continue;
            }
            if let Some(e) = self.idempotent_from_element(a) {
                return Ok(Some(e));
            }
        }
        Err(DiagError::NonSplitField)
    }

    /// Tries to produce a nontrivial idempotent from a single element via
    /// its minimal polynomial: a coprime factor split yields a spectral
    /// idempotent, and a repeated-factor minimal polynomial yields a
    /// nilpotent whose left ideal has an idempotent right identity.
    fn idempotent_from_element(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        let mu = self.min_poly(a);
        if let Some((f1, f2)) = mu.coprime_split() {
            let (g, u, _) = f1.extended_gcd(&f2);
            assert_eq!(g, FPoly::one(), "coprime split factors must be coprime");
            let e = self.eval_poly(&u.mul(&f1), a);
            debug_assert_eq!(self.multiply(&e, &e), e);
            if !is_zero_vec(&e) && e != self.unit {
                return Some(e);
            }
            return None;
        }
        // μ = p^k: for k ≥ 2, p(a) is a nonzero nilpotent.
        let parts = mu.squarefree_decomposition();
        if let [(p, k)] = parts.as_slice() {
            if *k >= 2 {
                let b = self.eval_poly(p, a);
                if !is_zero_vec(&b) {
                    return self.right_identity_of_left_ideal(&b);
                }
            }
        }
        None
    }

    /// The idempotent generator of the left ideal `A·b` (its right
    /// identity), when it exists.
    fn right_identity_of_left_ideal(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        // Row space of {b_i · b}.
        let products = Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut ei = vec![Scalar::zero(); self.dim];
            ei[i] = Scalar::one();
            self.multiply(&ei, b)[j].clone()
        });
        let (r, pivots) = products.rref();
        let ideal: Vec<Vec<Scalar>> = (0..pivots.len())
            .map(|k| (0..self.dim).map(|j| r[(k, j)].clone()).collect())
            .collect();
        if ideal.is_empty() || ideal.len() == self.dim {
            return None;
        }
        // Solve  w_j · (Σ_k c_k w_k) = w_j  for all j.
        let rows = ideal.len() * self.dim;
        let mut system = Matrix::zero(rows, ideal.len());
        let mut rhs = vec![Scalar::zero(); rows];
        for (j, wj) in ideal.iter().enumerate() {
            for (k, wk) in ideal.iter().enumerate() {
                let prod = self.multiply(wj, wk);
                for (c, v) in prod.into_iter().enumerate() {
                    system[(j * self.dim + c, k)] = v;
                }
            }
            for (c, v) in wj.iter().enumerate() {
                rhs[j * self.dim + c] = v.clone();
            }
        }
        let c = system.solve(&rhs)?;
        let mut e = vec![Scalar::zero(); self.dim];
        for (k, wk) in ideal.iter().enumerate() {
            for (i, v) in wk.iter().enumerate() {
                e[i] = &e[i] + &(&c[k] * v);
            }
        }
        if is_zero_vec(&e) || e == self.unit || self.multiply(&e, &e) != e {
            return None;
        }
        Some(e)
    }

    /// Newton iteration `e ← 3e² − 2e³` lifting an idempotent-mod-radical
    /// to an exact idempotent.
    pub fn lift_idempotent(&self, approx: &[Scalar]) -> Vec<Scalar> {
        let mut e = approx.to_vec();
        for _ in 0..64 {
            let e2 = self.multiply(&e, &e);
            if e2 == e {
                return e;
            }
            let e3 = self.multiply(&e2, &e);
            e = e2
                .iter()
                .zip(&e3)
                .map(|(a, b)| &(&Scalar::from_integer(3) * a) - &(&Scalar::from_integer(2) * b))
                .collect();
        }
        panic!("idempotent lifting did not converge: the defect is not nilpotent");
    }

    /// The quotient by a subspace spanned by the rows of `sub` (which must
    /// be a two-sided ideal for the result to be an algebra), together with
    /// the section embedding quotient coordinates back into the algebra and
    /// the projection applied to each original basis vector.
    pub fn quotient(&self, sub: &Matrix) -> (FdAlgebra, QuotientMap) {
        let (r, pivots) = sub.rref();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let reduce = move |v: &[Scalar], r: &Matrix, pivots: &[usize]| -> Vec<Scalar> {
            let mut w = v.to_vec();
            for (row, &p) in pivots.iter().enumerate() {
                if w[p].is_zero() {
                    continue;
                }
                let c = w[p].clone();
                for j in 0..w.len() {
                    w[j] = &w[j] - &(&c * &r[(row, j)]);
                }
            }
            w
        };
        let to_quot = |v: &[Scalar]| -> Vec<Scalar> {
            let w = reduce(v, &r, &pivots);
            free.iter().map(|&c| w[c].clone()).collect()
        };
        let from_quot = |v: &[Scalar]| -> Vec<Scalar> {
            let mut w = vec![Scalar::zero(); self.dim];
            for (k, &c) in free.iter().enumerate() {
                w[c] = v[k].clone();
            }
            w
        };
        let qdim = free.len();
        let mut mult = vec![vec![vec![Scalar::zero(); qdim]; qdim]; qdim];
        for (i, &ci) in free.iter().enumerate() {
            for (j, &cj) in free.iter().enumerate() {
                mult[i][j] = to_quot(&self.mult[ci][cj]);
            }
        }
        let unit = to_quot(&self.unit);
        let quotient = FdAlgebra {
            dim: qdim,
            mult,
            unit,
        };
        let section: Vec<Vec<Scalar>> = (0..qdim)
            .map(|k| {
                let mut v = vec![Scalar::zero(); qdim];
                v[k] = Scalar::one();
                from_quot(&v)
            })
            .collect();
        let projections: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut v = vec![Scalar::zero(); self.dim];
                v[i] = Scalar::one();
                to_quot(&v)
            })
            .collect();
        (
            quotient,
            QuotientMap {
                section,
                projections,
            },
        )
    }
}

/// Coordinate maps for a quotient algebra: `section[k]` embeds the k-th
/// quotient basis vector, `projections[i]` is the image of the i-th
/// original basis vector.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub section: Vec<Vec<Scalar>>,
    pub projections: Vec<Vec<Scalar>>,
}

impl QuotientMap {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let qdim = self.projections.first().map_or(0, Vec::len);
        let mut out = vec![Scalar::zero(); qdim];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in self.projections[i].iter().enumerate() {
                out[k] = &out[k] + &(a * c);
            }
        }
        out
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        let dim = self.section.first().map_or(0, Vec::len);
        let mut out = vec![Scalar::zero(); dim];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, c) in self.section[k].iter().enumerate() {
                out[i] = &out[i] + &(a * c);
            }
        }
        out
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
