//! Finite-dimensional left modules over an `FdAlgebra` given by action
//! matrices, with the linear-algebra tool chest: homomorphism spaces,
//! submodules and quotients, radical series, and contragredient duals.

use diagram_category::FdAlgebra;
use scalar_field::{Matrix, Scalar};

/// A left module in a fixed basis: one action matrix per algebra basis
/// element.
#[derive(Clone, Debug)]
pub struct FdModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl FdModule {
    pub fn zero_module(alg: &FdAlgebra) -> FdModule {
        FdModule {
            dim: 0,
            action: vec![Matrix::zero(0, 0); alg.dim],
        }
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Applies an algebra element to a vector.
    pub fn apply(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (c, m) in x.iter().zip(&self.action) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if !m[(i, j)].is_zero() && !v[j].is_zero() {
                        out[i] = &out[i] + &(&(c * &m[(i, j)]) * &v[j]);
                    }
                }
            }
        }
        out
    }

    /// Checks that the action respects the structure constants and that
    /// the unit acts as the identity.
    pub fn verify(&self, alg: &FdAlgebra) -> bool {
        if self.act(&alg.unit) != Matrix::identity(self.dim) {
            return false;
        }
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let lhs = self.action[i].matmul(&self.action[j]);
                let rhs = self.act(&alg.mult[i][j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn direct_sum(&self, other: &FdModule) -> FdModule {
        let dim = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                Matrix::from_fn(dim, dim, |i, j| {
                    if i < self.dim && j < self.dim {
                        a[(i, j)].clone()
                    } else if i >= self.dim && j >= self.dim {
                        b[(i - self.dim, j - self.dim)].clone()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect();
        FdModule { dim, action }
    }

    /// The contragredient module along an anti-automorphism given as a
    /// basis permutation: `(τ·φ)(v) = φ(τ(x)·v)` yields action matrices
    /// `ρ^∘(b) = ρ(τ(b))ᵀ`.
    pub fn contragredient(&self, tau: &[usize]) -> FdModule {
        let action = (0..self.action.len())
            .map(|i| self.action[tau[i]].transpose())
            .collect();
        FdModule {
            dim: self.dim,
            action,
        }
    }

    /// Restricts the module structure to the span of the given row
    /// vectors (which must be action-stable).  Returns the submodule and
    /// the inclusion matrix (columns are the basis vectors in ambient
    /// coordinates).
    pub fn submodule(&self, span: &Matrix) -> (FdModule, Matrix) {
        let (r, pivots) = span.rref();
        let d = pivots.len();
        let basis = Matrix::from_fn(self.dim, d, |i, j| r[(j, i)].clone());
        let action = self
            .action
            .iter()
            .map(|m| {
                let mapped = m.matmul(&basis);
                let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
                for j in 0..d {
                    let col: Vec<Scalar> = (0..self.dim).map(|i| mapped[(i, j)].clone()).collect();
                    cols.push(basis.solve(&col).expect("span is not action-stable"));
                }
                Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
            })
            .collect();
        (FdModule { dim: d, action }, basis)
    }

    /// Quotient by the span of the given row vectors (action-stable).
    /// Returns the quotient and the projection matrix.
    pub fn quotient(&self, span: &Matrix) -> (FdModule, Matrix) {
        let (r, pivots) = span.rref();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let d = free.len();
        // Projection: reduce a vector modulo the subspace, keep free coords.
        let proj = {
            let mut p = Matrix::zero(d, self.dim);
            for (k, &fc) in free.iter().enumerate() {
                p[(k, fc)] = Scalar::one();
                for (prow, &pc) in pivots.iter().enumerate() {
                    p[(k, pc)] = -&r[(prow, fc)];
                }
            }
            p
        };
        // Section: the free coordinates embed as themselves.
        let section = Matrix::from_fn(self.dim, d, |i, j| {
            if i == free[j] {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let action = self
            .action
            .iter()
            .map(|m| proj.matmul(&m.matmul(&section)))
            .collect();
        (FdModule { dim: d, action }, proj)
    }

    /// Span of `J·M` for the radical row basis `rad` of the algebra.
    pub fn radical_span(&self, rad: &Matrix) -> Matrix {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for k in 0..rad.nrows() {
            let x: Vec<Scalar> = rad.row(k).to_vec();
            let m = self.act(&x);
            for j in 0..self.dim {
                rows.push((0..self.dim).map(|i| m[(i, j)].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Matrix::zero(0, self.dim);
        }
        let (r, pivots) = Matrix::from_rows(rows).rref();
        Matrix::from_fn(pivots.len(), self.dim, |i, j| r[(i, j)].clone())
    }

    /// The radical filtration `M ⊃ JM ⊃ J²M ⊃ …` as successive spanning
    /// row matrices in the coordinates of `M` (excluding `M` itself,
    /// ending with the zero space).
    pub fn radical_series(&self, rad: &Matrix) -> Vec<Matrix> {
        let mut series = Vec::new();
        let mut current = self.clone();
        // Track the composite inclusion of the current layer into M.
        let mut incl = Matrix::identity(self.dim);
        loop {
            let span = current.radical_span(rad);
            // Express in ambient coordinates.
            let ambient = Matrix::from_fn(span.nrows(), self.dim, |i, j| {
                let mut acc = Scalar::zero();
                for k in 0..current.dim {
                    acc = &acc + &(&span[(i, k)] * &incl[(j, k)]);
                }
                acc
            });
            let empty = ambient.nrows() == 0;
            series.push(ambient.clone());
            if empty {
                return series;
            }
            let (sub, basis) = current.submodule(&span);
            incl = incl_compose(&incl, &basis);
            current = sub;
        }
    }
}

/// Composes inclusion matrices (columns are basis vectors).
fn incl_compose(outer: &Matrix, inner: &Matrix) -> Matrix {
    outer.matmul(inner)
}

/// Basis of the space of module homomorphisms `M → N`, each returned as an
/// `N.dim × M.dim` matrix.  Computed by nullspace refinement over the
/// algebra basis.
pub fn hom_space(alg: &FdAlgebra, m: &FdModule, n: &FdModule) -> Vec<Matrix> {
    let unknowns = m.dim * n.dim;
    if unknowns == 0 {
        return Vec::new();
    }
    // Current basis of candidate solutions, as rows of length `unknowns`
    // (entry order: T[i][j] at i·M.dim + j).
    let mut basis = Matrix::identity(unknowns);
    for b in 0..alg.dim {
        if basis.nrows() == 0 {
            break;
        }
        let am = &m.action[b];
        let an = &n.action[b];
        // Constraint: T·ρ_M(b) − ρ_N(b)·T = 0 on the current basis.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for k in 0..basis.nrows() {
            let t = Matrix::from_fn(n.dim, m.dim, |i, j| basis[(k, i * m.dim + j)].clone());
            let c = t.matmul(am).sub(&an.matmul(&t));
            rows.push(
                (0..n.dim)
                    .flat_map(|i| (0..m.dim).map(move |j| (i, j)))
                    .map(|(i, j)| c[(i, j)].clone())
                    .collect(),
            );
        }
        // Kernel of the constraint restricted to the current basis.
        let constraint = Matrix::from_rows(rows).transpose();
        let coeffs = constraint.kernel_basis();
        basis = coeffs.matmul(&basis);
    }
    (0..basis.nrows())
        .map(|k| Matrix::from_fn(n.dim, m.dim, |i, j| basis[(k, i * m.dim + j)].clone()))
        .collect()
}

/// Dimension of the homomorphism space.
pub fn hom_dim(alg: &FdAlgebra, m: &FdModule, n: &FdModule) -> usize {
    hom_space(alg, m, n).len()
}
