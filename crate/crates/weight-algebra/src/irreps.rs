//! Rational irreducible representations of the automorphism groups that
//! occur: symmetric groups via the integral Specht construction, the
//! trivial group GL₁(F₂), and GL₂(F₂) through its isomorphism with S₃.

use crate::WeightError;
use regular_backend::{automorphisms, Backend, Limits, MorData, RMorphism, RObject};
use scalar_field::{Matrix, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Identifier of one irreducible representation of an automorphism group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum IrrepId {
    /// Symmetric-group irrep labelled by an integer partition (also used
    /// for GL₂(F₂) ≅ S₃, with partitions of 3).
    Partition(Vec<usize>),
    /// Entry of a built-in table for other small matrix groups.
    Table(usize),
}

impl IrrepId {
    pub fn display(&self) -> String {
        match self {
            IrrepId::Partition(p) if p.is_empty() => "()".to_string(),
            IrrepId::Partition(p) => format!(
                "({})",
                p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            IrrepId::Table(i) => format!("#{i}"),
        }
    }
}

/// One irreducible representation of `Aut(X)`, with the group elements in
/// the enumeration order of the backend, a matrix per element, and an
/// invariant symmetric bilinear form on the representation space.
#[derive(Clone, Debug)]
pub struct GroupRep {
    pub elements: Vec<RMorphism>,
    pub mats: Vec<Matrix>,
    pub form: Matrix,
    index: HashMap<RMorphism, usize>,
}

impl GroupRep {
    pub fn dim(&self) -> usize {
        if self.mats.is_empty() {
            0
        } else {
            self.mats[0].nrows()
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Matrix of the given automorphism.
    pub fn mat_of(&self, a: &RMorphism) -> &Matrix {
        let i = *self.index.get(a).expect("automorphism not in the group");
        &self.mats[i]
    }
}

/// The permutation of `0..n` carried by an automorphism, as a group
/// homomorphism `Aut(X) → S_n` (the stored set-world data composes in the
/// reverse order, so we invert it).
fn permutation_of(a: &RMorphism) -> Vec<usize> {
    match &a.data {
        MorData::SetMap(p) => {
            let mut inv = vec![0usize; p.len()];
            for (y, &x) in p.iter().enumerate() {
                inv[x] = y;
            }
            inv
        }
        MorData::Matrix(_) => panic!("permutation of a linear automorphism"),
    }
}

/// The permutation of the nonzero vectors of F₂² carried by an element of
/// GL₂(F₂); vectors are indexed by their bitmask `2·v₀ + v₁ − 1`.
fn gl2f2_permutation(a: &RMorphism) -> Vec<usize> {
    let MorData::Matrix(m) = &a.data else {
        panic!("expected a linear automorphism");
    };
    assert_eq!((m.q, m.rows, m.cols), (2, 2, 2));
    let mut perm = vec![0usize; 3];
    for mask in 1..=3usize {
        let (v0, v1) = ((mask >> 1) as u32 & 1, mask as u32 & 1);
        let w0 = (m.get(0, 0) * v0 + m.get(0, 1) * v1) % 2;
        let w1 = (m.get(1, 0) * v0 + m.get(1, 1) * v1) % 2;
        perm[mask - 1] = (2 * w0 + w1) as usize - 1;
    }
    perm
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A tabloid: rows of a Young diagram filled with `0..n`, each row sorted
/// (row order matters, order within a row does not).
type Tabloid = Vec<Vec<usize>>;

fn tabloid_of(rows: &[Vec<usize>]) -> Tabloid {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort();
            r
        })
        .collect()
}

fn apply_perm_tabloid(perm: &[usize], t: &Tabloid) -> Tabloid {
    tabloid_of(
        &t.iter()
            .map(|row| row.iter().map(|&x| perm[x]).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

/// All standard Young tableaux of the given shape (rows and columns
/// increasing), as row fillings.
fn standard_tableaux(shape: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|_| Vec::new()).collect();
    fn go(
        k: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len >= shape[i] {
                continue;
            }
            // Standardness: the cell above (if any) must already be filled.
            if i > 0 && rows[i - 1].len() <= len {
                continue;
            }
            rows[i].push(k);
            go(k + 1, n, shape, rows, out);
            rows[i].pop();
        }
    }
    go(0, n, shape, &mut rows, &mut out);
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn sign_of(perm: &[usize]) -> i64 {
    let mut sgn = 1i64;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sgn = -sgn;
            }
        }
    }
    sgn
}

/// The polytabloid of a tableau: the signed sum of tabloids over the
/// column stabilizer, as a vector in the tabloid basis.
fn polytabloid(
    tableau: &[Vec<usize>],
    tabloids: &[Tabloid],
    tabloid_index: &HashMap<Tabloid, usize>,
) -> Vec<Scalar> {
    let ncols = tableau.first().map_or(0, |r| r.len());
    // Columns of the tableau.
    let cols: Vec<Vec<usize>> = (0..ncols)
        .map(|c| tableau.iter().filter_map(|row| row.get(c).copied()).collect())
        .collect();
    let mut vec = vec![Scalar::zero(); tabloids.len()];
    // Iterate over the column stabilizer: independent permutations of the
    // entries of each column.
    fn go(
        cols: &[Vec<usize>],
        c: usize,
        perm: &mut Vec<usize>,
        sgn: i64,
        tableau: &[Vec<usize>],
        tabloid_index: &HashMap<Tabloid, usize>,
        vec: &mut Vec<Scalar>,
    ) {
        if c == cols.len() {
            let t = tabloid_of(
                &tableau
                    .iter()
                    .map(|row| row.iter().map(|&x| perm[x]).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            );
            let i = tabloid_index[&t];
            vec[i] = &vec[i] + &Scalar::from_integer(sgn);
            return;
        }
        let col = &cols[c];
        for p in all_permutations(col.len()) {
            let s = sign_of(&p);
            for (slot, &src) in p.iter().enumerate() {
                perm[col[src]] = col[slot];
            }
            go(cols, c + 1, perm, sgn * s, tableau, tabloid_index, vec);
            for &x in col {
                perm[x] = x;
            }
        }
    }
    let n: usize = tableau.iter().map(|r| r.len()).sum();
    let mut perm: Vec<usize> = (0..n).collect();
    go(&cols, 0, &mut perm, 1, tableau, tabloid_index, &mut vec);
    vec
}

/// The Specht module of shape `shape` for the permutations `perms` of
/// `0..n` (each given as images).  Returns, per permutation, its matrix in
/// the standard-polytabloid basis, plus the invariant form inherited from
/// the tabloid permutation module.
fn specht_matrices(shape: &[usize], perms: &[Vec<usize>]) -> (Vec<Matrix>, Matrix) {
    let n: usize = shape.iter().sum();
    // Enumerate all tabloids: ordered set partitions with given row sizes.
    let mut tabloids: Vec<Tabloid> = Vec::new();
    fn enumerate_tabloids(
        shape: &[usize],
        row: usize,
        remaining: Vec<usize>,
        prefix: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tabloid>,
    ) {
        if row == shape.len() {
            assert!(remaining.is_empty());
            out.push(prefix.clone());
            return;
        }
        let k = shape[row];
        // Choose k elements of `remaining` for this row.
        let m = remaining.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let chosen: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
            let rest: Vec<usize> = (0..m)
                .filter(|i| !idx.contains(i))
                .map(|i| remaining[i])
                .collect();
            prefix.push(chosen);
            enumerate_tabloids(shape, row + 1, rest, prefix, out);
            prefix.pop();
            // Next combination.
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] != i + m - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if n == 0 {
        tabloids.push(Vec::new());
    } else {
        enumerate_tabloids(shape, 0, (0..n).collect(), &mut Vec::new(), &mut tabloids);
    }
    let tabloid_index: HashMap<Tabloid, usize> =
        tabloids.iter().cloned().zip(0..).collect();
    // Standard polytabloid basis.
    let sts = standard_tableaux(shape);
    let basis: Vec<Vec<Scalar>> = sts
        .iter()
        .map(|t| polytabloid(t, &tabloids, &tabloid_index))
        .collect();
    let d = basis.len();
    let basis_cols = Matrix::from_fn(tabloids.len(), d, |i, j| basis[j][i].clone());
    // Matrix of each permutation: permute tabloid coordinates of each basis
    // vector and re-express in the basis.
    let mats: Vec<Matrix> = perms
        .iter()
        .map(|perm| {
            let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
            for b in &basis {
                let mut moved = vec![Scalar::zero(); tabloids.len()];
                for (i, t) in tabloids.iter().enumerate() {
                    if b[i].is_zero() {
                        continue;
                    }
                    let j = tabloid_index[&apply_perm_tabloid(perm, t)];
                    moved[j] = &moved[j] + &b[i];
                }
                cols.push(basis_cols.solve(&moved).expect("Specht basis is closed"));
            }
            Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
        })
        .collect();
    // Invariant form: the standard tabloid inner product restricted to the
    // polytabloid basis (permutation matrices are orthogonal for it).
    let form = Matrix::from_fn(d, d, |i, j| {
        let mut acc = Scalar::zero();
        for k in 0..tabloids.len() {
            acc = &acc + &(&basis[i][k] * &basis[j][k]);
        }
        acc
    });
    (mats, form)
}

fn rep_from_perms(
    elements: Vec<RMorphism>,
    perms: Vec<Vec<usize>>,
    shape: &[usize],
) -> GroupRep {
    let (mats, form) = specht_matrices(shape, &perms);
    let index = elements.iter().cloned().zip(0..).collect();
    GroupRep {
        elements,
        mats,
        form,
        index,
    }
}

/// All rational irreducibles of `Aut(X)` for the supported groups, in a
/// deterministic label order.
pub fn aut_irreps(
    x: RObject,
    limits: &Limits,
) -> Result<Vec<(IrrepId, GroupRep)>, WeightError> {
    let auts = automorphisms(x, limits)?;
    match x.backend {
        Backend::FinSetOp => {
            if x.n > 4 {
                return Err(WeightError::UnsupportedAutGroup(format!(
                    "S_{} not in the built-in range",
                    x.n
                )));
            }
            let perms: Vec<Vec<usize>> = auts.iter().map(permutation_of).collect();
            Ok(partitions(x.n)
                .into_iter()
                .map(|shape| {
                    let rep = rep_from_perms(auts.clone(), perms.clone(), &shape);
                    (IrrepId::Partition(shape), rep)
                })
                .collect())
        }
        Backend::FinVecFq { q } => match (q, x.n) {
            (_, 0) | (2, 1) => {
                // Trivial group: the one irrep is trivial.
                let perms: Vec<Vec<usize>> = auts.iter().map(|_| Vec::new()).collect();
                Ok(vec![(
                    IrrepId::Table(0),
                    rep_from_perms(auts, perms, &[]),
                )])
            }
            (2, 2) => {
                // GL₂(F₂) ≅ S₃ by its action on the three nonzero vectors.
                let perms: Vec<Vec<usize>> = auts.iter().map(gl2f2_permutation).collect();
                Ok(partitions(3)
                    .into_iter()
                    .map(|shape| {
                        let rep = rep_from_perms(auts.clone(), perms.clone(), &shape);
                        (IrrepId::Partition(shape), rep)
                    })
                    .collect())
            }
            _ => Err(WeightError::UnsupportedAutGroup(format!(
                "GL_{}(F_{}) not in the built-in table",
                x.n, q
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_homomorphism(rep: &GroupRep, x: RObject) {
        for a in &rep.elements {
            for b in &rep.elements {
                let ab = RMorphism::compose(a, b);
                let lhs = rep.mat_of(&ab);
                let rhs = rep.mat_of(a).matmul(rep.mat_of(b));
                assert_eq!(lhs, &rhs, "not a homomorphism on {x:?}");
                // Invariance of the form: ρ(a)ᵀ F ρ(a) = F.
                let conj = rep
                    .mat_of(a)
                    .transpose()
                    .matmul(&rep.form.matmul(rep.mat_of(a)));
                assert_eq!(conj, rep.form);
            }
        }
    }

    #[test]
    fn symmetric_group_irreps_have_the_right_dimensions() {
        let lim = Limits::default();
        let expected: Vec<Vec<usize>> = vec![
            vec![1],
            vec![1],
            vec![1, 1],
            vec![1, 2, 1],
            vec![1, 3, 2, 3, 1],
        ];
        for n in 0..=4usize {
            let x = Backend::FinSetOp.object(n);
            let reps = aut_irreps(x, &lim).unwrap();
            let dims: Vec<usize> = reps.iter().map(|(_, r)| r.dim()).collect();
            assert_eq!(dims, expected[n], "S_{n} irrep dimensions");
            let order: usize = reps.iter().map(|(_, r)| r.dim() * r.dim()).sum();
            assert_eq!(order, (1..=n.max(1)).product::<usize>());
            for (_, rep) in &reps {
                check_homomorphism(rep, x);
            }
        }
    }

    #[test]
    fn gl2f2_matches_s3() {
        let lim = Limits::default();
        let x = Backend::FinVecFq { q: 2 }.object(2);
        let reps = aut_irreps(x, &lim).unwrap();
        let dims: Vec<usize> = reps.iter().map(|(_, r)| r.dim()).collect();
        assert_eq!(dims, vec![1, 2, 1]);
        assert_eq!(reps[0].1.order(), 6);
        for (_, rep) in &reps {
            check_homomorphism(rep, x);
        }
    }

    #[test]
    fn unsupported_groups_error_out() {
        let lim = Limits::default();
        assert!(matches!(
            aut_irreps(Backend::FinVecFq { q: 3 }.object(1), &lim),
            Err(WeightError::UnsupportedAutGroup(_))
        ));
        assert!(matches!(
            aut_irreps(Backend::FinSetOp.object(5), &lim),
            Err(WeightError::UnsupportedAutGroup(_))
        ));
    }
}
