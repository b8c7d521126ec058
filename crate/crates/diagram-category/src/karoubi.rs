//! The Karoubi envelope: formal direct sums of objects with a splitting
//! idempotent, decomposition into indecomposable summands, and blocks.

use crate::algebra::{is_zero_vec, FdAlgebra};
use crate::morphism::{DiagMorphism, Relation};
use crate::DiagError;
use regular_backend::{Limits, RObject};
use scalar_field::{Matrix, Scalar};

/// A matrix of morphisms between formal direct sums: `entries[i][j]` maps
/// the j-th source summand to the i-th target summand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KarMorphism {
    pub source: Vec<RObject>,
    pub target: Vec<RObject>,
    pub entries: Vec<Vec<DiagMorphism>>,
}

impl KarMorphism {
    pub fn zero(source: Vec<RObject>, target: Vec<RObject>) -> KarMorphism {
        let entries = target
            .iter()
            .map(|&t| source.iter().map(|&s| DiagMorphism::zero(s, t)).collect())
            .collect();
        KarMorphism {
            source,
            target,
            entries,
        }
    }

    pub fn identity(summands: Vec<RObject>) -> KarMorphism {
        let mut m = KarMorphism::zero(summands.clone(), summands);
        for (i, &s) in m.source.clone().iter().enumerate() {
            m.entries[i][i] = DiagMorphism::identity(s);
        }
        m
    }

    pub fn compose(&self, other: &KarMorphism, u: &Scalar) -> Result<KarMorphism, DiagError> {
        if other.target != self.source {
            return Err(DiagError::ObjectMismatch);
        }
        let mut out = KarMorphism::zero(other.source.clone(), self.target.clone());
        for i in 0..self.target.len() {
            for j in 0..other.source.len() {
                let mut acc = DiagMorphism::zero(other.source[j], self.target[i]);
                for k in 0..self.source.len() {
                    acc = acc.add(&self.entries[i][k].compose(&other.entries[k][j], u)?);
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &KarMorphism) -> KarMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mut out = self.clone();
        for i in 0..out.entries.len() {
            for j in 0..out.entries[i].len() {
                out.entries[i][j] = out.entries[i][j].add(&other.entries[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, other: &KarMorphism) -> KarMorphism {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> KarMorphism {
        let mut out = self.clone();
        for row in &mut out.entries {
            for m in row {
                *m = m.scale(c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(DiagMorphism::is_zero)
    }

    pub fn is_idempotent(&self, u: &Scalar) -> Result<bool, DiagError> {
        if self.source != self.target {
            return Ok(false);
        }
        Ok(self.compose(self, u)? == *self)
    }
}

/// An object of the Karoubi envelope: a formal direct sum with an exact
/// idempotent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KarObject {
    pub summands: Vec<RObject>,
    pub idem: KarMorphism,
}

impl KarObject {
    /// The image of an idempotent endomorphism of a formal direct sum.
    pub fn new(idem: KarMorphism, u: &Scalar) -> Result<KarObject, DiagError> {
        if !idem.is_idempotent(u)? {
            return Err(DiagError::ObjectMismatch);
        }
        Ok(KarObject {
            summands: idem.source.clone(),
            idem,
        })
    }

    /// The plain object `[X]` with identity idempotent.
    pub fn plain(x: RObject) -> KarObject {
        KarObject {
            summands: vec![x],
            idem: KarMorphism::identity(vec![x]),
        }
    }

    /// A formal direct sum with identity idempotent.
    pub fn direct_sum(summands: Vec<RObject>) -> KarObject {
        KarObject {
            summands: summands.clone(),
            idem: KarMorphism::identity(summands),
        }
    }
}

/// The global coordinate basis of the raw Hom space between two formal
/// direct sums: triples (target summand, source summand, relation).
fn hom_keys(
    source: &[RObject],
    target: &[RObject],
    limits: &Limits,
) -> Result<Vec<(usize, usize, Relation)>, DiagError> {
    let mut keys = Vec::new();
    for (i, &t) in target.iter().enumerate() {
        for (j, &s) in source.iter().enumerate() {
            for r in crate::morphism::hom_basis(s, t, limits)? {
                keys.push((i, j, r));
            }
        }
    }
    Ok(keys)
}

fn to_coords(m: &KarMorphism, keys: &[(usize, usize, Relation)]) -> Vec<Scalar> {
    keys.iter()
        .map(|(i, j, r)| m.entries[*i][*j].coeff(r))
        .collect()
}

fn from_coords(
    coords: &[Scalar],
    keys: &[(usize, usize, Relation)],
    source: &[RObject],
    target: &[RObject],
) -> KarMorphism {
    let mut m = KarMorphism::zero(source.to_vec(), target.to_vec());
    for (c, (i, j, r)) in coords.iter().zip(keys) {
        m.entries[*i][*j].add_term(r.clone(), c.clone());
    }
    m
}

/// A basis (as coordinate rows) of the compressed Hom space
/// `e_target ∘ Hom ∘ e_source` between two Karoubi objects, with the keys
/// of the ambient coordinate system.
fn compressed_hom(
    source: &KarObject,
    target: &KarObject,
    u: &Scalar,
    limits: &Limits,
) -> Result<(Vec<(usize, usize, Relation)>, Vec<Vec<Scalar>>), DiagError> {
    let keys = hom_keys(&source.summands, &target.summands, limits)?;
    let mut rows = Vec::with_capacity(keys.len());
    for (i, j, r) in &keys {
        let mut m = KarMorphism::zero(source.summands.clone(), target.summands.clone());
        m.entries[*i][*j] = DiagMorphism::from_relation(r.clone());
        let compressed = target.idem.compose(&m.compose(&source.idem, u)?, u)?;
        rows.push(to_coords(&compressed, &keys));
    }
    let mat = Matrix::from_fn(rows.len(), keys.len(), |i, j| rows[i][j].clone());
    let (rref, pivots) = mat.rref();
    let basis = (0..pivots.len())
        .map(|k| (0..keys.len()).map(|j| rref[(k, j)].clone()).collect())
        .collect();
    Ok((keys, basis))
}

/// The dimension of `Hom(source, target)` in the Karoubi envelope.
pub fn hom_dimension(
    source: &KarObject,
    target: &KarObject,
    u: &Scalar,
    limits: &Limits,
) -> Result<usize, DiagError> {
    Ok(compressed_hom(source, target, u, limits)?.1.len())
}

/// The endomorphism algebra of a Karoubi object in the compressed basis,
/// together with the coordinate basis rows and ambient keys.
#[allow(clippy::type_complexity)]
pub fn end_algebra(
    k: &KarObject,
    u: &Scalar,
    limits: &Limits,
) -> Result<
    (
        FdAlgebra,
        Vec<(usize, usize, Relation)>,
        Vec<Vec<Scalar>>,
    ),
    DiagError,
> {
    let (keys, basis) = compressed_hom(k, k, u, limits)?;
    let dim = basis.len();
    let basis_mat = Matrix::from_fn(dim, keys.len(), |i, j| basis[i][j].clone());
    let in_basis = |coords: &[Scalar]| -> Vec<Scalar> {
        basis_mat
            .transpose()
            .solve(coords)
            .expect("products of compressed morphisms stay in the compressed space")
    };
    let reps: Vec<KarMorphism> = basis
        .iter()
        .map(|row| from_coords(row, &keys, &k.summands, &k.summands))
        .collect();
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = reps[i].compose(&reps[j], u)?;
            mult[i][j] = in_basis(&to_coords(&prod, &keys));
        }
    }
    let unit = in_basis(&to_coords(&k.idem, &keys));
    Ok((FdAlgebra { dim, mult, unit }, keys, basis))
}

/// Splits a Karoubi object into indecomposable summands with
/// multiplicities (grouped up to isomorphism).
pub fn split_idempotents(
    k: &KarObject,
    u: &Scalar,
    limits: &Limits,
) -> Result<Vec<(KarObject, usize)>, DiagError> {
    let mut pieces = Vec::new();
    split_rec(k.clone(), u, limits, &mut pieces)?;
    // Group by isomorphism.
    let mut grouped: Vec<(KarObject, usize)> = Vec::new();
    'outer: for p in pieces {
        for (q, count) in grouped.iter_mut() {
            if is_isomorphic(&p, q, u, limits)? {
                *count += 1;
                continue 'outer;
            }
        }
        grouped.push((p, 1));
    }
    Ok(grouped)
}

fn split_rec(
    k: KarObject,
    u: &Scalar,
    limits: &Limits,
    out: &mut Vec<KarObject>,
) -> Result<(), DiagError> {
    if k.idem.is_zero() {
        return Ok(());
    }
    let (alg, keys, basis) = end_algebra(&k, u, limits)?;
    if alg.dim == 0 {
        return Ok(());
    }
    let rad = alg.radical_basis();
    let (quot, map) = alg.quotient(&rad);
    if quot.dim <= 1 {
        out.push(k);
        return Ok(());
    }
    let Some(ebar) = quot.find_idempotent_semisimple()? else {
        out.push(k);
        return Ok(());
    };
    let e = alg.lift_idempotent(&map.lift(&ebar));
    assert!(!is_zero_vec(&e) && e != alg.unit, "lifted idempotent is trivial");
    // Expand the abstract idempotent back to a morphism matrix.
    let mut coords = vec![Scalar::zero(); keys.len()];
    for (c, row) in e.iter().zip(&basis) {
        for (acc, v) in coords.iter_mut().zip(row) {
            *acc = &*acc + &(c * v);
        }
    }
    let e_mor = from_coords(&coords, &keys, &k.summands, &k.summands);
    debug_assert!(e_mor.is_idempotent(u)?);
    let complement = k.idem.sub(&e_mor);
    split_rec(KarObject::new(e_mor, u)?, u, limits, out)?;
    split_rec(KarObject::new(complement, u)?, u, limits, out)
}

/// Isomorphism test for indecomposable Karoubi objects: some composite
/// `b ∘ a` with `a : K₁ → K₂`, `b : K₂ → K₁` avoids the radical of
/// `End(K₁)`.
pub fn is_isomorphic(
    k1: &KarObject,
    k2: &KarObject,
    u: &Scalar,
    limits: &Limits,
) -> Result<bool, DiagError> {
    let (keys12, hom12) = compressed_hom(k1, k2, u, limits)?;
    let (keys21, hom21) = compressed_hom(k2, k1, u, limits)?;
    if hom12.is_empty() || hom21.is_empty() {
        return Ok(false);
    }
    let (alg, keys_end, basis_end) = end_algebra(k1, u, limits)?;
    let rad = alg.radical_basis();
    // Radical rows expressed in the ambient coordinates, to test membership.
    let rad_in_ambient = Matrix::from_fn(rad.nrows(), keys_end.len(), |i, j| {
        let mut acc = Scalar::zero();
        for (k, row) in basis_end.iter().enumerate() {
            acc = &acc + &(&rad[(i, k)] * &row[j]);
        }
        acc
    });
    for a_row in &hom12 {
        let a = from_coords(a_row, &keys12, &k1.summands, &k2.summands);
        for b_row in &hom21 {
            let b = from_coords(b_row, &keys21, &k2.summands, &k1.summands);
            let ba = b.compose(&a, u)?;
            let coords = to_coords(&ba, &keys_end);
            // Is b∘a outside the radical?
            let base_rank = rad_in_ambient.rank();
            let stacked = rad_in_ambient.vstack(&Matrix::from_fn(1, keys_end.len(), |_, j| {
                coords[j].clone()
            }));
            if stacked.rank() > base_rank {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Report of the block decomposition of a family of indecomposables.
#[derive(Clone, Debug)]
pub struct BlockReport {
    /// Indices of the input objects, grouped into blocks.
    pub blocks: Vec<Vec<usize>>,
    /// Per block: contains a unique indecomposable object.
    pub almost_trivial: Vec<bool>,
    /// Per block: almost trivial with one-dimensional endomorphisms.
    pub trivial: Vec<bool>,
}

/// Partitions a family of indecomposable objects into blocks: connected
/// components of the symmetrized nonzero-Hom graph.
pub fn blocks(
    objects: &[KarObject],
    u: &Scalar,
    limits: &Limits,
) -> Result<BlockReport, DiagError> {
    let n = objects.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            let linked = hom_dimension(&objects[i], &objects[j], u, limits)? > 0
                || hom_dimension(&objects[j], &objects[i], u, limits)? > 0;
            if linked {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut report = BlockReport {
        blocks: Vec::new(),
        almost_trivial: Vec::new(),
        trivial: Vec::new(),
    };
    for (_, members) in by_root {
        // Unique indecomposable up to isomorphism?
        let mut almost = true;
        for w in members.windows(2) {
            if !is_isomorphic(&objects[w[0]], &objects[w[1]], u, limits)? {
                almost = false;
            }
        }
        let trivial = almost
            && hom_dimension(&objects[members[0]], &objects[members[0]], u, limits)? == 1;
        report.blocks.push(members);
        report.almost_trivial.push(almost);
        report.trivial.push(trivial);
    }
    Ok(report)
}
