//! Morphisms of the two backends and the basic categorical operations:
//! composition, injectivity/surjectivity, products, tuples, and image
//! factorization.
//!
//! FinSetOp morphisms store the set-world map in the *reversed* direction
//! (a total map from the target's element set to the source's), so that
//! monomorphisms here are surjective set maps and extremal epimorphisms are
//! injective set maps.

use crate::fq::FqMat;
use crate::object::{Backend, BackendError, Limits, RObject};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MorData {
    /// FinSetOp: `data[y] = x` is the set-world map target → source.
    SetMap(Vec<usize>),
    /// FinVecFq: matrix of shape (target dim × source dim) acting on columns.
    Matrix(FqMat),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RMorphism {
    pub source: RObject,
    pub target: RObject,
    pub data: MorData,
}

impl RMorphism {
    pub fn set_map(source: RObject, target: RObject, data: Vec<usize>) -> RMorphism {
        assert_eq!(source.backend, Backend::FinSetOp);
        assert_eq!(target.backend, Backend::FinSetOp);
        assert_eq!(data.len(), target.n, "set-world map must be total on the target");
        assert!(data.iter().all(|&x| x < source.n), "set-world value out of range");
        RMorphism {
            source,
            target,
            data: MorData::SetMap(data),
        }
    }

    pub fn linear(source: RObject, target: RObject, mat: FqMat) -> RMorphism {
        let q = match source.backend {
            Backend::FinVecFq { q } => q,
            _ => panic!("linear morphism in a non-linear backend"),
        };
        assert_eq!(source.backend, target.backend);
        assert_eq!((mat.rows, mat.cols, mat.q), (target.n, source.n, q));
        RMorphism {
            source,
            target,
            data: MorData::Matrix(mat),
        }
    }

    pub fn identity(x: RObject) -> RMorphism {
        match x.backend {
            Backend::FinSetOp => RMorphism::set_map(x, x, (0..x.n).collect()),
            Backend::FinVecFq { q } => RMorphism::linear(x, x, FqMat::identity(q, x.n)),
        }
    }

    /// `g ∘ f` where `f: X→Y`, `g: Y→Z`.
    pub fn compose(g: &RMorphism, f: &RMorphism) -> RMorphism {
        assert_eq!(f.target, g.source, "non-composable morphisms");
        match (&f.data, &g.data) {
            (MorData::SetMap(fm), MorData::SetMap(gm)) => {
                RMorphism::set_map(f.source, g.target, gm.iter().map(|&z| fm[z]).collect())
            }
            (MorData::Matrix(fa), MorData::Matrix(ga)) => {
                RMorphism::linear(f.source, g.target, ga.matmul(fa))
            }
            _ => unreachable!("backend mismatch is excluded by object equality"),
        }
    }

    /// Monomorphism test: surjective set-world map resp. full column rank.
    pub fn is_injective(&self) -> bool {
        match &self.data {
            MorData::SetMap(m) => {
                let mut hit = vec![false; self.source.n];
                for &x in m {
                    hit[x] = true;
                }
                hit.iter().all(|&b| b)
            }
            MorData::Matrix(a) => a.rank() == self.source.n,
        }
    }

    /// Extremal-epimorphism test: injective set-world map resp. full row rank.
    pub fn is_surjective(&self) -> bool {
        match &self.data {
            MorData::SetMap(m) => {
                let mut seen = vec![false; self.source.n];
                for &x in m {
                    if seen[x] {
                        return false;
                    }
                    seen[x] = true;
                }
                true
            }
            MorData::Matrix(a) => a.rank() == self.target.n,
        }
    }

    pub fn is_iso(&self) -> bool {
        self.source.n == self.target.n && self.is_injective()
    }

    pub fn inverse(&self) -> Option<RMorphism> {
        if !(self.is_iso() && self.is_surjective()) {
            return None;
        }
        match &self.data {
            MorData::SetMap(m) => {
                let mut inv = vec![0; self.source.n];
                for (y, &x) in m.iter().enumerate() {
                    inv[x] = y;
                }
                Some(RMorphism::set_map(self.target, self.source, inv))
            }
            MorData::Matrix(a) => {
                Some(RMorphism::linear(self.target, self.source, a.inverse()?))
            }
        }
    }

    /// Canonical image factorization `f = im ∘ coim` with `coim` surjective
    /// and `im` injective; `im` is the canonical monomorphism of the image
    /// subobject (blocks-by-minimum partition resp. RREF column space).
    pub fn image_factorization(&self) -> (RMorphism, RMorphism) {
        match &self.data {
            MorData::SetMap(m) => {
                // Fibers of the set-world map target → source, as blocks
                // sorted by their minimum element of the target's set.
                let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
                for (y, &x) in m.iter().enumerate() {
                    match blocks.iter_mut().find(|(v, _)| *v == x) {
                        Some((_, b)) => b.push(y),
                        None => blocks.push((x, vec![y])),
                    }
                }
                blocks.sort_by_key(|(_, b)| b[0]);
                let i_obj = Backend::FinSetOp.object(blocks.len());
                let mut im_data = vec![0; self.target.n];
                for (k, (_, b)) in blocks.iter().enumerate() {
                    for &y in b {
                        im_data[y] = k;
                    }
                }
                let coim_data: Vec<usize> = blocks.iter().map(|(v, _)| *v).collect();
                let coim = RMorphism::set_map(self.source, i_obj, coim_data);
                let im = RMorphism::set_map(i_obj, self.target, im_data);
                (coim, im)
            }
            MorData::Matrix(a) => {
                // Canonical basis of the column space: RREF of the transpose.
                let basis = a.transpose().row_space_basis();
                let r = basis.rows;
                let i_obj = self.source.backend.object(r);
                let im_mat = basis.transpose();
                let coim_mat = im_mat.solve(a).expect("column space contains the columns");
                let coim = RMorphism::linear(self.source, i_obj, coim_mat);
                let im = RMorphism::linear(i_obj, self.target, im_mat);
                (coim, im)
            }
        }
    }
}

/// Categorical product with projections: disjoint union of element sets in
/// FinSetOp (a product in the opposite category), direct sum in FinVecFq.
pub fn product(x: RObject, y: RObject) -> Result<(RObject, RMorphism, RMorphism), BackendError> {
    if x.backend != y.backend {
        return Err(BackendError::BackendMismatch);
    }
    let p = x.backend.object(x.n + y.n);
    match x.backend {
        Backend::FinSetOp => {
            let p1 = RMorphism::set_map(p, x, (0..x.n).collect());
            let p2 = RMorphism::set_map(p, y, (x.n..x.n + y.n).collect());
            Ok((p, p1, p2))
        }
        Backend::FinVecFq { q } => {
            let m1 = FqMat::from_fn(q, x.n, p.n, |i, j| u32::from(j == i));
            let m2 = FqMat::from_fn(q, y.n, p.n, |i, j| u32::from(j == x.n + i));
            Ok((p, RMorphism::linear(p, x, m1), RMorphism::linear(p, y, m2)))
        }
    }
}

/// n-fold product with all projections (the empty product is the terminal
/// object).
pub fn product_many(
    backend: Backend,
    objs: &[RObject],
) -> Result<(RObject, Vec<RMorphism>), BackendError> {
    if objs.iter().any(|o| o.backend != backend) {
        return Err(BackendError::BackendMismatch);
    }
    let total: usize = objs.iter().map(|o| o.n).sum();
    let p = backend.object(total);
    let mut projections = Vec::with_capacity(objs.len());
    let mut offset = 0;
    for &o in objs {
        match backend {
            Backend::FinSetOp => {
                projections.push(RMorphism::set_map(p, o, (offset..offset + o.n).collect()));
            }
            Backend::FinVecFq { q } => {
                let m = FqMat::from_fn(q, o.n, p.n, |i, j| u32::from(j == offset + i));
                projections.push(RMorphism::linear(p, o, m));
            }
        }
        offset += o.n;
    }
    Ok((p, projections))
}

/// The induced morphism `⟨f_1,…,f_n⟩ : S → T(f_1)×⋯×T(f_n)` of a span.
pub fn tuple_many(legs: &[RMorphism]) -> RMorphism {
    assert!(!legs.is_empty(), "tuple of zero legs needs an explicit source");
    let source = legs[0].source;
    assert!(legs.iter().all(|f| f.source == source), "legs must share the source");
    let targets: Vec<RObject> = legs.iter().map(|f| f.target).collect();
    let (p, _) = product_many(source.backend, &targets).expect("same backend by construction");
    match source.backend {
        Backend::FinSetOp => {
            let mut data = Vec::with_capacity(p.n);
            for f in legs {
                match &f.data {
                    MorData::SetMap(m) => data.extend_from_slice(m),
                    _ => unreachable!(),
                }
            }
            RMorphism::set_map(source, p, data)
        }
        Backend::FinVecFq { q } => {
            let mut mat = FqMat::zero(q, 0, source.n);
            for f in legs {
                match &f.data {
                    MorData::Matrix(a) => mat = mat.vstack(a),
                    _ => unreachable!(),
                }
            }
            RMorphism::linear(source, p, mat)
        }
    }
}

/// The unique morphism `X → terminal()`.
pub fn to_terminal(x: RObject) -> RMorphism {
    match x.backend {
        Backend::FinSetOp => RMorphism::set_map(x, x.backend.terminal(), vec![]),
        Backend::FinVecFq { q } => {
            RMorphism::linear(x, x.backend.terminal(), FqMat::zero(q, 0, x.n))
        }
    }
}

/// All morphisms `X → Y`, in a deterministic order.  Used for exhaustive
/// universal-property oracles and isomorphism searches.
pub fn enumerate_morphisms(
    x: RObject,
    y: RObject,
    limits: &Limits,
) -> Result<Vec<RMorphism>, BackendError> {
    if x.backend != y.backend {
        return Err(BackendError::BackendMismatch);
    }
    let (base, exp) = match x.backend {
        Backend::FinSetOp => (x.n, y.n),
        Backend::FinVecFq { q } => (q as usize, x.n * y.n),
    };
    let count = (base as u64).checked_pow(exp as u32).unwrap_or(u64::MAX);
    if count > 2_000_000 {
        return Err(BackendError::SizeLimitExceeded {
            requested: count as usize,
            cap: 2_000_000,
        });
    }
    limits.check_ambient(x.backend.object(x.n.max(y.n)))?;
    let mut out = Vec::new();
    match x.backend {
        Backend::FinSetOp => {
            if y.n == 0 {
                return Ok(vec![RMorphism::set_map(x, y, vec![])]);
            }
            if x.n == 0 {
                return Ok(vec![]); // no set maps from a nonempty set to ∅
            }
            let mut digits = vec![0usize; y.n];
            loop {
                out.push(RMorphism::set_map(x, y, digits.clone()));
                let mut i = 0;
                loop {
                    if i == y.n {
                        return Ok(out);
                    }
                    digits[i] += 1;
                    if digits[i] < x.n {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
            }
        }
        Backend::FinVecFq { q } => {
            let cells = x.n * y.n;
            let mut digits = vec![0u32; cells];
            loop {
                let mat = FqMat::from_fn(q, y.n, x.n, |i, j| digits[i * x.n + j]);
                out.push(RMorphism::linear(x, y, mat));
                let mut i = 0;
                loop {
                    if i == cells {
                        return Ok(out);
                    }
                    digits[i] += 1;
                    if digits[i] < q {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if cells == 0 {
                    return Ok(out);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fso(n: usize) -> RObject {
        Backend::FinSetOp.object(n)
    }

    #[test]
    fn epi_mono_duality_under_op() {
        // Set-world surjection {0,1} → {0} gives an injective R-morphism
        // [1] → [2], and it is not surjective in R.
        let f = RMorphism::set_map(fso(1), fso(2), vec![0, 0]);
        assert!(f.is_injective());
        assert!(!f.is_surjective());
        // Set-world injection {0} → {0,1} gives a surjective R-morphism
        // [2] → [1] that is not injective in R.
        let g = RMorphism::set_map(fso(2), fso(1), vec![0]);
        assert!(!g.is_injective());
        assert!(g.is_surjective());
    }

    #[test]
    fn identity_is_iso() {
        for x in [fso(0), fso(3), Backend::FinVecFq { q: 2 }.object(2)] {
            let id = RMorphism::identity(x);
            assert!(id.is_injective() && id.is_surjective() && id.is_iso());
            assert_eq!(id.inverse().unwrap(), id);
        }
    }

    #[test]
    fn zero_map_neither_injective_nor_surjective() {
        let v = Backend::FinVecFq { q: 2 }.object(1);
        let z = RMorphism::linear(v, v, FqMat::zero(2, 1, 1));
        assert!(!z.is_injective());
        assert!(!z.is_surjective());
    }

    #[test]
    fn product_sizes() {
        let (p, p1, p2) = product(fso(2), fso(3)).unwrap();
        assert_eq!(p.n, 5);
        assert_eq!((p1.source, p1.target), (p, fso(2)));
        assert_eq!((p2.source, p2.target), (p, fso(3)));
        let v1 = Backend::FinVecFq { q: 2 }.object(1);
        let v2 = Backend::FinVecFq { q: 2 }.object(2);
        assert_eq!(product(v1, v2).unwrap().0.n, 3);
        assert_eq!(product(fso(2), fso(0)).unwrap().0.n, 2);
    }

    #[test]
    fn tuple_commutes_with_projections() {
        let s = fso(2);
        let f = RMorphism::set_map(s, fso(2), vec![1, 0]);
        let g = RMorphism::set_map(s, fso(1), vec![0]);
        let t = tuple_many(&[f.clone(), g.clone()]);
        let (_, projections) = product_many(Backend::FinSetOp, &[fso(2), fso(1)]).unwrap();
        assert_eq!(RMorphism::compose(&projections[0], &t), f);
        assert_eq!(RMorphism::compose(&projections[1], &t), g);
    }

    #[test]
    fn image_factorization_roundtrip_setop() {
        let f = RMorphism::set_map(fso(3), fso(4), vec![2, 0, 2, 0]);
        let (coim, im) = f.image_factorization();
        assert!(coim.is_surjective());
        assert!(im.is_injective());
        assert_eq!(RMorphism::compose(&im, &coim), f);
        // f injective ⇒ factorization is (surjection, canonical mono) with
        // iso-free middle of the same size as the source.
        let inj = RMorphism::set_map(fso(2), fso(3), vec![0, 1, 0]);
        let (c, i) = inj.image_factorization();
        assert!(c.is_iso());
        assert_eq!(RMorphism::compose(&i, &c), inj);
    }

    #[test]
    fn image_factorization_rank_one() {
        let v2 = Backend::FinVecFq { q: 2 }.object(2);
        let a = FqMat::from_fn(2, 2, 2, |_, _| 1); // all-ones, rank 1
        let f = RMorphism::linear(v2, v2, a);
        let (coim, im) = f.image_factorization();
        assert_eq!(coim.target.n, 1);
        assert!(coim.is_surjective() && im.is_injective());
        assert_eq!(RMorphism::compose(&im, &coim), f);
    }

    #[test]
    fn enumeration_counts() {
        let l = Limits::default();
        assert_eq!(enumerate_morphisms(fso(2), fso(3), &l).unwrap().len(), 8);
        let v1 = Backend::FinVecFq { q: 3 }.object(1);
        assert_eq!(enumerate_morphisms(v1, v1, &l).unwrap().len(), 3);
        // Hom(terminal, [1]) is empty in FinSetOp, Hom([1], terminal) is a point.
        assert_eq!(enumerate_morphisms(fso(0), fso(1), &l).unwrap().len(), 0);
        assert_eq!(enumerate_morphisms(fso(1), fso(0), &l).unwrap().len(), 1);
    }
}
