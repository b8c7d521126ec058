//! Seeded random generation of relations for property fuzzing.

use crate::span::NRelation;
use rand::Rng;
use regular_backend::{product_many, Backend, FqMat, RMorphism, RObject, SubData, SubobjectCanon};

/// A uniformly random subobject of the ambient: a random restricted growth
/// string (FinSetOp) or the row space of a random matrix (FinVecFq).
pub fn random_subobject<R: Rng>(rng: &mut R, ambient: RObject) -> SubobjectCanon {
    match ambient.backend {
        Backend::FinSetOp => {
            let n = ambient.n;
            let mut rgs = vec![0usize; n];
            let mut max = 0;
            for i in 1..n {
                rgs[i] = rng.gen_range(0..=max + 1);
                max = max.max(rgs[i]);
            }
            let blocks_count = if n == 0 { 0 } else { max + 1 };
            let mut blocks = vec![Vec::new(); blocks_count];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i);
            }
            SubobjectCanon {
                ambient,
                data: SubData::Partition(blocks),
            }
        }
        Backend::FinVecFq { q } => {
            let k = rng.gen_range(0..=ambient.n);
            let raw = FqMat::from_fn(q, k, ambient.n, |_, _| rng.gen_range(0..q));
            SubobjectCanon {
                ambient,
                data: SubData::Subspace(raw.row_space_basis()),
            }
        }
    }
}

/// A uniformly random morphism `x → y`.  In FinSetOp there are none when
/// `x` is terminal and `y` is not; the caller must avoid that case.
pub fn random_morphism<R: Rng>(rng: &mut R, x: RObject, y: RObject) -> RMorphism {
    match x.backend {
        Backend::FinSetOp => {
            assert!(x.n > 0 || y.n == 0, "no morphisms terminal → nonempty in FinSetOp");
            let data = (0..y.n).map(|_| rng.gen_range(0..x.n.max(1))).collect();
            RMorphism::set_map(x, y, data)
        }
        Backend::FinVecFq { q } => {
            let m = FqMat::from_fn(q, y.n, x.n, |_, _| rng.gen_range(0..q));
            RMorphism::linear(x, y, m)
        }
    }
}

/// A random injective morphism `x → y`; found by rejection sampling, which
/// terminates quickly at these sizes.  The caller must pick sizes for which
/// an injective morphism exists.
pub fn random_injective<R: Rng>(rng: &mut R, x: RObject, y: RObject) -> RMorphism {
    assert!(x.n <= y.n, "no injective morphism into a smaller object");
    if x.backend == Backend::FinSetOp && x.n == 0 {
        assert_eq!(y.n, 0, "in FinSetOp only the terminal embeds in the terminal");
    }
    loop {
        let f = random_morphism(rng, x, y);
        if f.is_injective() {
            return f;
        }
    }
}

/// A random surjective morphism `x → y` (requires `x.n ≥ y.n`).
pub fn random_surjective<R: Rng>(rng: &mut R, x: RObject, y: RObject) -> RMorphism {
    assert!(x.n >= y.n, "no surjective morphism onto a larger object");
    loop {
        let f = random_morphism(rng, x, y);
        if f.is_surjective() {
            return f;
        }
    }
}

/// A random n-ary relation with target sizes drawn from `0..=max_size`.
pub fn random_relation<R: Rng>(
    rng: &mut R,
    backend: Backend,
    arity: usize,
    max_size: usize,
) -> NRelation {
    let targets: Vec<RObject> = (0..arity)
        .map(|_| backend.object(rng.gen_range(0..=max_size)))
        .collect();
    let (p, _) = product_many(backend, &targets).expect("single backend");
    let sub = random_subobject(rng, p);
    NRelation::from_subobject(targets, sub)
}
