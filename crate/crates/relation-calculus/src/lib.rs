//! The n-ary relation operad over a concrete regular backend: joint
//! injectivity, j-composition, reduced relations, and the factorization
//! theorems (existence, uniqueness up to isomorphism, and the fully reduced
//! 3-ary factorization).
//!
//! All indices are 0-based; a "1-reduced" relation in the classical sense is
//! `is_j_reduced(0)` here.

mod compose;
mod sample;
mod span;

pub use compose::{
    enumerate_fully_reduced_3ary, j_compose_span, mor_product, reduction_iso, star2, tri_factor,
};
pub use sample::{
    random_injective, random_morphism, random_relation, random_subobject, random_surjective,
};
pub use span::{MinusSpan, NRelation, NSpan};

use regular_backend::BackendError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelError {
    #[error("leg index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("target of the replaced leg does not match the span")]
    TargetMismatch,
    #[error("span is not jointly injective")]
    NotJointlyInjective,
    #[error("no isomorphism relates the two factorizations")]
    NoIsoFound,
    #[error("the two factorizations compose to different relations")]
    NotEqualComposites,
    #[error("relation is not 1-reduced")]
    NotOneReduced,
    #[error(transparent)]
    Backend(#[from] BackendError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use regular_backend::{Backend, RMorphism};

    fn fso(n: usize) -> regular_backend::RObject {
        Backend::FinSetOp.object(n)
    }

    fn diagonal(n: usize) -> NRelation {
        let x = fso(n);
        let id = RMorphism::identity(x);
        NRelation::from_span(&NSpan::new(x, vec![id.clone(), id])).unwrap()
    }

    #[test]
    fn identity_one_span_is_jointly_injective() {
        let x = fso(3);
        let span = NSpan::new(x, vec![RMorphism::identity(x)]);
        assert!(span.is_jointly_injective());
    }

    #[test]
    fn diagonal_is_a_relation() {
        let d = diagonal(2);
        assert_eq!(d.arity(), 2);
        // The diagonal is both 1- and 2-reduced.
        assert!(d.is_j_reduced(0).unwrap());
        assert!(d.is_j_reduced(1).unwrap());
    }

    #[test]
    fn equal_legs_with_non_mono_source_fail_joint_injectivity() {
        // Two equal non-injective legs [2] → [1]: the induced morphism is
        // not injective.
        let f = RMorphism::set_map(fso(2), fso(1), vec![0]);
        let span = NSpan::new(fso(2), vec![f.clone(), f]);
        assert!(!span.is_jointly_injective());
        assert_eq!(
            NRelation::from_span(&span),
            Err(RelError::NotJointlyInjective)
        );
    }

    #[test]
    fn compose_with_identity_span_is_identity() {
        let d = diagonal(2);
        let id = RMorphism::identity(fso(2));
        assert_eq!(d.j_compose(1, &id, &id).unwrap(), d);
    }

    #[test]
    fn reduce_roundtrips_on_an_unreduced_relation() {
        // A relation [2] ← [1] → [1] whose first leg is not surjective.
        let src = fso(1);
        let f1 = RMorphism::set_map(src, fso(2), vec![0, 0]);
        let f2 = RMorphism::set_map(src, fso(1), vec![0]);
        let rel = NRelation::from_span(&NSpan::new(src, vec![f1, f2])).unwrap();
        assert!(!rel.is_j_reduced(0).unwrap());
        let (g, s) = rel.reduce(0).unwrap();
        assert!(g.is_j_reduced(0).unwrap());
        assert_eq!(g.j_compose(0, &s.s1, &s.s2).unwrap(), rel);
    }

    #[test]
    fn reduce_of_reduced_is_trivial() {
        let d = diagonal(2);
        let (g, s) = d.reduce(0).unwrap();
        assert_eq!(g, d);
        assert!(s.s1.is_iso() && s.s2.is_iso());
    }

    #[test]
    fn reduction_iso_on_identical_factorizations() {
        let l = regular_backend::Limits::default();
        let src = fso(2);
        let f1 = RMorphism::set_map(src, fso(3), vec![0, 1, 0]);
        let f2 = RMorphism::set_map(src, fso(2), vec![0, 1]);
        let rel = NRelation::from_span(&NSpan::new(src, vec![f1, f2])).unwrap();
        let (g, s) = rel.reduce(1).unwrap();
        let alpha = reduction_iso(&g, &s, &g, &s, 1, &l).unwrap();
        // With identical factorizations some automorphism in the stabilizer
        // is returned; it must relate the factorization to itself.
        assert_eq!(g.j_compose(1, &RMorphism::identity(alpha.source), &alpha).unwrap(), g);
    }

    #[test]
    fn tri_factor_requires_one_reduced() {
        let src = fso(1);
        let not_surj = RMorphism::set_map(src, fso(2), vec![0, 0]);
        let id = RMorphism::identity(src);
        let rel =
            NRelation::from_span(&NSpan::new(src, vec![not_surj, id.clone(), id])).unwrap();
        assert_eq!(tri_factor(&rel), Err(RelError::NotOneReduced));
    }
}
