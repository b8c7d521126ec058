//! The linearized relation category and its Karoubi envelope: morphisms are
//! scalar-linear combinations of relations, composed by pullback with degree
//! evaluation.  Provides the symmetric monoidal structure with self-dual
//! objects, the triangular (U/D) classification with core decomposition and
//! the subquotient order, idempotent splitting into indecomposable summands,
//! and block decomposition.

mod algebra;
mod karoubi;
mod morphism;
mod triangular;

pub use algebra::{FdAlgebra, QuotientMap};
pub use karoubi::{
    blocks, end_algebra, hom_dimension, is_isomorphic, split_idempotents, BlockReport,
    KarMorphism, KarObject,
};
pub use morphism::{
    braiding, cap, compose_relations, cup, diagonal, hom_basis, rel_source, rel_target,
    tensor_objects, tensor_relations, transpose, transpose_relation, unit_object, DiagMorphism,
    Relation,
};
pub use triangular::{
    aut_graphs, classify, core_decompose, core_uniqueness_iso, d_relations, graph, leq,
    leq_by_span_search, triangular_verify, u_relations, AxiomResult, TriangularClass,
    TriangularReport,
};

use regular_backend::BackendError;
use scalar_field::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagError {
    #[error("object mismatch in composition")]
    ObjectMismatch,
    #[error("backend mismatch")]
    BackendMismatch,
    #[error("endomorphisms generate a division algebra of dimension > 1 over the ground field")]
    NonSplitField,
    #[error(transparent)]
    Backend(#[from] BackendError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use regular_backend::Backend;
    use scalar_field::Scalar;

    fn fso(n: usize) -> regular_backend::RObject {
        Backend::FinSetOp.object(n)
    }

    #[test]
    fn identity_is_a_unit() {
        let u = Scalar::t();
        let limits = regular_backend::Limits::default();
        for r in hom_basis(fso(1), fso(2), &limits).unwrap() {
            let m = DiagMorphism::from_relation(r);
            let left = DiagMorphism::identity(fso(2)).compose(&m, &u).unwrap();
            let right = m.compose(&DiagMorphism::identity(fso(1)), &u).unwrap();
            assert_eq!(left, m);
            assert_eq!(right, m);
        }
    }

    #[test]
    fn singleton_idempotent_composes_to_u_times_itself() {
        // e = {{0},{0'}} ∈ Rel_{[1],[1]}: e∘e = u·e.
        let u = Scalar::t();
        let x = fso(1);
        let sub = regular_backend::SubobjectCanon {
            ambient: fso(2),
            data: regular_backend::SubData::Partition(vec![vec![0], vec![1]]),
        };
        let e = relation_calculus::NRelation::from_subobject(vec![x, x], sub);
        let (c, ee) = compose_relations(&e, &e, &u).unwrap();
        assert_eq!(c, u);
        assert_eq!(ee, e);
    }

    #[test]
    fn cap_after_cup_evaluates_the_loop_to_u() {
        // cap(X)∘cup(X) = u^{|X|}·id_1 in FinSetOp.
        let u = Scalar::t();
        let x = fso(1);
        let m = cap(x).compose(&cup(x), &u).unwrap();
        let expected = DiagMorphism::identity(fso(0)).scale(&u);
        assert_eq!(m, expected);
    }

    #[test]
    fn zigzag_identity() {
        let u = Scalar::t();
        for n in 0..=2 {
            let x = fso(n);
            let idx = DiagMorphism::identity(x);
            let lhs = cap(x)
                .tensor(&idx)
                .unwrap()
                .compose(&idx.tensor(&cup(x)).unwrap(), &u)
                .unwrap();
            assert_eq!(lhs, idx, "zigzag failed for size {n}");
        }
    }

    #[test]
    fn braiding_is_symmetric() {
        let u = Scalar::t();
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            let (x, y) = (fso(a), fso(b));
            let round = braiding(y, x).compose(&braiding(x, y), &u).unwrap();
            assert_eq!(round, DiagMorphism::identity(tensor_objects(x, y)));
        }
    }

    #[test]
    fn classify_diagonal_is_m() {
        assert_eq!(classify(&diagonal(fso(2))), TriangularClass::M);
    }

    #[test]
    fn core_decompose_trivial_cases() {
        let u = Scalar::t();
        let limits = regular_backend::Limits::default();
        for r in hom_basis(fso(2), fso(1), &limits).unwrap() {
            let (g, f) = core_decompose(&r).unwrap();
            assert!(matches!(classify(&g), TriangularClass::D | TriangularClass::M));
            assert!(matches!(classify(&f), TriangularClass::U | TriangularClass::M));
            let (c, h) = compose_relations(&f, &g, &u).unwrap();
            assert!(c.is_one());
            assert_eq!(h, r);
        }
    }

    #[test]
    fn leq_matches_span_search_at_small_sizes() {
        let limits = regular_backend::Limits::default();
        for backend in [Backend::FinSetOp, Backend::FinVecFq { q: 2 }] {
            for a in 0..=3 {
                for b in 0..=3 {
                    let (x, y) = (backend.object(a), backend.object(b));
                    assert_eq!(
                        leq(x, y),
                        leq_by_span_search(x, y, &limits).unwrap(),
                        "leq mismatch for sizes ({a},{b}) in {backend:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn duality_is_an_involution_and_fixes_objects() {
        let limits = regular_backend::Limits::default();
        for r in hom_basis(fso(2), fso(1), &limits).unwrap() {
            let rt = transpose_relation(&r);
            assert_eq!(rel_source(&rt), fso(1));
            assert_eq!(rel_target(&rt), fso(2));
            assert_eq!(transpose_relation(&rt), r);
        }
    }
}
