//! Idempotent splitting in the Karoubi envelope and block structure.

use diagram_category::{
    blocks, end_algebra, hom_dimension, is_isomorphic, split_idempotents, KarObject,
};
use regular_backend::{Backend, Limits};
use scalar_field::Scalar;

fn limits() -> Limits {
    Limits::default()
}

fn plain(n: usize) -> KarObject {
    KarObject::plain(Backend::FinSetOp.object(n))
}

#[test]
fn the_unit_object_is_already_indecomposable() {
    let u = Scalar::t();
    let pieces = split_idempotents(&plain(0), &u, &limits()).unwrap();
    assert_eq!(pieces.len(), 1);
    assert_eq!(pieces[0].1, 1);
    let (alg, _, _) = end_algebra(&pieces[0].0, &u, &limits()).unwrap();
    assert_eq!(alg.dim, 1);
}

#[test]
fn one_point_splits_into_two_nonisomorphic_summands_generically() {
    let u = Scalar::t();
    let lim = limits();
    let pieces = split_idempotents(&plain(1), &u, &lim).unwrap();
    assert_eq!(pieces.len(), 2, "expected two isomorphism classes");
    assert!(pieces.iter().all(|(_, m)| *m == 1));
    assert!(!is_isomorphic(&pieces[0].0, &pieces[1].0, &u, &lim).unwrap());
    // Each summand has scalar endomorphisms.
    for (p, _) in &pieces {
        assert_eq!(hom_dimension(p, p, &u, &lim).unwrap(), 1);
    }
    // Exactly one summand is isomorphic to the unit object.
    let unit_like: usize = pieces
        .iter()
        .map(|(p, _)| is_isomorphic(p, &plain(0), &u, &lim).unwrap() as usize)
        .sum();
    assert_eq!(unit_like, 1);
}

#[test]
fn splitting_is_additive_on_direct_sums() {
    let u = Scalar::t();
    let lim = limits();
    let x = Backend::FinSetOp.object(1);
    let double = KarObject::direct_sum(vec![x, x]);
    let mut pieces = split_idempotents(&double, &u, &lim).unwrap();
    pieces.sort_by_key(|(_, m)| *m);
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|(_, m)| *m == 2));
}

#[test]
fn two_points_split_with_the_expected_multiplicities() {
    // Generically [2] has four isomorphism classes of summands, with
    // multiplicities {2, 3, 1, 1}; the squares sum to dim End = 15.
    let u = Scalar::t();
    let lim = limits();
    let pieces = split_idempotents(&plain(2), &u, &lim).unwrap();
    assert_eq!(pieces.len(), 4, "expected four isomorphism classes");
    let mut mults: Vec<usize> = pieces.iter().map(|(_, m)| *m).collect();
    mults.sort();
    assert_eq!(mults, vec![1, 1, 2, 3]);
    let square_sum: usize = mults.iter().map(|m| m * m).sum();
    assert_eq!(square_sum, 15);
}

#[test]
fn generic_blocks_are_all_trivial() {
    let u = Scalar::t();
    let lim = limits();
    let mut indecomposables: Vec<KarObject> = Vec::new();
    for n in 0..=1usize {
        for (p, _) in split_idempotents(&plain(n), &u, &lim).unwrap() {
            if !indecomposables
                .iter()
                .map(|q| is_isomorphic(&p, q, &u, &lim).unwrap())
                .any(|b| b)
            {
                indecomposables.push(p);
            }
        }
    }
    assert_eq!(indecomposables.len(), 2);
    let report = blocks(&indecomposables, &u, &lim).unwrap();
    assert_eq!(report.blocks.len(), 2);
    assert!(report.almost_trivial.iter().all(|&b| b));
    assert!(report.trivial.iter().all(|&b| b));
}

#[test]
fn one_point_is_indecomposable_but_not_trivial_at_t_zero() {
    // At the degenerate value t = 0 the object [1] has a nilpotent
    // endomorphism: its block is almost trivial but not trivial.
    let u = Scalar::zero();
    let lim = limits();
    let pieces = split_idempotents(&plain(1), &u, &lim).unwrap();
    assert_eq!(pieces.len(), 1);
    assert_eq!(pieces[0].1, 1);
    let (alg, _, _) = end_algebra(&pieces[0].0, &u, &lim).unwrap();
    assert_eq!(alg.dim, 2);
    assert_eq!(alg.radical_basis().nrows(), 1);
    let report = blocks(&[pieces[0].0.clone()], &u, &lim).unwrap();
    assert_eq!(report.blocks.len(), 1);
    assert!(report.almost_trivial[0]);
    assert!(!report.trivial[0]);
}
