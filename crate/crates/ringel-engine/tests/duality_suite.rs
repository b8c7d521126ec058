//! Dual exceptional collections by mutation, costandard characters, the
//! tilting family, and the full Ringel-dual verification, with frozen
//! values at the interesting specializations.

use regular_backend::{Backend, Limits};
use ringel_engine::*;
use scalar_field::Scalar;
use weight_algebra::{build_algebra, WeightData};

fn ctx_for(b: Backend, t: Option<i64>, n: usize) -> RingelCtx {
    let u = match t {
        None => Scalar::t(),
        Some(v) => Scalar::from_integer(v),
    };
    let alg = build_algebra(b, &u, n, &Limits::default()).unwrap();
    let wd = WeightData::from_truncation(&alg).unwrap();
    RingelCtx::new(wd).unwrap()
}

fn ctx(t: Option<i64>, n: usize) -> RingelCtx {
    ctx_for(Backend::FinSetOp, t, n)
}

fn standards(c: &RingelCtx) -> Vec<ProjComplex> {
    (0..c.n()).map(|l| resolve_standard(c, l).unwrap()).collect()
}

#[test]
fn dual_collections_are_orthogonal() {
    for t in [None, Some(2), Some(3)] {
        let c = ctx(t, 2);
        let ys = standards(&c);
        // dual_collection certifies hom(X_λ, Y_μ[k]) = δ_λμ·δ_k0 itself.
        let xs = dual_collection(&c, &ys).unwrap();
        assert_eq!(xs.len(), ys.len());
    }
}

#[test]
fn t2_dual_object_acquires_the_predicted_correction() {
    let c = ctx(Some(2), 2);
    let ys = standards(&c);
    let xs = dual_collection(&c, &ys).unwrap();
    // Only Y_[2];(2) maps to a higher exceptional, so only its dual
    // object grows: one extra P([1];(1)) summand.
    assert_eq!(xs[0].terms, vec![vec![0]]);
    assert_eq!(xs[1].terms, vec![vec![1]]);
    assert_eq!(xs[2].terms, vec![vec![2], vec![1]]);
    assert_eq!(xs[3].terms, vec![vec![3]]);
}

#[test]
fn costandard_characters_are_delta_on_the_collection() {
    let c = ctx(Some(2), 2);
    let ys = standards(&c);
    let xs = dual_collection(&c, &ys).unwrap();
    for (m, y) in ys.iter().enumerate() {
        let ch = nabla_character(&c, &xs, y);
        assert!(ch.in_co_aisle);
        for (l, poly) in ch.char_data.iter().enumerate() {
            if l == m {
                assert_eq!(poly, &vec![(0, 1)]);
            } else {
                assert!(poly.is_empty());
            }
        }
    }
}

#[test]
fn co_aisle_membership_tracks_the_shift_direction() {
    let c = ctx(Some(2), 2);
    let ys = standards(&c);
    let xs = dual_collection(&c, &ys).unwrap();
    // Y[1] sits one step deeper in the co-aisle; Y[−1] leaves it.
    let up = nabla_character(&c, &xs, &ys[2].shift(1));
    assert!(up.in_co_aisle);
    assert_eq!(up.char_data[2], vec![(-1, 1)]);
    let down = nabla_character(&c, &xs, &ys[2].shift(-1));
    assert!(!down.in_co_aisle);
    assert_eq!(down.char_data[2], vec![(1, 1)]);
}

#[test]
fn a_non_dual_collection_is_rejected_with_a_witness() {
    let c = ctx(Some(2), 2);
    let mut ys = standards(&c);
    // Swapping two exceptionals breaks the certification.
    ys.swap(1, 2);
    match dual_collection(&c, &ys) {
        Err(RingelError::MutationFailed { dim, .. }) => assert!(dim > 0),
        other => panic!("expected MutationFailed, got {other:?}"),
    }
}

#[test]
fn generic_tiltings_are_the_standard_modules() {
    let c = ctx(None, 2);
    for l in 0..c.n() {
        let t = tilting_module(&c, l).unwrap();
        assert_eq!(t.module.dim, c.wd.standards[l].dim);
        assert_eq!(
            t.delta_filtration,
            vec![l],
            "generic T(λ) has the one-step filtration"
        );
        assert!(t.delta_certificate && t.nabla_certificate && t.end_local);
    }
}

#[test]
fn t2_tilting_family_matches_the_frozen_data() {
    let c = ctx(Some(2), 2);
    let ts: Vec<_> = (0..c.n()).map(|l| tilting_module(&c, l).unwrap()).collect();
    let dims: Vec<usize> = ts.iter().map(|t| t.module.dim).collect();
    assert_eq!(dims, vec![4, 5, 1, 1]);
    // T([1];(1)) is the non-trivial one: Δ([2];(2)) on top of Δ([1];(1)).
    assert_eq!(ts[0].delta_filtration, vec![0]);
    assert_eq!(ts[1].delta_filtration, vec![2, 1]);
    assert_eq!(ts[2].delta_filtration, vec![2]);
    assert_eq!(ts[3].delta_filtration, vec![3]);
    assert_eq!(ts[1].nabla_mults, vec![0, 1, 1, 0]);
    for t in &ts {
        assert!(t.delta_certificate && t.nabla_certificate && t.end_local);
    }
}

#[test]
fn t3_truncation_is_semisimple_so_tiltings_are_standards() {
    let c = ctx(Some(3), 2);
    for l in 0..c.n() {
        let t = tilting_module(&c, l).unwrap();
        assert_eq!(t.module.dim, c.wd.standards[l].dim);
        assert_eq!(t.delta_filtration, vec![l]);
        assert!(t.end_local);
    }
}

#[test]
fn ringel_dual_passes_the_full_report_generic() {
    let c = ctx(None, 2);
    let dual = ringel_dual_algebra(&c).unwrap();
    // Semisimple case: End(⊕Δ) is the product of four scalar lines.
    assert_eq!(dual.algebra.dim, 4);
    let rep = duality_report(&c, &dual).unwrap();
    assert!(rep.all_passed());
    assert_eq!(rep.cartan, vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
    ]);
}

#[test]
fn ringel_dual_passes_the_full_report_at_t2() {
    let c = ctx(Some(2), 2);
    let dual = ringel_dual_algebra(&c).unwrap();
    assert_eq!(dual.algebra.dim, 7);
    let dims: Vec<usize> = dual.wd.standards.iter().map(|s| s.dim).collect();
    assert_eq!(dims, vec![1, 1, 2, 1]);
    let rep = duality_report(&c, &dual).unwrap();
    for r in &rep.hw.results {
        assert!(r.passed, "dual axiom failed: {}", r.axiom);
    }
    assert!(rep.rt_projective);
    assert_eq!(rep.cartan, vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 1, 0],
        vec![0, 1, 2, 0],
        vec![0, 0, 0, 1],
    ]);
    assert_eq!(rep.double_dual_cartan, rep.cartan);
}

#[test]
fn ringel_dual_passes_at_t3_and_on_the_vector_backend() {
    let c3 = ctx(Some(3), 2);
    let dual3 = ringel_dual_algebra(&c3).unwrap();
    assert!(duality_report(&c3, &dual3).unwrap().all_passed());
    let cv = ctx_for(Backend::FinVecFq { q: 2 }, Some(4), 1);
    let dualv = ringel_dual_algebra(&cv).unwrap();
    let repv = duality_report(&cv, &dualv).unwrap();
    assert!(repv.all_passed());
    assert_eq!(repv.cartan, vec![vec![1, 0], vec![0, 1]]);
}
