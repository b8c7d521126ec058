//! Brute-force universal-property oracles for the categorical operations,
//! plus the degree-function axioms, at exhaustive small sizes.

use regular_backend::{
    automorphisms, degree, enumerate_morphisms, pullback, pushout_of_surjections, Backend, Limits,
    RMorphism, RObject,
};
use scalar_field::Scalar;

fn small_objects(backend: Backend, max: usize) -> Vec<RObject> {
    (0..=max).map(|n| backend.object(n)).collect()
}

/// (backend, object size cap, competitor object cap) grids kept small
/// enough for exhaustive mediator searches.
fn universal_grids() -> Vec<(Backend, usize, usize)> {
    vec![
        (Backend::FinSetOp, 2, 4),
        (Backend::FinVecFq { q: 2 }, 2, 3),
        (Backend::FinVecFq { q: 3 }, 1, 2),
    ]
}

fn homs(x: RObject, y: RObject, l: &Limits) -> Vec<RMorphism> {
    enumerate_morphisms(x, y, l).unwrap_or_default()
}

/// Checks the fiber-product universal property of `pullback(f,g)` against
/// every competitor span from every candidate object up to `wmax`.
fn pullback_is_universal(f: &RMorphism, g: &RMorphism, wmax: usize, l: &Limits) -> bool {
    let (p, l1, l2) = pullback(f, &g).unwrap();
    if RMorphism::compose(f, &l1) != RMorphism::compose(g, &l2) {
        return false;
    }
    for w in small_objects(f.source.backend, wmax) {
        let into_p = homs(w, p, l);
        for a in homs(w, f.source, l) {
            for b in homs(w, g.source, l) {
                if RMorphism::compose(f, &a) != RMorphism::compose(g, &b) {
                    continue;
                }
                let mediators = into_p
                    .iter()
                    .filter(|h| RMorphism::compose(&l1, h) == a && RMorphism::compose(&l2, h) == b)
                    .count();
                if mediators != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks the pushout universal property of `pushout_of_surjections(p,q)`.
fn pushout_is_universal(p: &RMorphism, q: &RMorphism, wmax: usize, l: &Limits) -> bool {
    let (qo, a, b) = pushout_of_surjections(p, q).unwrap();
    if RMorphism::compose(&a, p) != RMorphism::compose(&b, q) {
        return false;
    }
    if !a.is_surjective() || !b.is_surjective() {
        return false;
    }
    for w in small_objects(p.source.backend, wmax) {
        let from_q = homs(qo, w, l);
        for a2 in homs(p.target, w, l) {
            for b2 in homs(q.target, w, l) {
                if RMorphism::compose(&a2, p) != RMorphism::compose(&b2, q) {
                    continue;
                }
                let mediators = from_q
                    .iter()
                    .filter(|h| {
                        RMorphism::compose(h, &a) == a2 && RMorphism::compose(h, &b) == b2
                    })
                    .count();
                if mediators != 1 {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn pullbacks_satisfy_the_universal_property() {
    let l = Limits::default();
    for (backend, cap, wmax) in universal_grids() {
        for x in small_objects(backend, cap) {
            for y in small_objects(backend, cap) {
                for z in small_objects(backend, cap) {
                    for f in homs(x, z, &l) {
                        for g in homs(y, z, &l) {
                            assert!(
                                pullback_is_universal(&f, &g, wmax, &l),
                                "pullback universal property failed for {f:?}, {g:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn pushouts_are_bicartesian_malcev_squares() {
    let l = Limits::default();
    let mut grids = universal_grids();
    grids[0] = (Backend::FinSetOp, 3, 3); // surjections are sparse; go bigger
    for (backend, cap, wmax) in grids {
        for x in small_objects(backend, cap) {
            for y in small_objects(backend, cap) {
                for z in small_objects(backend, cap) {
                    for p in homs(x, y, &l).iter().filter(|m| m.is_surjective()) {
                        for q in homs(x, z, &l).iter().filter(|m| m.is_surjective()) {
                            assert!(
                                pushout_is_universal(p, q, wmax, &l),
                                "pushout universal property failed for {p:?}, {q:?}"
                            );
                            // Mal'cev: the pushout square of surjections is
                            // simultaneously a pullback square exactly when
                            // the span (p,q) is jointly injective.
                            let (_, a, b) = pushout_of_surjections(p, q).unwrap();
                            let (pb, l1, l2) = pullback(&a, &b).unwrap();
                            let mediators: Vec<_> = homs(x, pb, &l)
                                .into_iter()
                                .filter(|h| {
                                    RMorphism::compose(&l1, h) == *p
                                        && RMorphism::compose(&l2, h) == *q
                                })
                                .collect();
                            assert_eq!(mediators.len(), 1);
                            let jointly_injective =
                                regular_backend::tuple_many(&[p.clone(), q.clone()])
                                    .is_injective();
                            assert_eq!(
                                mediators[0].is_iso(),
                                jointly_injective,
                                "bicartesian criterion failed for {p:?}, {q:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn degree_is_multiplicative_on_surjections() {
    let l = Limits::default();
    let u = Scalar::t();
    for (backend, cap) in [
        (Backend::FinSetOp, 4),
        (Backend::FinVecFq { q: 2 }, 2),
        (Backend::FinVecFq { q: 3 }, 2),
    ] {
        for x in small_objects(backend, cap) {
            for y in small_objects(backend, cap) {
                for z in small_objects(backend, cap) {
                    for p in homs(x, y, &l).iter().filter(|m| m.is_surjective()) {
                        for q in homs(y, z, &l).iter().filter(|m| m.is_surjective()) {
                            let lhs = degree(&RMorphism::compose(q, p), &u).unwrap();
                            let rhs = &degree(p, &u).unwrap() * &degree(q, &u).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn degree_is_constant_along_pullbacks() {
    // Pull a quotient f: X↠Z back along any g: Y→Z; the pulled-back leg
    // P→Y is again surjective with the same degree as f.
    let l = Limits::default();
    let u = Scalar::t();
    for (backend, cap) in [
        (Backend::FinSetOp, 4),
        (Backend::FinVecFq { q: 2 }, 2),
        (Backend::FinVecFq { q: 3 }, 2),
    ] {
        for x in small_objects(backend, cap) {
            for y in small_objects(backend, cap) {
                for z in small_objects(backend, cap) {
                    for f in homs(x, z, &l).iter().filter(|m| m.is_surjective()) {
                        for g in homs(y, z, &l) {
                            let (_, _, leg_y) = pullback(f, &g).unwrap();
                            assert!(leg_y.is_surjective());
                            assert_eq!(degree(&leg_y, &u).unwrap(), degree(f, &u).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn injective_surjective_spans_on_equal_objects_are_isos() {
    // In any span X ↩ S ↠ X with an injective leg and a surjective leg,
    // both legs are isomorphisms.
    let l = Limits::default();
    for (backend, cap) in [
        (Backend::FinSetOp, 4),
        (Backend::FinVecFq { q: 2 }, 2),
        (Backend::FinVecFq { q: 3 }, 2),
    ] {
        for x in small_objects(backend, cap) {
            for s in small_objects(backend, cap) {
                let all = homs(s, x, &l);
                let has_injective = all.iter().any(|m| m.is_injective());
                let has_surjective = all.iter().any(|m| m.is_surjective());
                if has_injective && has_surjective {
                    // Both leg kinds force |S| = |X|, and then every
                    // injective or surjective leg is an isomorphism.
                    assert_eq!(s.n, x.n);
                    for m in &all {
                        if m.is_injective() || m.is_surjective() {
                            assert!(m.is_iso());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn automorphism_groups_close_under_composition() {
    let l = Limits::default();
    for (backend, n, expected) in [
        (Backend::FinSetOp, 3, 6),
        (Backend::FinVecFq { q: 2 }, 2, 6),
        (Backend::FinVecFq { q: 3 }, 2, 48),
    ] {
        let x = backend.object(n);
        let auts = automorphisms(x, &l).unwrap();
        assert_eq!(auts.len(), expected);
        for a in &auts {
            assert!(auts.contains(&a.inverse().unwrap()));
            for b in &auts {
                assert!(auts.contains(&RMorphism::compose(a, b)));
            }
        }
    }
}
