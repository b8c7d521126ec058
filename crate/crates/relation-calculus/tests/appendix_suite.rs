//! Seeded property suite for the n-ary relation calculus: reduction
//! roundtrips, factorization uniqueness, j-composition laws, and the fully
//! reduced 3-ary factorization, over both backends.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regular_backend::{automorphisms, Backend, Limits, RMorphism, RObject};
use relation_calculus::{
    j_compose_span, mor_product, random_injective, random_morphism, random_relation,
    random_surjective, reduction_iso, star2, tri_factor, MinusSpan, NRelation, NSpan,
};

fn backends() -> Vec<Backend> {
    vec![
        Backend::FinSetOp,
        Backend::FinVecFq { q: 2 },
        Backend::FinVecFq { q: 3 },
    ]
}

/// A random span `(s1, s2)` with injective second leg, composable at the
/// object `t` (that is, the target of `s1` is `t`).
fn random_mono_span<R: Rng>(rng: &mut R, t: RObject) -> (RMorphism, RMorphism) {
    let backend = t.backend;
    let lo = if backend == Backend::FinSetOp && t.n > 0 {
        1
    } else {
        0
    };
    let w = backend.object(rng.gen_range(lo..=t.n.max(lo)));
    let s1 = random_morphism(rng, w, t);
    // In FinSetOp the empty object only embeds in itself.
    let y_n = if backend == Backend::FinSetOp && w.n == 0 {
        0
    } else {
        rng.gen_range(w.n..=w.n + 2)
    };
    let s2 = random_injective(rng, w, backend.object(y_n));
    (s1, s2)
}

#[test]
fn reduce_roundtrips_and_produces_reduced_output() {
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let arity = rng.gen_range(1..=3);
            let f = random_relation(&mut rng, backend, arity, 3);
            for j in 0..arity {
                let (g, s) = f.reduce(j).unwrap();
                assert!(g.is_j_reduced(j).unwrap(), "reduce output not reduced");
                assert!(s.s1.is_surjective() && s.s2.is_injective());
                assert_eq!(g.j_compose(j, &s.s1, &s.s2).unwrap(), f, "roundtrip failed");
            }
        }
    }
}

#[test]
fn reduce_preserves_other_reducedness() {
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let arity = rng.gen_range(2..=3);
            let f = random_relation(&mut rng, backend, arity, 3);
            for j in 0..arity {
                let (g, _) = f.reduce(j).unwrap();
                for k in 0..arity {
                    if k != j && f.is_j_reduced(k).unwrap() {
                        assert!(
                            g.is_j_reduced(k).unwrap(),
                            "reduce at {j} destroyed {k}-reducedness"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn j_composition_associativity_and_interchange() {
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let arity = rng.gen_range(2..=3);
            let f = random_relation(&mut rng, backend, arity, 3);
            let span = f.canonical_span();
            let j = rng.gen_range(0..arity);
            let s = random_mono_span(&mut rng, span.legs[j].target);
            // Associativity: (f *_j s) *_j s' = f *_j (s *₂ s').
            let fs = f.j_compose(j, &s.0, &s.1).unwrap();
            let sp = random_mono_span(&mut rng, s.1.target);
            let lhs = fs.j_compose(j, &sp.0, &sp.1).unwrap();
            let ss = star2(&s, &sp);
            let rhs = f.j_compose(j, &ss.0, &ss.1).unwrap();
            assert_eq!(lhs, rhs, "associativity of j-composition failed");
            // Interchange: (f *_j s) *_k s'' = (f *_k s'') *_j s for k ≠ j.
            let k = (j + 1) % arity;
            let s2 = random_mono_span(&mut rng, span.legs[k].target);
            let a = f
                .j_compose(j, &s.0, &s.1)
                .unwrap()
                .j_compose(k, &s2.0, &s2.1)
                .unwrap();
            let b = f
                .j_compose(k, &s2.0, &s2.1)
                .unwrap()
                .j_compose(j, &s.0, &s.1)
                .unwrap();
            assert_eq!(a, b, "interchange of j-compositions failed");
        }
    }
}

#[test]
fn reduction_unique_up_to_twist() {
    let limits = Limits::default();
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..60 {
            let arity = rng.gen_range(1..=3);
            let f = random_relation(&mut rng, backend, arity, 2);
            let j = rng.gen_range(0..arity);
            let (g, s) = f.reduce(j).unwrap();
            // Twist by a random automorphism α of the middle object:
            // g' = g *_j (id, α) and s' = (id, α⁻¹) *₂ s also factor f.
            let m = g.targets[j];
            let auts = automorphisms(m, &limits).unwrap();
            let alpha = auts[rng.gen_range(0..auts.len())].clone();
            let id_m = RMorphism::identity(m);
            let gp = g.j_compose(j, &id_m, &alpha).unwrap();
            let alpha_inv = alpha.inverse().unwrap();
            let tw = star2(&(id_m.clone(), alpha_inv), &(s.s1.clone(), s.s2.clone()));
            let sp = MinusSpan::new(tw.0, tw.1);
            assert_eq!(gp.j_compose(j, &sp.s1, &sp.s2).unwrap(), f);
            // The isomorphism search recovers an iso relating the two.
            let found = reduction_iso(&g, &s, &gp, &sp, j, &limits).unwrap();
            assert_eq!(g.j_compose(j, &id_m, &found).unwrap(), gp);
        }
    }
}

#[test]
fn tri_factor_fully_reduces_and_roundtrips() {
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let f0 = random_relation(&mut rng, backend, 3, 2);
            // tri_factor requires a 1-reduced input; reducing at the first
            // leg produces one.
            let (f, _) = f0.reduce(0).unwrap();
            let (g, s, t) = tri_factor(&f).unwrap();
            for i in 0..3 {
                assert!(
                    g.is_j_reduced(i).unwrap(),
                    "tri_factor output not {i}-reduced"
                );
            }
            // f = (g *₂ s) *₃ t = (g *₃ t) *₂ s.
            let a = g
                .j_compose(1, &s.s1, &s.s2)
                .unwrap()
                .j_compose(2, &t.s1, &t.s2)
                .unwrap();
            let b = g
                .j_compose(2, &t.s1, &t.s2)
                .unwrap()
                .j_compose(1, &s.s1, &s.s2)
                .unwrap();
            assert_eq!(a, f);
            assert_eq!(b, f);
            // Pullback-product identity: bundling the last two legs turns
            // the double composition into a single one with s × t.
            let gspan = g.canonical_span();
            let flat = NSpan::new(
                gspan.source,
                vec![
                    gspan.legs[0].clone(),
                    regular_backend::tuple_many(&[gspan.legs[1].clone(), gspan.legs[2].clone()]),
                ],
            );
            let st1 = mor_product(&s.s1, &t.s1);
            let st2 = mor_product(&s.s2, &t.s2);
            let prod_span = j_compose_span(&flat, 1, &st1, &st2).unwrap();
            let prod_rel = NRelation::from_span(&prod_span).unwrap();
            let fspan = f.canonical_span();
            let f_flat = NRelation::from_span(&NSpan::new(
                fspan.source,
                vec![
                    fspan.legs[0].clone(),
                    regular_backend::tuple_many(&[fspan.legs[1].clone(), fspan.legs[2].clone()]),
                ],
            ))
            .unwrap();
            assert_eq!(prod_rel, f_flat, "pullback-product identity failed");
        }
    }
}

#[test]
fn tri_factor_unique_up_to_iso_pair() {
    let limits = Limits::default();
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..30 {
            let f0 = random_relation(&mut rng, backend, 3, 2);
            let (f, _) = f0.reduce(0).unwrap();
            let (g, s, t) = tri_factor(&f).unwrap();
            // Twist both middle objects to build a second factorization.
            let (m2, m3) = (g.targets[1], g.targets[2]);
            let auts2 = automorphisms(m2, &limits).unwrap();
            let auts3 = automorphisms(m3, &limits).unwrap();
            let alpha = auts2[rng.gen_range(0..auts2.len())].clone();
            let beta = auts3[rng.gen_range(0..auts3.len())].clone();
            let gp = g
                .j_compose(1, &RMorphism::identity(m2), &alpha)
                .unwrap()
                .j_compose(2, &RMorphism::identity(m3), &beta)
                .unwrap();
            let tw_s = star2(
                &(RMorphism::identity(m2), alpha.inverse().unwrap()),
                &(s.s1.clone(), s.s2.clone()),
            );
            let tw_t = star2(
                &(RMorphism::identity(m3), beta.inverse().unwrap()),
                &(t.s1.clone(), t.s2.clone()),
            );
            let sp = MinusSpan::new(tw_s.0, tw_s.1);
            let tp = MinusSpan::new(tw_t.0, tw_t.1);
            // The twisted data still composes to f...
            let rebuilt = gp
                .j_compose(1, &sp.s1, &sp.s2)
                .unwrap()
                .j_compose(2, &tp.s1, &tp.s2)
                .unwrap();
            assert_eq!(rebuilt, f);
            // ...and the relating iso at the first middle is recovered by
            // viewing both as 2-reductions of f (after absorbing t resp. t').
            let found = reduction_iso(
                &g.j_compose(2, &t.s1, &t.s2).unwrap(),
                &s,
                &gp.j_compose(2, &tp.s1, &tp.s2).unwrap(),
                &sp,
                1,
                &limits,
            )
            .unwrap();
            assert!(found.is_iso());
        }
    }
}

#[test]
fn sampled_surjections_and_injections_have_the_claimed_properties() {
    for backend in backends() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let a = rng.gen_range(1..=3);
            let b = rng.gen_range(0..=a);
            let x = backend.object(a);
            let y = backend.object(b);
            assert!(random_surjective(&mut rng, x, y).is_surjective());
            if backend != Backend::FinSetOp || b > 0 {
                assert!(random_injective(&mut rng, y, x).is_injective());
            }
        }
    }
}
