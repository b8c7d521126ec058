//! Structural oracle tests for the truncated algebras: dimensions, weight
//! labels, cell modules, and the cellular Gram form.

use regular_backend::{Backend, Limits};
use scalar_field::Scalar;
use weight_algebra::*;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn truncation_dimensions_match_hom_counts() {
    // Σ over object pairs of the Hom dimensions: Bell numbers for FinSetOp
    // (1+1+1+1 + 2+2 + ... = 5, 34), Galois numbers for FinVecFq.
    let u = Scalar::t();
    for (backend, n, expect) in [
        (Backend::FinSetOp, 1usize, 5usize),
        (Backend::FinSetOp, 2, 34),
        (Backend::FinVecFq { q: 2 }, 1, 10),
    ] {
        let a = build_algebra(backend, &u, n, &lim()).unwrap();
        assert_eq!(a.alg.dim, expect, "{backend:?} N={n}");
        assert!(a.alg.verify(), "associativity and unit for {backend:?} N={n}");
    }
}

#[test]
fn oversized_truncation_is_refused() {
    // FinVecFq at q=2 with N=2 has total dimension 119 > 64: must fail
    // cleanly instead of attempting the build.
    let u = Scalar::t();
    match build_algebra(Backend::FinVecFq { q: 2 }, &u, 2, &lim()) {
        Err(WeightError::SizeLimitExceeded { dim: 119, .. }) => {}
        Err(other) => panic!("unexpected error: {other}"),
        Ok(_) => panic!("expected a size-limit refusal"),
    }
}

#[test]
fn weight_labels_enumerate_aut_irreps() {
    let u = Scalar::t();
    let a = build_algebra(Backend::FinSetOp, &u, 2, &lim()).unwrap();
    let shown: Vec<String> = a.weight_labels().iter().map(|l| l.display()).collect();
    assert_eq!(shown, vec!["[0];()", "[1];(1)", "[2];(2)", "[2];(1,1)"]);

    let a = build_algebra(Backend::FinVecFq { q: 2 }, &u, 1, &lim()).unwrap();
    assert_eq!(a.weight_labels().len(), 2);
}

#[test]
fn cell_modules_verify_and_fill_the_algebra() {
    // Δ(λ) and ∇(λ) are genuine modules of equal dimension, and the
    // cellular bookkeeping Σ (dim Δ(λ))² = dim A closes exactly.
    let u = Scalar::t();
    for (backend, n, dims) in [
        (Backend::FinSetOp, 1usize, vec![2usize, 1]),
        (Backend::FinSetOp, 2, vec![4, 4, 1, 1]),
        (Backend::FinVecFq { q: 2 }, 1, vec![3, 1]),
    ] {
        let a = build_algebra(backend, &u, n, &lim()).unwrap();
        let labels = a.weight_labels();
        let mut total = 0usize;
        for (l, expect_dim) in labels.iter().zip(&dims) {
            let d = a.standard_module(l).unwrap();
            let c = a.costandard_module(l).unwrap();
            assert_eq!(d.dim, *expect_dim, "dim Δ({})", l.display());
            assert_eq!(c.dim, d.dim);
            assert!(d.verify(&a.alg), "Δ({}) module axioms", l.display());
            assert!(c.verify(&a.alg), "∇({}) module axioms", l.display());
            total += d.dim * d.dim;
        }
        assert_eq!(total, a.alg.dim, "{backend:?} N={n}");
    }
}

#[test]
fn gram_form_intertwines_standard_into_costandard() {
    let u = Scalar::t();
    for (backend, n) in [
        (Backend::FinSetOp, 2usize),
        (Backend::FinVecFq { q: 2 }, 1),
    ] {
        let a = build_algebra(backend, &u, n, &lim()).unwrap();
        for l in &a.weight_labels() {
            let d = a.standard_module(l).unwrap();
            let c = a.costandard_module(l).unwrap();
            let (g, _) = a.gram_rank(l).unwrap();
            for bi in 0..a.alg.dim {
                assert_eq!(
                    c.action[bi].matmul(&g),
                    g.matmul(&d.action[bi]),
                    "Gram of {} is not a Δ → ∇ intertwiner",
                    l.display()
                );
            }
        }
    }
}

#[test]
fn generic_gram_forms_have_full_rank() {
    // At generic parameter every standard module is simple.
    let u = Scalar::t();
    let a = build_algebra(Backend::FinSetOp, &u, 2, &lim()).unwrap();
    for l in &a.weight_labels() {
        let d = a.standard_module(l).unwrap();
        let (_, rank) = a.gram_rank(l).unwrap();
        assert_eq!(rank, d.dim, "generic Gram of {} degenerates", l.display());
    }
}

#[test]
fn transpose_is_an_anti_automorphism() {
    let u = Scalar::t();
    let a = build_algebra(Backend::FinSetOp, &u, 2, &lim()).unwrap();
    // τ is an involution and reverses products on basis elements.
    for i in 0..a.alg.dim {
        assert_eq!(a.tau[a.tau[i]], i);
        for j in 0..a.alg.dim {
            let mut x = vec![Scalar::zero(); a.alg.dim];
            x[i] = Scalar::one();
            let mut y = vec![Scalar::zero(); a.alg.dim];
            y[j] = Scalar::one();
            let lhs = a.transpose_coords(&a.alg.multiply(&x, &y));
            let rhs = a
                .alg
                .multiply(&a.transpose_coords(&y), &a.transpose_coords(&x));
            assert_eq!(lhs, rhs, "τ(xy) ≠ τ(y)τ(x) at ({i},{j})");
        }
    }
}
