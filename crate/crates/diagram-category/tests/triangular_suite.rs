//! Triangular structure: core decomposition with essential uniqueness, and
//! the full axiom verification on small truncations.

use diagram_category::{
    classify, compose_relations, core_decompose, core_uniqueness_iso, d_relations, hom_basis,
    rel_target, triangular_verify, u_relations, AxiomResult, TriangularClass, TriangularReport,
};
use regular_backend::{Backend, Limits};
use scalar_field::Scalar;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn every_relation_on_two_points_core_decomposes() {
    let u = Scalar::t();
    let lim = limits();
    let x = Backend::FinSetOp.object(2);
    let hom = hom_basis(x, x, &lim).unwrap();
    assert_eq!(hom.len(), 15);
    for r in &hom {
        let (g, f) = core_decompose(r).unwrap();
        assert!(
            matches!(classify(&g), TriangularClass::D | TriangularClass::M),
            "left factor not in D"
        );
        assert!(
            matches!(classify(&f), TriangularClass::U | TriangularClass::M),
            "right factor not in U"
        );
        let (c, h) = compose_relations(&f, &g, &u).unwrap();
        assert!(c.is_one(), "factorization coefficient must be 1");
        assert_eq!(&h, r, "factorization must recompose to the relation");
    }
}

#[test]
fn core_decomposition_is_essentially_unique() {
    // Every pair of factorizations of the same relation through the same
    // middle object is related by a unique middle automorphism.
    let u = Scalar::t();
    let lim = limits();
    let x = Backend::FinSetOp.object(2);
    for r in hom_basis(x, x, &lim).unwrap() {
        let (g, f) = core_decompose(&r).unwrap();
        let y = rel_target(&g);
        // Enumerate all factorizations through y directly.
        let mut found = 0usize;
        for gp in d_relations(x, y, &lim).unwrap() {
            for fp in u_relations(y, x, &lim).unwrap() {
                let (c, h) = compose_relations(&fp, &gp, &u).unwrap();
                if !(c.is_one() && h == r) {
                    continue;
                }
                found += 1;
                let m = core_uniqueness_iso(&g, &f, &gp, &fp, &u, &lim).unwrap();
                assert!(
                    m.is_some(),
                    "no middle isomorphism relating two factorizations"
                );
            }
        }
        assert!(found >= 1, "core decomposition not found by search");
    }
}

#[test]
fn generic_relations_lie_in_neither_u_nor_d() {
    let lim = limits();
    let x = Backend::FinSetOp.object(2);
    let hom = hom_basis(x, x, &lim).unwrap();
    let us = u_relations(x, x, &lim).unwrap();
    let ds = d_relations(x, x, &lim).unwrap();
    let mut generic = 0usize;
    for r in &hom {
        if classify(r) == TriangularClass::Generic {
            assert!(!us.contains(r) && !ds.contains(r));
            generic += 1;
        }
    }
    // Aut([2]) has two elements; 13 of the 15 relations are generic.
    assert_eq!(us.len(), 2);
    assert_eq!(ds.len(), 2);
    assert_eq!(generic, 13);
}

#[test]
fn triangular_axioms_hold_generically_on_finsetop() {
    let report = triangular_verify(Backend::FinSetOp, 2, &Scalar::t(), &limits()).unwrap();
    assert!(
        report.all_passed(),
        "failures: {:?}",
        report
            .results
            .iter()
            .filter(|r| !r.passed)
            .collect::<Vec<_>>()
    );
}

#[test]
fn triangular_axioms_hold_at_integer_specializations() {
    for t in [2i64, 3] {
        let u = Scalar::from_integer(t);
        let report = triangular_verify(Backend::FinSetOp, 2, &u, &limits()).unwrap();
        assert!(report.all_passed(), "failure at t = {t}");
    }
}

#[test]
fn triangular_axioms_hold_on_finvec_f2() {
    let report =
        triangular_verify(Backend::FinVecFq { q: 2 }, 1, &Scalar::t(), &limits()).unwrap();
    assert!(
        report.all_passed(),
        "failures: {:?}",
        report
            .results
            .iter()
            .filter(|r| !r.passed)
            .collect::<Vec<_>>()
    );
}

#[test]
fn report_detects_an_injected_fault() {
    let mut report = TriangularReport {
        results: vec![AxiomResult {
            axiom: "T1".into(),
            passed: true,
            witness: None,
        }],
    };
    assert!(report.all_passed());
    report.results.push(AxiomResult {
        axiom: "T3".into(),
        passed: false,
        witness: Some("missing composite".into()),
    });
    assert!(!report.all_passed());
}
