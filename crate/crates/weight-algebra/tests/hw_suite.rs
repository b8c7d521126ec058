//! Full highest-weight certification of the truncations, plus a fault
//! injection showing the verifier rejects the wrong weight order.

use regular_backend::{Backend, Limits};
use scalar_field::Scalar;
use weight_algebra::*;

fn weight_data(u: Scalar, n: usize) -> WeightData {
    let a = build_algebra(Backend::FinSetOp, &u, n, &Limits::default()).unwrap();
    WeightData::from_truncation(&a).unwrap()
}

fn assert_all_pass(report: &HwReport, what: &str) {
    for r in &report.results {
        assert!(
            r.passed,
            "{what}: axiom '{}' failed: {:?}",
            r.axiom, r.witness
        );
    }
    assert!(report.all_passed());
}

#[test]
fn generic_truncations_are_highest_weight() {
    for n in [1usize, 2] {
        let wd = weight_data(Scalar::t(), n);
        let report = verify_highest_weight(&wd).unwrap();
        assert_all_pass(&report, &format!("generic N={n}"));
    }
}

#[test]
fn integer_specializations_are_highest_weight() {
    // t = 2 and t = 3 are quasi-hereditary even where the cell structure
    // degenerates (at t = 2 the [1]-cell loses rank).
    for t in [2i64, 3] {
        let wd = weight_data(Scalar::from_integer(t), 2);
        let report = verify_highest_weight(&wd).unwrap();
        assert_all_pass(&report, &format!("t={t} N=2"));
    }
}

#[test]
fn finvec_truncation_is_highest_weight() {
    let a = build_algebra(Backend::FinVecFq { q: 2 }, &Scalar::t(), 1, &Limits::default())
        .unwrap();
    let wd = WeightData::from_truncation(&a).unwrap();
    let report = verify_highest_weight(&wd).unwrap();
    assert_all_pass(&report, "FinVecFq q=2 N=1");
}

#[test]
fn wrong_weight_order_is_rejected_with_a_witness() {
    // Fault injection: the support order instead of its opposite.  At
    // t = 2 the standard filtration of P([2];(2)) has a lower layer with
    // smaller support, which the wrong order declares illegal.
    let mut wd = weight_data(Scalar::from_integer(2), 2);
    wd.less = order_matrix(&wd.labels, false);
    let report = verify_highest_weight(&wd).unwrap();
    assert!(!report.all_passed());
    let failed: Vec<&diagram_category::AxiomResult> =
        report.results.iter().filter(|r| !r.passed).collect();
    assert!(
        failed
            .iter()
            .any(|r| r.axiom.contains("(PΔ)")
                && r.witness.as_deref().is_some_and(|w| w.contains("not strictly above"))),
        "expected a (PΔ) order witness, got {failed:?}"
    );
}

#[test]
fn swapped_standards_are_rejected() {
    // Fault injection: exchanging two standard modules breaks the Hom
    // orthogonality diagnostics.
    let mut wd = weight_data(Scalar::t(), 2);
    wd.standards.swap(0, 1);
    let report = verify_highest_weight(&wd).unwrap();
    assert!(!report.all_passed());
}
