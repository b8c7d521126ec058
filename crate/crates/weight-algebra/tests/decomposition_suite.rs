//! Decomposition matrices against an independent brute-force oracle,
//! radical verification, idempotent lifting, and BGG reciprocity at the
//! interesting integer specializations.

use diagram_category::FdAlgebra;
use regular_backend::{Backend, Limits};
use scalar_field::{Matrix, Scalar};
use weight_algebra::*;

fn truncation(t: Option<i64>, n: usize) -> TruncatedAlgebra {
    let u = match t {
        None => Scalar::t(),
        Some(v) => Scalar::from_integer(v),
    };
    build_algebra(Backend::FinSetOp, &u, n, &Limits::default()).unwrap()
}

/// Semisimple subquotients of the radical filtration of `m`, top first.
fn radical_layers(alg: &FdAlgebra, m: &FdModule) -> Vec<FdModule> {
    let rad = alg.radical_basis();
    let mut layers = Vec::new();
    let mut current = m.clone();
    while current.dim > 0 {
        let span = current.radical_span(&rad);
        layers.push(current.quotient(&span).0);
        current = current.submodule(&span).0;
    }
    layers
}

/// Brute-force decomposition matrix: `[Δ(λ) : L(μ)]` counted layer by
/// layer with homomorphism spaces, never touching idempotents.
fn oracle_decomposition_matrix(a: &TruncatedAlgebra) -> Vec<Vec<usize>> {
    let labels = a.weight_labels();
    let rad = a.alg.radical_basis();
    let simples: Vec<FdModule> = labels
        .iter()
        .map(|l| {
            let d = a.standard_module(l).unwrap();
            d.quotient(&d.radical_span(&rad)).0
        })
        .collect();
    labels
        .iter()
        .map(|l| {
            let d = a.standard_module(l).unwrap();
            let layers = radical_layers(&a.alg, &d);
            simples
                .iter()
                .map(|s| {
                    layers
                        .iter()
                        .map(|layer| hom_dim(&a.alg, s, layer))
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn projective_data(a: &TruncatedAlgebra) -> (WeightData, ProjectiveData) {
    let wd = WeightData::from_truncation(a).unwrap();
    let pd = ProjectiveData::new(&wd.alg, &wd.labels, &wd.standards).unwrap();
    (wd, pd)
}

#[test]
fn generic_decomposition_matrix_is_the_identity() {
    let a = truncation(None, 2);
    let (wd, pd) = projective_data(&a);
    let dm = decomposition_matrix(&wd, &pd);
    for i in 0..dm.len() {
        for j in 0..dm.len() {
            assert_eq!(dm[i][j], usize::from(i == j), "dm[{i}][{j}]");
        }
    }
    assert_eq!(dm, oracle_decomposition_matrix(&a));
}

#[test]
fn t1_gram_rank_drops_and_matches_the_oracle() {
    let a = truncation(Some(1), 2);
    let labels = a.weight_labels();
    // At t = 1 the empty-support cell degenerates: rank 3 < dim 4.
    let dropped: Vec<(String, usize, usize)> = labels
        .iter()
        .filter_map(|l| {
            let d = a.standard_module(l).unwrap().dim;
            let (_, r) = a.gram_rank(l).unwrap();
            (r < d).then(|| (l.display(), d, r))
        })
        .collect();
    assert_eq!(dropped, vec![("[0];()".to_string(), 4, 3)]);
    let (wd, pd) = projective_data(&a);
    let dm = decomposition_matrix(&wd, &pd);
    assert_eq!(dm, oracle_decomposition_matrix(&a));
    assert_eq!(
        dm,
        vec![
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ]
    );
}

#[test]
fn t2_decomposition_matrix_matches_the_oracle() {
    let a = truncation(Some(2), 2);
    let (wd, pd) = projective_data(&a);
    let dm = decomposition_matrix(&wd, &pd);
    assert_eq!(dm, oracle_decomposition_matrix(&a));
    assert_eq!(
        dm,
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ]
    );
}

#[test]
fn radical_is_a_nilpotent_ideal_with_semisimple_quotient() {
    for t in [None, Some(1), Some(2)] {
        let a = truncation(t, 2);
        let rad = a.alg.radical_basis();
        // Two-sided ideal: b·r and r·b stay in the span.
        let solve_in = |span: &Matrix, v: &[Scalar]| span.transpose().solve(v).is_some();
        for k in 0..rad.nrows() {
            let r: Vec<Scalar> = rad.row(k).to_vec();
            for i in 0..a.alg.dim {
                let mut b = vec![Scalar::zero(); a.alg.dim];
                b[i] = Scalar::one();
                assert!(solve_in(&rad, &a.alg.multiply(&b, &r)), "left ideal");
                assert!(solve_in(&rad, &a.alg.multiply(&r, &b)), "right ideal");
            }
        }
        // Nilpotent: successive power spans shrink to zero.
        let mut power: Vec<Vec<Scalar>> = (0..rad.nrows()).map(|k| rad.row(k).to_vec()).collect();
        let mut steps = 0usize;
        while !power.is_empty() {
            steps += 1;
            assert!(steps <= a.alg.dim, "radical power fails to vanish");
            let mut rows = Vec::new();
            for x in &power {
                for k in 0..rad.nrows() {
                    rows.push(a.alg.multiply(x, rad.row(k)));
                }
            }
            if rows.is_empty() {
                break;
            }
            let (r, pivots) = Matrix::from_rows(rows).rref();
            power = (0..pivots.len()).map(|k| r.row(k).to_vec()).collect();
        }
        // Semisimple quotient: its own radical vanishes.
        let (quot, _) = a.alg.quotient(&rad);
        assert_eq!(quot.radical_basis().nrows(), 0, "quotient not semisimple");
    }
}

#[test]
fn lifted_idempotents_are_exact_and_account_for_the_regular_module() {
    for t in [None, Some(1), Some(2), Some(3)] {
        let a = truncation(t, 2);
        let (_, pd) = projective_data(&a);
        let mut total = 0usize;
        for (l, ideal) in pd.projectives.iter().enumerate() {
            // e² = e exactly (Newton lifting terminated, no approximation).
            assert_eq!(a.alg.multiply(&ideal.idem, &ideal.idem), ideal.idem);
            total += pd.simples[l].dim * ideal.module.dim;
        }
        // A ≅ ⊕ P(λ)^{dim L(λ)} as a left module.
        assert_eq!(total, a.alg.dim, "regular module bookkeeping at t={t:?}");
    }
}

#[test]
fn bgg_reciprocity_at_integer_parameters() {
    // [P(λ) : Δ(μ)] = [∇(μ) : L(λ)], with the left side read off a
    // standard filtration and the right side from idempotent ranks.
    for t in [1i64, 2, 3] {
        let a = truncation(Some(t), 2);
        let (wd, pd) = projective_data(&a);
        for l in 0..wd.labels.len() {
            let filt = standard_filtration(&wd, &pd.projectives[l].module, &wd.standards)
                .unwrap_or_else(|| panic!("P({}) has no Δ-filtration at t={t}", wd.labels[l].display()));
            for mu in 0..wd.labels.len() {
                let p_delta = filt.iter().filter(|&&f| f == mu).count();
                let nabla_l = pd.composition_multiplicity(&wd.costandards[mu], l);
                assert_eq!(
                    p_delta,
                    nabla_l,
                    "BGG fails at t={t}, λ={}, μ={}",
                    wd.labels[l].display(),
                    wd.labels[mu].display()
                );
            }
        }
    }
}
