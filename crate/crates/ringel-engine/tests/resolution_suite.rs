//! Standard modules as labelled projective complexes: shapes of the
//! minimal resolutions, hom computations modulo homotopy, and the
//! invariance of those homs under contractible summands.

use regular_backend::{Backend, Limits};
use ringel_engine::*;
use scalar_field::Scalar;
use weight_algebra::{build_algebra, hom_dim, WeightData};

fn ctx(t: Option<i64>, n: usize) -> RingelCtx {
    let u = match t {
        None => Scalar::t(),
        Some(v) => Scalar::from_integer(v),
    };
    let alg = build_algebra(Backend::FinSetOp, &u, n, &Limits::default()).unwrap();
    let wd = WeightData::from_truncation(&alg).unwrap();
    RingelCtx::new(wd).unwrap()
}

#[test]
fn generic_standards_resolve_to_projective_stalks() {
    for n in [1, 2] {
        let c = ctx(None, n);
        for l in 0..c.n() {
            let y = resolve_standard(&c, l).unwrap();
            assert_eq!(y.min_deg, 0);
            assert_eq!(y.terms, vec![vec![l]]);
        }
    }
}

#[test]
fn specialized_resolutions_have_the_frozen_shapes() {
    // At t = 2 only Δ([2];(2)) is non-projective: its cover P([1];(1))
    // has a one-step kernel resolved by P([2];(2)).
    let c = ctx(Some(2), 2);
    let shapes: Vec<Vec<Vec<usize>>> = (0..c.n())
        .map(|l| resolve_standard(&c, l).unwrap().terms)
        .collect();
    assert_eq!(
        shapes,
        vec![vec![vec![0]], vec![vec![1]], vec![vec![1], vec![2]], vec![vec![3]]]
    );
    // t = 3 is semisimple at this truncation: all stalks.
    let c3 = ctx(Some(3), 2);
    for l in 0..c3.n() {
        assert_eq!(resolve_standard(&c3, l).unwrap().terms, vec![vec![l]]);
    }
}

#[test]
fn resolution_terms_use_strictly_greater_weights_only() {
    let c = ctx(Some(2), 2);
    for l in 0..c.n() {
        let y = resolve_standard(&c, l).unwrap();
        assert_eq!(y.term(0), [l]);
        for d in y.min_deg..0 {
            for &mu in y.term(d) {
                assert!(c.wd.less[l][mu]);
            }
        }
    }
}

#[test]
fn stalk_homs_match_corner_dimensions() {
    let c = ctx(Some(2), 2);
    for s in 0..c.n() {
        for t in 0..c.n() {
            let ys = ProjComplex::stalk(s);
            let yt = ProjComplex::stalk(t);
            let expected = hom_dim(
                &c.wd.alg,
                &c.pd.projectives[s].module,
                &c.pd.projectives[t].module,
            );
            assert_eq!(hom_kb(&c, &ys, &yt, 0), expected);
            assert_eq!(c.pair_basis[s][t].ncols(), expected);
            assert_eq!(hom_kb(&c, &ys, &yt, 1), 0);
            assert_eq!(hom_kb(&c, &ys, &yt, -1), 0);
        }
    }
}

#[test]
fn exceptional_homs_vanish_downward() {
    for t in [None, Some(2), Some(3)] {
        let c = ctx(t, 2);
        let ys: Vec<_> = (0..c.n())
            .map(|l| resolve_standard(&c, l).unwrap())
            .collect();
        for (a, x) in ys.iter().enumerate() {
            for (b, y) in ys.iter().enumerate() {
                let (lo, hi) = shift_range(x, y);
                for k in lo..=hi {
                    let d = hom_kb(&c, x, y, k);
                    if a == b {
                        assert_eq!(d, usize::from(k == 0), "self-homs must be scalar");
                    } else if !c.wd.less[a][b] {
                        assert_eq!(d, 0, "hom(Y_{a}, Y_{b}[{k}]) must vanish downward");
                    }
                }
            }
        }
    }
}

#[test]
fn contractible_summands_do_not_change_homs_and_minimize_removes_them() {
    let c = ctx(Some(2), 2);
    let y2 = resolve_standard(&c, 2).unwrap();
    // A contractible two-term complex P(1) ==id== P(1) in degrees −1, 0.
    let mut contractible = ProjComplex {
        min_deg: -1,
        terms: vec![vec![1], vec![1]],
        diffs: vec![ElemMat::zero(1, 1, c.wd.alg.dim)],
    };
    contractible.diffs[0].entries[0][0] = c.pd.projectives[1].idem.clone();
    contractible.verify(&c).unwrap();
    let fat = y2.direct_sum(&contractible, c.wd.alg.dim);
    fat.verify(&c).unwrap();
    for l in 0..c.n() {
        let probe = resolve_standard(&c, l).unwrap();
        for k in -2..=2 {
            assert_eq!(
                hom_kb(&c, &probe, &fat, k),
                hom_kb(&c, &probe, &y2, k),
                "hom into Y_2 changed after adding a contractible summand"
            );
            assert_eq!(hom_kb(&c, &fat, &probe, k), hom_kb(&c, &y2, &probe, k));
        }
    }
    let slim = minimize(&c, fat);
    assert_eq!(slim.terms, y2.terms);
}

#[test]
fn shifting_twice_roundtrips() {
    let c = ctx(Some(2), 2);
    let y = resolve_standard(&c, 2).unwrap();
    let back = y.shift(3).shift(-3);
    assert_eq!(back.min_deg, y.min_deg);
    assert_eq!(back.terms, y.terms);
    y.shift(1).verify(&c).unwrap();
}
