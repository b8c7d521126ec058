//! Seeded property fuzzer over the n-ary relation calculus: reduction
//! roundtrips, uniqueness up to twist, j-composition laws, and the fully
//! reduced 3-ary factorization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regular_backend::{automorphisms, Backend, Limits, RMorphism, RObject};
use relation_calculus::{
    random_injective, random_morphism, random_relation, reduction_iso, star2, tri_factor,
    MinusSpan,
};

pub struct FuzzOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
}

/// A random span `(s1, s2)` with injective second leg, composable at `t`.
fn random_mono_span<R: Rng>(rng: &mut R, t: RObject) -> (RMorphism, RMorphism) {
    let backend = t.backend;
    let lo = if backend == Backend::FinSetOp && t.n > 0 {
        1
    } else {
        0
    };
    let w = backend.object(rng.gen_range(lo..=t.n.max(lo)));
    let s1 = random_morphism(rng, w, t);
    let y_n = if backend == Backend::FinSetOp && w.n == 0 {
        0
    } else {
        rng.gen_range(w.n..=w.n + 2)
    };
    let s2 = random_injective(rng, w, backend.object(y_n));
    (s1, s2)
}

macro_rules! check {
    ($failures:expr, $case:expr, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $failures.push(format!("case {}: {}", $case, format!($($msg)*)));
        }
    };
}

pub fn run(backend: Backend, seed: u64, cases: usize, limits: &Limits) -> FuzzOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        if let Err(e) = run_case(backend, &mut rng, case, limits, &mut failures) {
            failures.push(format!("case {case}: unexpected error: {e}"));
        }
    }
    FuzzOutcome { cases, failures }
}

fn run_case(
    backend: Backend,
    rng: &mut ChaCha8Rng,
    case: usize,
    limits: &Limits,
    failures: &mut Vec<String>,
) -> Result<(), relation_calculus::RelError> {
    let arity = rng.gen_range(1..=3);
    let f = random_relation(rng, backend, arity, 3);
    // Reduction roundtrips at every leg.
    for j in 0..arity {
        let (g, s) = f.reduce(j)?;
        check!(failures, case, g.is_j_reduced(j)?, "reduce({j}) output not reduced");
        check!(
            failures,
            case,
            s.s1.is_surjective() && s.s2.is_injective(),
            "reduce({j}) span is not surjective/injective"
        );
        check!(
            failures,
            case,
            g.j_compose(j, &s.s1, &s.s2)? == f,
            "reduce({j}) roundtrip failed"
        );
        for k in 0..arity {
            if k != j && f.is_j_reduced(k)? {
                check!(
                    failures,
                    case,
                    g.is_j_reduced(k)?,
                    "reduce({j}) destroyed {k}-reducedness"
                );
            }
        }
    }
    // Uniqueness of the reduction up to a middle-object twist.
    {
        let j = rng.gen_range(0..arity);
        let (g, s) = f.reduce(j)?;
        let m = g.targets[j];
        let auts = automorphisms(m, limits).map_err(relation_calculus::RelError::Backend)?;
        let alpha = auts[rng.gen_range(0..auts.len())].clone();
        let id_m = RMorphism::identity(m);
        let gp = g.j_compose(j, &id_m, &alpha)?;
        let alpha_inv = alpha.inverse().expect("automorphisms invert");
        let tw = star2(&(id_m.clone(), alpha_inv), &(s.s1.clone(), s.s2.clone()));
        let sp = MinusSpan::new(tw.0, tw.1);
        let found = reduction_iso(&g, &s, &gp, &sp, j, limits)?;
        check!(
            failures,
            case,
            g.j_compose(j, &id_m, &found)? == gp,
            "reduction_iso at leg {j} does not relate the factorizations"
        );
    }
    // j-composition associativity and interchange.
    if arity >= 2 {
        let span = f.canonical_span();
        let j = rng.gen_range(0..arity);
        let s = random_mono_span(rng, span.legs[j].target);
        let fs = f.j_compose(j, &s.0, &s.1)?;
        let sp = random_mono_span(rng, s.1.target);
        let lhs = fs.j_compose(j, &sp.0, &sp.1)?;
        let ss = star2(&s, &sp);
        check!(
            failures,
            case,
            lhs == f.j_compose(j, &ss.0, &ss.1)?,
            "associativity of *_{j} failed"
        );
        let k = (j + 1) % arity;
        let s2 = random_mono_span(rng, span.legs[k].target);
        let a = f.j_compose(j, &s.0, &s.1)?.j_compose(k, &s2.0, &s2.1)?;
        let b = f.j_compose(k, &s2.0, &s2.1)?.j_compose(j, &s.0, &s.1)?;
        check!(failures, case, a == b, "interchange of *_{j} and *_{k} failed");
    }
    // Full 3-ary factorization on a sample of cases.
    if arity == 3 && case % 4 == 0 {
        let (f1, _) = f.reduce(0)?;
        let (g, s, t) = tri_factor(&f1)?;
        for i in 0..3 {
            check!(failures, case, g.is_j_reduced(i)?, "tri_factor output not {i}-reduced");
        }
        let rebuilt = g
            .j_compose(1, &s.s1, &s.s2)?
            .j_compose(2, &t.s1, &t.s2)?;
        check!(failures, case, rebuilt == f1, "tri_factor roundtrip failed");
    }
    Ok(())
}
