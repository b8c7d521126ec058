use monoidal_checks::*;
use regular_backend::{Backend, Limits};
use scalar_field::Scalar;

fn ctx(t: i64, n: usize) -> MonCtx {
    let u = Scalar::from_integer(t);
    MonCtx::new(Backend::FinSetOp, &u, n, &Limits::default()).unwrap()
}

#[test]
fn explore_oracle() {
    let sc = sym_characters(4).unwrap();
    println!("S4 partitions: {:?}", sc.partitions);
    for p in &sc.partitions {
        println!("  dim {:?} = {}", p, sc.dim(p).unwrap());
    }
    // g((2,1),(2,1),(2,1)) for S_3 should be 1.
    println!(
        "g(21,21,21) = {}",
        kronecker_coefficient(&[2, 1], &[2, 1], &[2, 1]).unwrap()
    );
    println!(
        "gbar(1),(1)->nu: (): {} (1): {} (2): {} (1,1): {}",
        reduced_kronecker(&[1], &[1], &[]).unwrap(),
        reduced_kronecker(&[1], &[1], &[1]).unwrap(),
        reduced_kronecker(&[1], &[1], &[2]).unwrap(),
        reduced_kronecker(&[1], &[1], &[1, 1]).unwrap(),
    );
}

#[test]
fn explore_unit_and_single() {
    let mc = ctx(2, 2);
    for l in 0..mc.n() {
        let kc = KarComplex::of_resolution(&mc, &mc.ys[l]).unwrap();
        let c = realize_complex(&mc, &kc).unwrap();
        let hs = cohomology(&c);
        let dims: Vec<_> = hs.iter().map(|(d, h)| (*d, h.dim)).collect();
        println!(
            "label {l}: term dims {:?}, H {:?}, dim Delta = {}",
            c.terms.iter().map(|t| t.dim).collect::<Vec<_>>(),
            dims,
            mc.rc.wd.standards[l].dim
        );
    }
}

#[test]
fn explore_delta_tor_t2() {
    let mc = ctx(2, 2);
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_delta_tor(&mc, l, m).unwrap();
            println!(
                "pair ({l},{m}): H {:?} mult {:?} wsum {} h0 {} prod {} passed {}",
                r.h_dims, r.multiplicities, r.weighted_sum, r.h0_dim, r.product_dim, r.passed
            );
        }
    }
}

fn gctx(n: usize) -> MonCtx {
    MonCtx::new(Backend::FinSetOp, &Scalar::t(), n, &Limits::default()).unwrap()
}

#[test]
fn explore_traces() {
    let mc = gctx(2);
    use diagram_category::{diagonal, DiagMorphism};
    for &x in mc.objects() {
        let mut id = DiagMorphism::zero(x, x);
        id.add_term(diagonal(x), Scalar::one());
        println!("tr(id_{:?}) = {}", x, morphism_trace(&id, mc.u()).unwrap());
    }
}

#[test]
fn explore_catalogue_t2() {
    let mc = ctx(2, 2);
    let cat = tilting_catalogue(&mc).unwrap();
    println!("h_dims = {:?}", cat.h_dims);
    println!("plain mults = {:?}", cat.plain_multiplicities);
    for (nu, g) in cat.objects.iter().enumerate() {
        println!("catdim G({nu}) = {}", categorical_dimension(g, mc.u()).unwrap());
    }
    let d = standard_dimensions(&mc, &cat).unwrap();
    println!("std dims: {:?}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_delta_tor(&mc, l, m).unwrap();
            let mult = r.multiplicities.clone().unwrap();
            let lhs = &d[l] * &d[m];
            let mut rhs = Scalar::zero();
            for (nu, &c) in mult.iter().enumerate() {
                rhs = &rhs + &(&Scalar::from_integer(c as i64) * &d[nu]);
            }
            println!("pair ({l},{m}): mult {:?} lhs {} rhs {} match {}", mult, lhs, rhs, lhs == rhs);
        }
    }
}

#[test]
fn explore_catalogue_generic() {
    let mc = gctx(2);
    let cat = tilting_catalogue(&mc).unwrap();
    println!("h_dims = {:?}", cat.h_dims);
    println!("plain mults = {:?}", cat.plain_multiplicities);
    let d = standard_dimensions(&mc, &cat).unwrap();
    println!("std dims: {:?}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>());
}

#[test]
fn explore_sum_match_t2_fixed() {
    let mc = ctx(2, 2);
    let cat = tilting_catalogue(&mc).unwrap();
    let d = standard_dimensions(&mc, &cat).unwrap();
    println!("std dims t2: {:?}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let sizes = [0usize, 1, 2, 2];
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_delta_tor(&mc, l, m).unwrap();
            let mult = r.multiplicities.clone().unwrap();
            let lhs = &d[l] * &d[m];
            let mut rhs = Scalar::zero();
            for (nu, &c) in mult.iter().enumerate() {
                rhs = &rhs + &(&Scalar::from_integer(c as i64) * &d[nu]);
            }
            println!(
                "pair ({l},{m}) in_range {} : mult {:?} lhs {} rhs {} match {}",
                sizes[l] + sizes[m] <= 2, mult, lhs, rhs, lhs == rhs
            );
        }
    }
}

#[test]
fn explore_y_and_x_t2() {
    let mc = ctx(2, 2);
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_y_tensor(&mc, l, m).unwrap();
            println!(
                "Y ({l},{m}): aisle {} clean {} charmult {:?} agree {}",
                r.in_co_aisle, r.char_clean, r.char_multiplicities, r.routes_agree
            );
        }
    }
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_x_tensor_via_duality(&mc, l, m).unwrap();
            println!(
                "X ({l},{m}): pre {} vanish {} table {:?}",
                r.preconditions.certified(), r.higher_vanish, r.hom_table
            );
        }
    }
}

#[test]
fn explore_witness_t6() {
    let g = gctx(2);
    let w = ctx(6, 2);
    println!("witness rad rows = {}", w.rc.pd.rad.nrows());
    let rep = generic_witness_report(&g, &w).unwrap();
    println!(
        "semisimple {} dims_match {} witness_passed {} certified {}",
        rep.witness_semisimple, rep.term_dims_match, rep.witness_passed, rep.certified
    );
    for r in &rep.witness_reports {
        println!("  pair {:?} mult {:?}", r.pair, r.char_multiplicities);
    }
}

#[test]
fn explore_gbar_oracle() {
    for (name, a, b) in [
        ("(1)x(2)", vec![1usize], vec![2usize]),
        ("(2)x(2)", vec![2], vec![2]),
        ("(2)x(1,1)", vec![2], vec![1, 1]),
        ("(1,1)x(1,1)", vec![1, 1], vec![1, 1]),
    ] {
        let nus: Vec<Vec<usize>> = vec![vec![], vec![1], vec![2], vec![1, 1]];
        let gs: Vec<String> = nus
            .iter()
            .map(|nu| reduced_kronecker(&a, &b, nu).unwrap().to_string())
            .collect();
        println!("{name}: in-range gbar = {:?}", gs);
    }
}

#[test]
fn explore_decompose_t2() {
    let mc = ctx(2, 2);
    let cat = tilting_catalogue(&mc).unwrap();
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = tilting_tensor_decompose(&mc, &cat, l, m).unwrap();
            println!(
                "({l},{m}): mult {:?} cert {} total {} rem {} conserved {} dim {} dimcons {} complete {}",
                r.multiplicities, r.summands_certified, r.h_dim_total, r.remainder_h_dim,
                r.conserved, r.dim_total, r.dim_conserved, r.complete
            );
        }
    }
}

#[test]
fn explore_decompose_t3() {
    let mc = ctx(3, 2);
    let cat = tilting_catalogue(&mc).unwrap();
    println!("t3 h_dims {:?} plain mults {:?}", cat.h_dims, cat.plain_multiplicities);
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let start = std::time::Instant::now();
            let r = tilting_tensor_decompose(&mc, &cat, l, m).unwrap();
            println!(
                "({l},{m}): mult {:?} cert {} total {} rem {} conserved {} dim {} dimcons {} complete {} [{:?}]",
                r.multiplicities, r.summands_certified, r.h_dim_total, r.remainder_h_dim,
                r.conserved, r.dim_total, r.dim_conserved, r.complete, start.elapsed()
            );
        }
    }
}

#[test]
fn explore_decompose_generic_sample() {
    let mc = gctx(2);
    let cat = tilting_catalogue(&mc).unwrap();
    for (l, m) in [(1usize, 1usize), (2, 2)] {
        let start = std::time::Instant::now();
        let r = tilting_tensor_decompose(&mc, &cat, l, m).unwrap();
        println!(
            "gen ({l},{m}): mult {:?} cert {} total {} rem {} conserved {} dim {} dimcons {} complete {} [{:?}]",
            r.multiplicities, r.summands_certified, r.h_dim_total, r.remainder_h_dim,
            r.conserved, r.dim_total, r.dim_conserved, r.complete, start.elapsed()
        );
    }
}

#[test]
fn explore_full_sum_match() {
    let mc = ctx(2, 2);
    let cat = tilting_catalogue(&mc).unwrap();
    let d = standard_dimensions(&mc, &cat).unwrap();
    for l in 0..mc.n() {
        for m in 0..mc.n() {
            let r = check_delta_tor(&mc, l, m).unwrap();
            let sm = sum_match(&mc, &d, &r.multiplicities.clone().unwrap(), l, m).unwrap();
            println!(
                "t2 ({l},{m}): prod {} sum {} mults {} dims {} matched {}",
                sm.product, sm.oracle_sum, sm.mults_match_oracle, sm.dims_match_oracle, sm.matched
            );
        }
    }
    let g = gctx(2);
    let gcat = tilting_catalogue(&g).unwrap();
    let gd = standard_dimensions(&g, &gcat).unwrap();
    let w = ctx(6, 2);
    for l in 0..g.n() {
        for m in 0..g.n() {
            let r = check_delta_tor(&w, l, m).unwrap();
            let sm = sum_match(&g, &gd, &r.multiplicities.clone().unwrap(), l, m).unwrap();
            println!(
                "gen ({l},{m}): prod {} sum {} matched {}",
                sm.product, sm.oracle_sum, sm.matched
            );
        }
    }
}

#[test]
fn explore_compose_bench() {
    use diagram_category::{compose_relations, hom_basis};
    let u = Scalar::from_integer(2);
    let limits = Limits::default();
    let x4 = Backend::FinSetOp.object(4);
    let rels = hom_basis(x4, x4, &limits).unwrap();
    println!("end([4]) basis: {}", rels.len());
    let start = std::time::Instant::now();
    let mut count = 0usize;
    for i in (0..rels.len()).step_by(37) {
        for j in (0..rels.len()).step_by(41) {
            let _ = compose_relations(&rels[i], &rels[j], &u).unwrap();
            count += 1;
        }
    }
    let el = start.elapsed();
    println!("{} composes in {:?} ({:?} each)", count, el, el / count as u32);
    let x2 = Backend::FinSetOp.object(2);
    let r42 = hom_basis(x4, x2, &limits).unwrap();
    let start = std::time::Instant::now();
    let mut count = 0usize;
    for i in (0..r42.len()).step_by(7) {
        for j in (0..rels.len()).step_by(13) {
            let _ = compose_relations(&r42[i], &rels[j], &u).unwrap();
            count += 1;
        }
    }
    let el = start.elapsed();
    println!("{} mixed composes in {:?} ({:?} each)", count, el, el / count as u32);
}
