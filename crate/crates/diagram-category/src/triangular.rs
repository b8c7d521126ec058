//! The triangular (U/D) structure: classification of relations, core
//! decomposition, the subquotient order, and the axiom verifier.

use crate::morphism::{
    compose_relations, hom_basis, rel_target, Relation,
};
use crate::DiagError;
use regular_backend::{
    automorphisms, pushout_of_surjections, Backend, Limits, RMorphism, RObject,
};
use relation_calculus::{NRelation, NSpan};
use scalar_field::{Matrix, Scalar};

/// Classification of a relation with respect to the triangular structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangularClass {
    /// First leg surjective, second leg injective.
    U,
    /// First leg injective, second leg surjective.
    D,
    /// Both: the graph of an isomorphism.
    M,
    /// Neither.
    Generic,
}

pub fn classify(r: &Relation) -> TriangularClass {
    let span = r.canonical_span();
    let (l0, l1) = (&span.legs[0], &span.legs[1]);
    let is_u = l0.is_surjective() && l1.is_injective();
    let is_d = l0.is_injective() && l1.is_surjective();
    match (is_u, is_d) {
        (true, true) => TriangularClass::M,
        (true, false) => TriangularClass::U,
        (false, true) => TriangularClass::D,
        (false, false) => TriangularClass::Generic,
    }
}

/// Factors `h ∈ Rel_{X,Y}` as `h = f ∘ g` with `g ∈ D_Rel(X,Q)` and
/// `f ∈ U_Rel(Q,Y)`; the composition has degree coefficient exactly 1.
pub fn core_decompose(h: &Relation) -> Result<(Relation, Relation), DiagError> {
    let span = h.canonical_span();
    let (coim_x, im_x) = span.legs[0].image_factorization();
    let (coim_y, im_y) = span.legs[1].image_factorization();
    let (_, g1, g2) = pushout_of_surjections(&coim_x, &coim_y)?;
    let g = NRelation::from_span(&NSpan::new(im_x.source, vec![im_x.clone(), g1]))
        .expect("an injective leg makes the span jointly injective");
    let f = NRelation::from_span(&NSpan::new(im_y.source, vec![g2, im_y.clone()]))
        .expect("an injective leg makes the span jointly injective");
    Ok((g, f))
}

/// The subquotient order on object classes: `X ≤ Y` iff there is a span
/// `Y ↩ W ↠ X`.  For both backends this is equivalent to comparing sizes.
pub fn leq(x: RObject, y: RObject) -> bool {
    assert_eq!(x.backend, y.backend);
    x.n <= y.n
}

/// Exhaustive witness search for the span definition of `≤`, used to
/// validate `leq` at small sizes.
pub fn leq_by_span_search(x: RObject, y: RObject, limits: &Limits) -> Result<bool, DiagError> {
    let backend = x.backend;
    for w_size in 0..=y.n.max(x.n) {
        let w = backend.object(w_size);
        let intos = regular_backend::enumerate_morphisms(w, y, limits)?;
        if !intos.iter().any(|f| f.is_injective()) {
            continue;
        }
        let ontos = regular_backend::enumerate_morphisms(w, x, limits)?;
        if ontos.iter().any(|f| f.is_surjective()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All U-relations in `Rel_{X,Y}`.
pub fn u_relations(x: RObject, y: RObject, limits: &Limits) -> Result<Vec<Relation>, DiagError> {
    Ok(hom_basis(x, y, limits)?
        .into_iter()
        .filter(|r| matches!(classify(r), TriangularClass::U | TriangularClass::M))
        .collect())
}

/// All D-relations in `Rel_{X,Y}`.
pub fn d_relations(x: RObject, y: RObject, limits: &Limits) -> Result<Vec<Relation>, DiagError> {
    Ok(hom_basis(x, y, limits)?
        .into_iter()
        .filter(|r| matches!(classify(r), TriangularClass::D | TriangularClass::M))
        .collect())
}

/// The graph of a morphism `a : X → Y` as a relation in `Rel_{X,Y}`.
pub fn graph(a: &RMorphism) -> Relation {
    let span = NSpan::new(a.source, vec![RMorphism::identity(a.source), a.clone()]);
    NRelation::from_span(&span).expect("graphs are jointly injective")
}

/// Graphs of all automorphisms of `X`: the basis of `M(X)`.
pub fn aut_graphs(x: RObject, limits: &Limits) -> Result<Vec<Relation>, DiagError> {
    Ok(automorphisms(x, limits)?.iter().map(graph).collect())
}

/// One verified axiom in a [`TriangularReport`].
#[derive(Clone, Debug)]
pub struct AxiomResult {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Result of [`triangular_verify`].
#[derive(Clone, Debug)]
pub struct TriangularReport {
    pub results: Vec<AxiomResult>,
}

impl TriangularReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    fn push(&mut self, axiom: &str, passed: bool, witness: Option<String>) {
        self.results.push(AxiomResult {
            axiom: axiom.to_string(),
            passed,
            witness,
        });
    }
}

/// Verifies the triangular axioms (T1)–(T3) and the monoidal closure of U
/// and D on the truncation with object sizes `0..=n_cap`, with degree
/// parameter `u`.
pub fn triangular_verify(
    backend: Backend,
    n_cap: usize,
    u: &Scalar,
    limits: &Limits,
) -> Result<TriangularReport, DiagError> {
    let objects: Vec<RObject> = (0..=n_cap).map(|n| backend.object(n)).collect();
    let mut report = TriangularReport {
        results: Vec::new(),
    };

    // (T1): U(X,X) = D(X,X) = the group algebra of Aut(X), and that group
    // algebra is semisimple (trace form of full rank).
    for &x in &objects {
        let mut us = u_relations(x, x, limits)?;
        let mut ds = d_relations(x, x, limits)?;
        let mut auts = aut_graphs(x, limits)?;
        us.sort();
        ds.sort();
        auts.sort();
        let sets_match = us == auts && ds == auts;
        report.push(
            &format!("T1: U(X,X)=D(X,X)=kAut for size {}", x.n),
            sets_match,
            if sets_match {
                None
            } else {
                Some(format!("|U|={} |D|={} |Aut|={}", us.len(), ds.len(), auts.len()))
            },
        );
        let semisimple = group_algebra_semisimple(&auts, u)?;
        report.push(
            &format!("T1: kAut semisimple for size {}", x.n),
            semisimple,
            None,
        );
    }

    // (T2): Hom-vanishing against the order.
    let mut t2_ok = true;
    let mut t2_witness = None;
    for &x in &objects {
        for &y in &objects {
            if !u_relations(x, y, limits)?.is_empty() && !leq(x, y) {
                t2_ok = false;
                t2_witness = Some(format!("U({},{}) nonzero", x.n, y.n));
            }
            if !d_relations(x, y, limits)?.is_empty() && !leq(y, x) {
                t2_ok = false;
                t2_witness = Some(format!("D({},{}) nonzero", x.n, y.n));
            }
        }
    }
    report.push("T2: Hom-vanishing against the order", t2_ok, t2_witness);

    // (T3): for each pair (X,Z), the composites f∘g over Aut(Y)-orbit
    // representatives of D(X,Y)×U(Y,Z) form a basis of Hom([X],[Z]).
    for &x in &objects {
        for &z in &objects {
            let hom = hom_basis(x, z, limits)?;
            let mut produced: Vec<Relation> = Vec::new();
            let mut coeff_one = true;
            for &y in &objects {
                let ds = d_relations(x, y, limits)?;
                let us = u_relations(y, z, limits)?;
                let auts = aut_graphs(y, limits)?;
                let mut seen_orbits = std::collections::BTreeSet::new();
                for g in &ds {
                    for f in &us {
                        // Canonical orbit representative of (g,f) under the
                        // twist (m∘g, f∘m⁻¹).
                        let mut orbit_min: Option<(Relation, Relation)> = None;
                        for m in &auts {
                            let (c1, mg) = compose_relations(m, g, u)?;
                            let minv = invert_graph(m);
                            let (c2, fm) = compose_relations(f, &minv, u)?;
                            assert!(c1.is_one() && c2.is_one());
                            let pair = (mg, fm);
                            if orbit_min.as_ref().map_or(true, |best| pair < *best) {
                                orbit_min = Some(pair);
                            }
                        }
                        let key = orbit_min.expect("Aut contains the identity");
                        if !seen_orbits.insert(key) {
                            continue;
                        }
                        let (c, h) = compose_relations(f, g, u)?;
                        if !c.is_one() {
                            coeff_one = false;
                        }
                        produced.push(h);
                    }
                }
            }
            produced.sort();
            let distinct = produced.windows(2).all(|w| w[0] != w[1]);
            let mut hom_sorted = hom.clone();
            hom_sorted.sort();
            let passed = coeff_one && distinct && produced == hom_sorted;
            report.push(
                &format!("T3: composition basis for ({},{})", x.n, z.n),
                passed,
                if passed {
                    None
                } else {
                    Some(format!(
                        "produced {} composites (distinct: {distinct}, coeff 1: \
                         {coeff_one}) vs dim {}",
                        produced.len(),
                        hom.len()
                    ))
                },
            );
        }
    }

    // Monoidality: U and D are closed under composition and tensor.
    let mut closure_ok = true;
    let mut closure_witness = None;
    for &x in &objects {
        for &y in &objects {
            for &z in &objects {
                for r1 in u_relations(x, y, limits)? {
                    for r2 in u_relations(y, z, limits)? {
                        let (_, h) = compose_relations(&r2, &r1, u)?;
                        if !matches!(classify(&h), TriangularClass::U | TriangularClass::M) {
                            closure_ok = false;
                            closure_witness =
                                Some(format!("U∘U left U at sizes ({},{},{})", x.n, y.n, z.n));
                        }
                    }
                }
                for r1 in d_relations(x, y, limits)? {
                    for r2 in d_relations(y, z, limits)? {
                        let (_, h) = compose_relations(&r2, &r1, u)?;
                        if !matches!(classify(&h), TriangularClass::D | TriangularClass::M) {
                            closure_ok = false;
                            closure_witness =
                                Some(format!("D∘D left D at sizes ({},{},{})", x.n, y.n, z.n));
                        }
                    }
                }
            }
            for &x2 in &objects {
                for &y2 in &objects {
                    for r1 in u_relations(x, y, limits)? {
                        for r2 in u_relations(x2, y2, limits)? {
                            let h = crate::morphism::tensor_relations(&r1, &r2)?;
                            if !matches!(classify(&h), TriangularClass::U | TriangularClass::M) {
                                closure_ok = false;
                                closure_witness = Some(format!(
                                    "U⊗U left U at sizes ({},{})⊗({},{})",
                                    x.n, y.n, x2.n, y2.n
                                ));
                            }
                        }
                    }
                    for r1 in d_relations(x, y, limits)? {
                        for r2 in d_relations(x2, y2, limits)? {
                            let h = crate::morphism::tensor_relations(&r1, &r2)?;
                            if !matches!(classify(&h), TriangularClass::D | TriangularClass::M) {
                                closure_ok = false;
                                closure_witness = Some(format!(
                                    "D⊗D left D at sizes ({},{})⊗({},{})",
                                    x.n, y.n, x2.n, y2.n
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(
        "monoidality: U, D closed under ∘ and ⊗",
        closure_ok,
        closure_witness,
    );

    Ok(report)
}

/// Inverts the graph of an isomorphism.
fn invert_graph(m: &Relation) -> Relation {
    let span = m.canonical_span();
    // The span legs of an M-relation are both isomorphisms; the inverse
    // graph swaps them.
    NRelation::from_span(&NSpan::new(
        span.source,
        vec![span.legs[1].clone(), span.legs[0].clone()],
    ))
    .expect("isomorphism legs are jointly injective")
}

/// Semisimplicity of the span of the automorphism graphs via the trace
/// form of the left regular representation.
fn group_algebra_semisimple(auts: &[Relation], u: &Scalar) -> Result<bool, DiagError> {
    let n = auts.len();
    if n == 0 {
        return Ok(true);
    }
    let index = |r: &Relation| auts.iter().position(|s| s == r).expect("closed under ∘");
    // Left regular representation matrices.
    let mut reg: Vec<Vec<usize>> = Vec::with_capacity(n);
    for a in auts {
        let mut row = Vec::with_capacity(n);
        for b in auts {
            let (c, ab) = compose_relations(a, b, u)?;
            assert!(c.is_one(), "automorphism graphs compose with coefficient 1");
            row.push(index(&ab));
        }
        reg.push(row);
    }
    // Gram matrix of the trace form B(a,b) = tr(L_{ab}).
    let gram = Matrix::from_fn(n, n, |i, j| {
        let mut tr = 0usize;
        for k in 0..n {
            // L_{a_i a_j} maps e_k to e_{a_i (a_j k)}.
            if reg[i][reg[j][k]] == k {
                tr += 1;
            }
        }
        Scalar::from_integer(tr as i64)
    });
    Ok(gram.rank() == n)
}

/// Essential uniqueness of the core decomposition: exhibits an
/// M-isomorphism relating two U/D factorizations of the same relation.
pub fn core_uniqueness_iso(
    g: &Relation,
    f: &Relation,
    gp: &Relation,
    fp: &Relation,
    u: &Scalar,
    limits: &Limits,
) -> Result<Option<Relation>, DiagError> {
    let (c, h) = compose_relations(f, g, u)?;
    let (cp, hp) = compose_relations(fp, gp, u)?;
    if !c.is_one() || !cp.is_one() || h != hp {
        return Ok(None);
    }
    let y = rel_target(g);
    let yp = rel_target(gp);
    if y != yp {
        return Ok(None);
    }
    for m in aut_graphs(y, limits)? {
        let (c1, mg) = compose_relations(&m, gp, u)?;
        let minv = invert_graph(&m);
        let (c2, fm) = compose_relations(f, &minv, u)?;
        assert!(c1.is_one() && c2.is_one());
        if mg == *g && fm == *fp {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
