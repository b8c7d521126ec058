//! j-composition, reduction, and the factorization theorems.

use crate::span::{MinusSpan, NRelation, NSpan};
use crate::RelError;
use regular_backend::{
    automorphisms, product, product_many, pullback, pushout_of_surjections, tuple_many, Limits,
    RMorphism,
};

/// The j-composition `f *_j s` of a span with a 2-ary span `s = (s1, s2)`:
/// leg `j` is replaced by `s2 ∘ (pullback of f_j along s1)`.  Indices are
/// 0-based.
pub fn j_compose_span(
    f: &NSpan,
    j: usize,
    s1: &RMorphism,
    s2: &RMorphism,
) -> Result<NSpan, RelError> {
    if j >= f.arity() {
        return Err(RelError::IndexOutOfRange {
            index: j,
            arity: f.arity(),
        });
    }
    assert_eq!(s1.source, s2.source, "the span s must have a common source");
    if f.legs[j].target != s1.target {
        return Err(RelError::TargetMismatch);
    }
    let (p, a, b) = pullback(&f.legs[j], s1).map_err(RelError::Backend)?;
    let mut legs = Vec::with_capacity(f.arity());
    for (i, leg) in f.legs.iter().enumerate() {
        if i == j {
            legs.push(RMorphism::compose(s2, &b));
        } else {
            legs.push(RMorphism::compose(leg, &a));
        }
    }
    Ok(NSpan::new(p, legs))
}

/// `x *₂ y` on 2-ary spans (composition of spans over the shared middle).
pub fn star2(x: &(RMorphism, RMorphism), y: &(RMorphism, RMorphism)) -> (RMorphism, RMorphism) {
    assert_eq!(x.1.target, y.0.target, "spans not composable over the middle");
    let (_, a, b) = pullback(&x.1, &y.0).expect("same backend");
    (
        RMorphism::compose(&x.0, &a),
        RMorphism::compose(&y.1, &b),
    )
}

/// The product morphism `f × g` between the products of sources and targets.
pub fn mor_product(f: &RMorphism, g: &RMorphism) -> RMorphism {
    let (_, p1, p2) = product(f.source, g.source).expect("same backend");
    tuple_many(&[RMorphism::compose(f, &p1), RMorphism::compose(g, &p2)])
}

impl NRelation {
    /// j-composition at the level of relations; `s2` must be injective for
    /// the result to be a relation again.
    pub fn j_compose(
        &self,
        j: usize,
        s1: &RMorphism,
        s2: &RMorphism,
    ) -> Result<NRelation, RelError> {
        let span = j_compose_span(&self.canonical_span(), j, s1, s2)?;
        NRelation::from_span(&span)
    }

    /// Reduction at leg `j` (0-based): produces a `j`-reduced relation `g`
    /// and a span `s ∈ S⁻` with `f = g *_j s`.  Built from the image
    /// factorizations of the two σ_j-components and the Mal'cev bicartesian
    /// square of their coimages.
    pub fn reduce(&self, j: usize) -> Result<(NRelation, MinusSpan), RelError> {
        let span = self.canonical_span();
        let n = span.arity();
        if j >= n {
            return Err(RelError::IndexOutOfRange { index: j, arity: n });
        }
        // σ_j components: c = the remaining legs bundled, d = leg j.
        let rest: Vec<RMorphism> = span
            .legs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, f)| f.clone())
            .collect();
        let c = if rest.is_empty() {
            RMorphism::identity(span.source)
        } else {
            tuple_many(&rest)
        };
        let d = span.legs[j].clone();
        let (coim_c, im_c) = c.image_factorization();
        let (coim_d, im_d) = d.image_factorization();
        let (_, g1, g2) =
            pushout_of_surjections(&coim_c, &coim_d).map_err(RelError::Backend)?;
        // Unflatten: legs of g are the components of im_c plus g1 at slot j.
        let rest_targets: Vec<_> = rest.iter().map(|f| f.target).collect();
        let mut g_legs = Vec::with_capacity(n);
        if rest.is_empty() {
            g_legs.push(g1);
        } else {
            let (_, projections) = product_many(span.source.backend, &rest_targets)
                .expect("targets share the backend");
            let mut projections = projections.into_iter();
            for i in 0..n {
                if i == j {
                    g_legs.push(g1.clone());
                } else {
                    let p = projections.next().expect("one projection per remaining leg");
                    g_legs.push(RMorphism::compose(&p, &im_c));
                }
            }
        }
        let g = NRelation::from_span(&NSpan::new(im_c.source, g_legs))?;
        let s = MinusSpan::new(g2, im_d);
        Ok((g, s))
    }
}

/// Searches for the isomorphism α relating two j-reductions of the same
/// relation: `g' = g *_j σ₁(α)` and `s' = σ₁(α⁻¹) *₂ s`.  The search is
/// exhaustive over the (finite) isomorphisms between the middle objects.
pub fn reduction_iso(
    g: &NRelation,
    s: &MinusSpan,
    gp: &NRelation,
    sp: &MinusSpan,
    j: usize,
    limits: &Limits,
) -> Result<RMorphism, RelError> {
    let f = g.j_compose(j, &s.s1, &s.s2)?;
    let fp = gp.j_compose(j, &sp.s1, &sp.s2)?;
    if f != fp {
        return Err(RelError::NotEqualComposites);
    }
    let m = g.targets[j];
    let mp = gp.targets[j];
    if m.n != mp.n {
        return Err(RelError::NoIsoFound);
    }
    // Canonical objects: same size means the same object, so isomorphisms
    // m → m' are exactly the automorphisms.
    for alpha in automorphisms(m, limits).map_err(RelError::Backend)? {
        let id_m = RMorphism::identity(m);
        if g.j_compose(j, &id_m, &alpha)? != *gp {
            continue;
        }
        let alpha_inv = alpha.inverse().expect("automorphisms are invertible");
        let twisted = star2(
            &(RMorphism::identity(mp), alpha_inv),
            &(s.s1.clone(), s.s2.clone()),
        );
        let twisted = MinusSpan::new(twisted.0, twisted.1);
        if twisted.as_relation() == sp.as_relation() {
            return Ok(alpha);
        }
    }
    Err(RelError::NoIsoFound)
}

/// Factors a 1-reduced 3-ary relation as `f = (g *₂ s) *₃ t` with `g`
/// i-reduced for i = 1, 2, 3 (0-based indices 0, 1, 2).
pub fn tri_factor(f: &NRelation) -> Result<(NRelation, MinusSpan, MinusSpan), RelError> {
    if f.arity() != 3 || !f.is_j_reduced(0)? {
        return Err(RelError::NotOneReduced);
    }
    let (g_mid, s) = f.reduce(1)?;
    let (g, t) = g_mid.reduce(2)?;
    Ok((g, s, t))
}

/// All 3-ary relations with the given targets that are i-reduced for every
/// i, in canonical subobject order.
pub fn enumerate_fully_reduced_3ary(
    x: regular_backend::RObject,
    y: regular_backend::RObject,
    z: regular_backend::RObject,
    limits: &Limits,
) -> Result<Vec<NRelation>, RelError> {
    let (p, _) = product_many(x.backend, &[x, y, z]).map_err(RelError::Backend)?;
    let subs = regular_backend::enumerate_subobjects(p, limits).map_err(RelError::Backend)?;
    let mut out = Vec::new();
    for sub in subs {
        let rel = NRelation::from_subobject(vec![x, y, z], sub);
        if (0..3).all(|i| rel.is_j_reduced(i).unwrap()) {
            out.push(rel);
        }
    }
    Ok(out)
}
