//! Morphisms of the linearized relation category: finite scalar-linear
//! combinations of relations, with composition by pullback + degree
//! evaluation, tensor product, and the rigid symmetric structure.

use crate::DiagError;
use regular_backend::{
    degree, product, to_terminal, tuple_many, Backend, RMorphism, RObject, SubobjectCanon,
};
use relation_calculus::{NRelation, NSpan};
use scalar_field::Scalar;
use std::collections::BTreeMap;

/// A relation `R ⊂ X×Y`, used as a basis morphism `[X] → [Y]`.  The
/// underlying data is a 2-ary canonical relation with targets `[X, Y]`.
pub type Relation = NRelation;

/// Source object of a relation viewed as a morphism.
pub fn rel_source(r: &Relation) -> RObject {
    assert_eq!(r.arity(), 2, "basis morphisms are 2-ary relations");
    r.targets[0]
}

/// Target object of a relation viewed as a morphism.
pub fn rel_target(r: &Relation) -> RObject {
    assert_eq!(r.arity(), 2, "basis morphisms are 2-ary relations");
    r.targets[1]
}

/// The diagonal relation `Δ_X ⊂ X×X`.
pub fn diagonal(x: RObject) -> Relation {
    let id = RMorphism::identity(x);
    NRelation::from_span(&NSpan::new(x, vec![id.clone(), id]))
        .expect("the diagonal span is jointly injective")
}

/// Composes two basis relations: with `f : R₁×_Y R₂ → X×Z`, the result is
/// `δ(coim f) · im f`.
pub fn compose_relations(
    r2: &Relation,
    r1: &Relation,
    u: &Scalar,
) -> Result<(Scalar, Relation), DiagError> {
    if rel_target(r1) != rel_source(r2) {
        return Err(DiagError::ObjectMismatch);
    }
    let s1 = r1.canonical_span();
    let s2 = r2.canonical_span();
    let (_, pa, pb) = regular_backend::pullback(&s1.legs[1], &s2.legs[0])?;
    let h = tuple_many(&[
        RMorphism::compose(&s1.legs[0], &pa),
        RMorphism::compose(&s2.legs[1], &pb),
    ]);
    let (coim, _) = h.image_factorization();
    let scalar = degree(&coim, u)?;
    let rel = NRelation::from_subobject(
        vec![rel_source(r1), rel_target(r2)],
        SubobjectCanon::from_image(&h),
    );
    Ok((scalar, rel))
}

/// The tensor product of basis relations: the product of subobjects, with
/// coordinates ordered `X₁ X₂ Y₁ Y₂` for `R₁ ⊂ X₁×Y₁` and `R₂ ⊂ X₂×Y₂`.
pub fn tensor_relations(r1: &Relation, r2: &Relation) -> Result<Relation, DiagError> {
    if rel_source(r1).backend != rel_source(r2).backend {
        return Err(DiagError::BackendMismatch);
    }
    let s1 = r1.canonical_span();
    let s2 = r2.canonical_span();
    let leg_x = relation_calculus::mor_product(&s1.legs[0], &s2.legs[0]);
    let leg_y = relation_calculus::mor_product(&s1.legs[1], &s2.legs[1]);
    let span = NSpan::new(leg_x.source, vec![leg_x, leg_y]);
    NRelation::from_span(&span).map_err(|_| DiagError::BackendMismatch)
}

/// The tensor product of objects: the product in the backend.
pub fn tensor_objects(x: RObject, y: RObject) -> RObject {
    assert_eq!(x.backend, y.backend, "tensor requires a common backend");
    let (p, _, _) = product(x, y).expect("same backend");
    p
}

/// A finite scalar-linear combination of relations `[X] → [Y]`.  Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagMorphism {
    pub source: RObject,
    pub target: RObject,
    terms: BTreeMap<Relation, Scalar>,
}

impl DiagMorphism {
    pub fn zero(source: RObject, target: RObject) -> DiagMorphism {
        DiagMorphism {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Relation, Scalar)>>(
        source: RObject,
        target: RObject,
        terms: I,
    ) -> DiagMorphism {
        let mut m = DiagMorphism::zero(source, target);
        for (r, c) in terms {
            m.add_term(r, c);
        }
        m
    }

    pub fn from_relation(r: Relation) -> DiagMorphism {
        let (s, t) = (rel_source(&r), rel_target(&r));
        DiagMorphism::from_terms(s, t, [(r, Scalar::one())])
    }

    /// The identity `Δ_X` on `[X]`.
    pub fn identity(x: RObject) -> DiagMorphism {
        DiagMorphism::from_relation(diagonal(x))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Relation, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, r: &Relation) -> Scalar {
        self.terms.get(r).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, r: Relation, c: Scalar) {
        assert_eq!(rel_source(&r), self.source, "term source mismatch");
        assert_eq!(rel_target(&r), self.target, "term target mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(r);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &DiagMorphism) -> DiagMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mut out = self.clone();
        for (r, c) in other.terms() {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DiagMorphism {
        DiagMorphism::from_terms(
            self.source,
            self.target,
            self.terms().map(|(r, a)| (r.clone(), a * c)),
        )
    }

    pub fn neg(&self) -> DiagMorphism {
        self.scale(&-&Scalar::one())
    }

    pub fn sub(&self, other: &DiagMorphism) -> DiagMorphism {
        self.add(&other.neg())
    }

    /// Bilinear composition `self ∘ other` with degree parameter `u`.
    pub fn compose(&self, other: &DiagMorphism, u: &Scalar) -> Result<DiagMorphism, DiagError> {
        if other.target != self.source {
            return Err(DiagError::ObjectMismatch);
        }
        let mut out = DiagMorphism::zero(other.source, self.target);
        for (r1, c1) in other.terms() {
            for (r2, c2) in self.terms() {
                let (d, rel) = compose_relations(r2, r1, u)?;
                out.add_term(rel, &(c1 * c2) * &d);
            }
        }
        Ok(out)
    }

    /// Bilinear tensor product.
    pub fn tensor(&self, other: &DiagMorphism) -> Result<DiagMorphism, DiagError> {
        if self.source.backend != other.source.backend {
            return Err(DiagError::BackendMismatch);
        }
        let mut out = DiagMorphism::zero(
            tensor_objects(self.source, other.source),
            tensor_objects(self.target, other.target),
        );
        for (r1, c1) in self.terms() {
            for (r2, c2) in other.terms() {
                out.add_term(tensor_relations(r1, r2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Specializes every coefficient at a rational value of the parameter.
    pub fn specialize(&self, value: &num::BigRational) -> Result<DiagMorphism, DiagError> {
        let mut out = DiagMorphism::zero(self.source, self.target);
        for (r, c) in self.terms() {
            out.add_term(r.clone(), c.specialize(value)?);
        }
        Ok(out)
    }
}

/// The swap morphism `X×Y → Y×X` in the backend.
fn swap_morphism(x: RObject, y: RObject) -> RMorphism {
    let (_, p1, p2) = product(x, y).expect("same backend");
    tuple_many(&[p2, p1])
}

/// The braiding `[X]⊗[Y] → [Y]⊗[X]`: the graph of the swap.
pub fn braiding(x: RObject, y: RObject) -> DiagMorphism {
    let (p, _, _) = product(x, y).expect("same backend");
    let span = NSpan::new(p, vec![RMorphism::identity(p), swap_morphism(x, y)]);
    DiagMorphism::from_relation(NRelation::from_span(&span).expect("graph spans are relations"))
}

/// The coevaluation `cup(X) : 1 → [X]⊗[X]`: the diagonal viewed in
/// `Rel_{*, X×X}`.
pub fn cup(x: RObject) -> DiagMorphism {
    let diag = tuple_many(&[RMorphism::identity(x), RMorphism::identity(x)]);
    let span = NSpan::new(x, vec![to_terminal(x), diag]);
    DiagMorphism::from_relation(
        NRelation::from_span(&span).expect("the diagonal leg is injective"),
    )
}

/// The evaluation `cap(X) : [X]⊗[X] → 1`: the diagonal viewed in
/// `Rel_{X×X, *}`.
pub fn cap(x: RObject) -> DiagMorphism {
    let diag = tuple_many(&[RMorphism::identity(x), RMorphism::identity(x)]);
    let span = NSpan::new(x, vec![diag, to_terminal(x)]);
    DiagMorphism::from_relation(
        NRelation::from_span(&span).expect("the diagonal leg is injective"),
    )
}

/// The duality functor on basis relations: the same subobject of `X×Y`,
/// reindexed as a subobject of `Y×X`, giving `Rel_{Y,X}`.
pub fn transpose_relation(r: &Relation) -> Relation {
    let span = r.canonical_span();
    let flipped = NSpan::new(span.source, vec![span.legs[1].clone(), span.legs[0].clone()]);
    NRelation::from_span(&flipped).expect("transposed relation spans are jointly injective")
}

/// Linear extension of the duality functor (identity on coefficients).
pub fn transpose(m: &DiagMorphism) -> DiagMorphism {
    DiagMorphism::from_terms(
        m.target,
        m.source,
        m.terms().map(|(r, c)| (transpose_relation(r), c.clone())),
    )
}

/// Basis of `Hom([X],[Y])`: all relations, in canonical subobject order.
pub fn hom_basis(
    x: RObject,
    y: RObject,
    limits: &regular_backend::Limits,
) -> Result<Vec<Relation>, DiagError> {
    let subs = regular_backend::enumerate_relations(x, y, limits)?;
    Ok(subs
        .into_iter()
        .map(|sub| NRelation::from_subobject(vec![x, y], sub))
        .collect())
}

/// The tensor unit object `[*]`.
pub fn unit_object(backend: Backend) -> RObject {
    backend.terminal()
}
