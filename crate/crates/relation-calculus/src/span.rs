//! n-ary spans and relations.
//!
//! An n-ary span is a tuple of morphisms with a common source; it is
//! jointly injective when the induced morphism into the product of targets
//! is injective.  An n-ary relation is an isomorphism class of jointly
//! injective spans, represented canonically by the subobject of the product
//! that the induced monomorphism carves out.

use crate::RelError;
use regular_backend::{
    product_many, to_terminal, tuple_many, RMorphism, RObject, SubobjectCanon,
};

/// An n-ary span: `legs[i] : source → targets[i]`.  The source is stored
/// explicitly so that 0-ary spans are representable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSpan {
    pub source: RObject,
    pub legs: Vec<RMorphism>,
}

impl NSpan {
    pub fn new(source: RObject, legs: Vec<RMorphism>) -> NSpan {
        assert!(
            legs.iter().all(|f| f.source == source),
            "all legs of a span must share the source"
        );
        NSpan { source, legs }
    }

    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    pub fn targets(&self) -> Vec<RObject> {
        self.legs.iter().map(|f| f.target).collect()
    }

    /// The induced morphism `S(f) → T(f_1)×⋯×T(f_n)` (into the terminal
    /// object for a 0-ary span).
    pub fn induced(&self) -> RMorphism {
        if self.legs.is_empty() {
            to_terminal(self.source)
        } else {
            tuple_many(&self.legs)
        }
    }

    pub fn is_jointly_injective(&self) -> bool {
        self.induced().is_injective()
    }
}

/// An n-ary relation: the canonical subobject of the product of the targets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NRelation {
    pub targets: Vec<RObject>,
    pub sub: SubobjectCanon,
}

impl NRelation {
    /// Canonicalizes a jointly injective span.
    pub fn from_span(span: &NSpan) -> Result<NRelation, RelError> {
        if !span.is_jointly_injective() {
            return Err(RelError::NotJointlyInjective);
        }
        Ok(NRelation {
            targets: span.targets(),
            sub: SubobjectCanon::from_image(&span.induced()),
        })
    }

    /// Builds a relation directly from a subobject of the product of the
    /// given targets.
    pub fn from_subobject(targets: Vec<RObject>, sub: SubobjectCanon) -> NRelation {
        let backend = sub.ambient.backend;
        let (p, _) = product_many(backend, &targets).expect("targets share the backend");
        assert_eq!(sub.ambient, p, "subobject ambient must be the product of the targets");
        NRelation { targets, sub }
    }

    pub fn arity(&self) -> usize {
        self.targets.len()
    }

    /// The canonical representative span: the canonical monomorphism into
    /// the product followed by the projections.
    pub fn canonical_span(&self) -> NSpan {
        let mono = self.sub.canonical_mono();
        let backend = self.sub.ambient.backend;
        let (_, projections) =
            product_many(backend, &self.targets).expect("targets share the backend");
        let legs = projections
            .iter()
            .map(|p| RMorphism::compose(p, &mono))
            .collect();
        NSpan::new(mono.source, legs)
    }

    /// `j`-reducedness: the j-th leg is surjective and the remaining legs
    /// are jointly injective (vacuously so for 1-ary spans, matching the
    /// convention σ₁(f) = (id, f)).
    pub fn is_j_reduced(&self, j: usize) -> Result<bool, RelError> {
        let span = self.canonical_span();
        if j >= span.arity() {
            return Err(RelError::IndexOutOfRange {
                index: j,
                arity: span.arity(),
            });
        }
        if !span.legs[j].is_surjective() {
            return Ok(false);
        }
        if span.arity() == 1 {
            return Ok(true);
        }
        let rest: Vec<RMorphism> = span
            .legs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, f)| f.clone())
            .collect();
        Ok(NSpan::new(span.source, rest).is_jointly_injective())
    }
}

/// A span in S⁻: first leg surjective, second leg injective.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinusSpan {
    pub s1: RMorphism,
    pub s2: RMorphism,
}

impl MinusSpan {
    pub fn new(s1: RMorphism, s2: RMorphism) -> MinusSpan {
        assert_eq!(s1.source, s2.source, "span legs must share the source");
        assert!(s1.is_surjective(), "S⁻ spans have a surjective first leg");
        assert!(s2.is_injective(), "S⁻ spans have an injective second leg");
        MinusSpan { s1, s2 }
    }

    pub fn identity(x: RObject) -> MinusSpan {
        MinusSpan::new(RMorphism::identity(x), RMorphism::identity(x))
    }

    /// A span with an injective second leg is jointly injective, so it has
    /// a canonical 2-ary relation class; used for iso-invariant equality.
    pub fn as_relation(&self) -> NRelation {
        let span = NSpan::new(self.s1.source, vec![self.s1.clone(), self.s2.clone()]);
        NRelation::from_span(&span).expect("injective second leg implies joint injectivity")
    }
}
