//! Shared context: the truncation, its highest-weight and homological
//! data, the standard resolutions, the dual collection, and the lift of
//! algebra elements to Karoubi morphisms.

use crate::MonError;
use diagram_category::{KarMorphism, KarObject};
use regular_backend::{Backend, Limits, RObject};
use ringel_engine::{dual_collection, resolve_standard, ProjComplex, RingelCtx};
use scalar_field::Scalar;
use weight_algebra::{build_algebra, TruncatedAlgebra, WeightData};

pub struct MonCtx {
    pub ta: TruncatedAlgebra,
    pub rc: RingelCtx,
    /// Minimal projective resolutions of the standard modules.
    pub ys: Vec<ProjComplex>,
    /// The dual collection, certified orthogonal to `ys`.
    pub xs: Vec<ProjComplex>,
    pub limits: Limits,
}

impl MonCtx {
    pub fn new(backend: Backend, u: &Scalar, n_cap: usize, limits: &Limits) -> Result<MonCtx, MonError> {
        let ta = build_algebra(backend, u, n_cap, limits)?;
        let wd = WeightData::from_truncation(&ta)?;
        let rc = RingelCtx::new(wd)?;
        let ys: Vec<ProjComplex> = (0..rc.n())
            .map(|l| resolve_standard(&rc, l))
            .collect::<Result<_, _>>()?;
        let xs = dual_collection(&rc, &ys)?;
        Ok(MonCtx {
            ta,
            rc,
            ys,
            xs,
            limits: limits.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.rc.n()
    }

    pub fn u(&self) -> &Scalar {
        &self.ta.u
    }

    pub fn objects(&self) -> &[RObject] {
        &self.ta.objects
    }

    /// An algebra element, in coordinates over the relation basis, as a
    /// morphism matrix on the formal sum of the truncation objects.
    pub fn elem_to_kar(&self, coords: &[Scalar]) -> KarMorphism {
        let objs = self.ta.objects.clone();
        let mut m = KarMorphism::zero(objs.clone(), objs);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = &self.ta.basis[k];
            m.entries[b.tgt][b.src].add_term(b.rel.clone(), c.clone());
        }
        m
    }

    /// The Karoubi object realizing `P(λ)`: the formal sum of all
    /// truncation objects cut down by the lifted idempotent `e_λ`.
    pub fn kar_projective(&self, l: usize) -> KarObject {
        let idem = self.elem_to_kar(&self.rc.pd.projectives[l].idem);
        KarObject {
            summands: self.ta.objects.clone(),
            idem,
        }
    }
}
