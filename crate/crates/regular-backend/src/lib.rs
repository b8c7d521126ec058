//! Two concrete subobject-finite exact regular Mal'cev categories, with the
//! categorical operations the relation calculus consumes.
//!
//! * `FinSetOp` — the opposite of finite sets.  Set-world data is stored
//!   directly and the epi/mono and limit/colimit roles are swapped, so the
//!   categorical product is a disjoint union of element sets and subobjects
//!   are set partitions of the ambient.
//! * `FinVecFq` — finite-dimensional vector spaces over a prime field F_q.
//!   Products are direct sums and subobjects are subspaces in reduced row
//!   echelon form.
//!
//! Both backends carry a built-in one-parameter degree function δ_u that is
//! multiplicative under composition of surjections, constant along
//! pullbacks, and sends identities to 1.

mod fq;
mod morphism;
mod object;
mod ops;
mod subobject;

pub use fq::FqMat;
pub use morphism::{
    enumerate_morphisms, product, product_many, to_terminal, tuple_many, MorData, RMorphism,
};
pub use object::{Backend, BackendError, Limits, RObject};
pub use ops::{automorphisms, degree, pullback, pushout_of_surjections};
pub use subobject::{enumerate_relations, enumerate_subobjects, SubData, SubobjectCanon};
