//! Monoidal Ringel duality data for finite truncations: standard modules
//! resolved into an exceptional collection of labelled projective
//! complexes, the dual collection by mutation, indecomposable tilting
//! modules by universal extensions, and the Ringel dual algebra with its
//! highest-weight verification over the opposite order.

mod complex;
mod ctx;
mod dual;
mod homkb;
mod mutation;
mod tilting;

pub use complex::{AlgElem, ElemMat, ProjComplex};
pub use ctx::{resolve_standard, RingelCtx};
pub use dual::{cartan_matrix, duality_report, ringel_dual_algebra, DualityReport, RingelDual};
pub use homkb::{chain_map_basis, hom_kb, shift_range, ChainMap};
pub use mutation::{dual_collection, minimize, nabla_character, NablaCharacter};
pub use tilting::{endomorphism_algebra, tilting_module, TiltingModule};

use weight_algebra::WeightError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingelError {
    #[error("standard module has no finite projective resolution")]
    ResolutionNotFinite,
    #[error("mutation left hom({lambda}, {mu}[{shift}]) of dimension {dim}")]
    MutationFailed {
        lambda: String,
        mu: String,
        shift: i64,
        dim: usize,
    },
    #[error("universal extension step failed: {0}")]
    ExtensionStepFailed(String),
    #[error("structural failure: {0}")]
    Structure(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
}
