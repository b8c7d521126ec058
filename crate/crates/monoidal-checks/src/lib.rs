//! Monoidal compatibility of the truncated highest-weight structure:
//! diagram-level tensor products of the standard resolutions as total
//! complexes, their realization as module complexes over the truncation,
//! the (ΔTor)/(Δ⊗)/(Y⊗)/(X⊗) verdicts with two independent routes, the
//! tilting tensor decomposition at integer parameters, and the abelian
//! envelope block criterion.

mod blocks;
mod ctx;
mod dimension;
mod karcomplex;
mod oracle;
mod realize;
mod tensor_checks;
mod tilting_tensor;

pub use blocks::{envelope_block_report, EnvelopeReport};
pub use ctx::MonCtx;
pub use dimension::{
    categorical_dimension, kar_trace, label_partition, morphism_trace, standard_dimensions,
    sum_match, SumMatchReport,
};
pub use karcomplex::{kar_tensor, KarComplex};
pub use oracle::{
    hook_dimension, kronecker_coefficient, padded, partitions_up_to, reduced_kronecker,
    stable_dim_at, sym_characters, SymCharacters,
};
pub use realize::{
    certify_projective_complex, cohomology, projective_replacement, projector_trace,
    realize_complex, realize_object, resolution_mod_complex, terms_projective, ModComplex,
    Realized,
};
pub use tensor_checks::{
    check_delta_tor, check_x_tensor_via_duality, check_y_tensor, generic_witness_report,
    tensor_complex, DualityPreconditions, GenericWitnessReport, TensorReport, XTensorReport,
    YTensorReport,
};
pub use tilting_tensor::{
    tilting_catalogue, tilting_tensor_decompose, TensorDecomposition, TiltingCatalogue,
};

use weight_algebra::WeightError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonError {
    #[error("realized term is not projective: {0}")]
    NotProjective(String),
    #[error("idempotent decomposition failed: {0}")]
    Decomposition(String),
    #[error("structural failure: {0}")]
    Structure(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Ringel(#[from] ringel_engine::RingelError),
    #[error(transparent)]
    Diagram(diagram_category::DiagError),
}

impl From<diagram_category::DiagError> for MonError {
    fn from(e: diagram_category::DiagError) -> MonError {
        MonError::Diagram(e)
    }
}
