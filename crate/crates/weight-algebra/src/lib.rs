//! Finite truncations of the linearized relation category as explicit
//! finite-dimensional algebras with highest-weight data: weight labels
//! from automorphism-group irreps, cell-realized standard and costandard
//! modules, Gram forms, decomposition matrices, projective covers with
//! standard filtrations, Ext groups, and the aggregate axiom verification.

mod hw;
mod irreps;
mod module;
mod projective;
mod truncated;

pub use hw::{
    decomposition_matrix, order_matrix, standard_filtration, verify_highest_weight,
    verify_p_delta, HwReport, PDeltaResult, WeightData,
};
pub use irreps::{aut_irreps, partitions, GroupRep, IrrepId};
pub use module::{hom_dim, hom_space, FdModule};
pub use projective::{
    ext_dim, left_ideal, projective_cover_of, resolve, LeftIdeal, ProjCover, ProjectiveData,
    Resolution,
};
pub use truncated::{
    build_algebra, label_lt, BasisRel, TruncatedAlgebra, WeightLabel, MAX_TRUNCATION_DIM,
};

use diagram_category::DiagError;
use regular_backend::BackendError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("truncation dimension {dim} exceeds the cap {cap}")]
    SizeLimitExceeded { dim: usize, cap: usize },
    #[error("unsupported automorphism group: {0}")]
    UnsupportedAutGroup(String),
    #[error("unknown weight label: {0}")]
    UnknownLabel(String),
    #[error("ground field does not split the algebra")]
    NonSplitField,
    #[error("no finite projective resolution within the term budget")]
    ResolutionNotFinite,
    #[error("highest-weight structure failure: {0}")]
    Structure(String),
    #[error(transparent)]
    Diagram(DiagError),
    #[error(transparent)]
    Backend(#[from] BackendError),
}

impl From<DiagError> for WeightError {
    fn from(e: DiagError) -> WeightError {
        match e {
            DiagError::NonSplitField => WeightError::NonSplitField,
            other => WeightError::Diagram(other),
        }
    }
}
