//! Filtered linear algebra for complex Hodge and mixed Hodge structures.

pub mod algebra;
pub mod filtration;
pub mod mhs;

pub use algebra::{check_obs_types, mhalg_assemble, mhs_on_orho, split_mhs_on_cone, MhalgReport, OrhoMhs, StrictnessWitness};
pub use filtration::{sym_product, Direction, Filtration};
pub use mhs::{
    check_mhs, check_mhs_polarized, check_pure_hs, check_unipotent, dual, hodge_pieces, is_positive_definite, graded_by_check,
    same_graded, sym_power, tensor, twist, GradedPiece, GradedByReport, MhsReport, PolarizationForm, PolarizationReport,
    PureHsReport, TripleFiltered,
};

use thiserror::Error;

use crate::artin::ArtinError;

#[derive(Debug, Error)]
pub enum HodgeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("filtration indices are not contiguous at {0}")]
    IndexGap(i32),
    #[error("filtration is not nested at index {0}")]
    NotNested(i32),
    #[error("W must be increasing and F, G decreasing")]
    WrongDirection,
    #[error("subspace is not contained in the ambient term")]
    NotContained,
    #[error("form is not hermitian")]
    NotHermitian,
    #[error("form is degenerate")]
    Degenerate,
    #[error("u − 1 does not lower W at weight {0}")]
    NotUnipotent(i32),
    #[error("algebra is not generated in degree one")]
    NotGeneratedInDegreeOne,
    #[error("supplied K differs from the kernel of μ²")]
    KernelMismatch,
    #[error("obstruction value [{a}, {b}] has a component {m} of the wrong type")]
    ObsNotTyped { a: usize, b: usize, m: usize },
    #[error("generator {0} has the wrong weight")]
    GeneratorType(usize),
    #[error("ideal is not homogeneous for the Hodge types")]
    IdealNotBigraded,
    #[error("ring map is not invertible")]
    NotAutomorphism,
    #[error(transparent)]
    Artin(#[from] ArtinError),
}

#[cfg(test)]
mod tests;
