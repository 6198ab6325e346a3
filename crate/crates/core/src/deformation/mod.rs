//! Maurer–Cartan elements with coefficients in graded Artin algebras, gauge
//! fixing, the Kuranishi ring and the framed product pro-representing the
//! framed deformation functor.

pub mod brute;
pub mod gauge;
pub mod kuranishi;
pub mod tensor;

pub use brute::{brute_force_iso_classes, compare_kuranishi, compare_product, compare_with_ring, BruteForce, FunctorComparison};
pub use gauge::{compose, exp_ad, g_bracket, gauge_act, gauge_fix, l_bracket, mc_defect, GaugeElement, MCElement};
pub use kuranishi::{
    ambiguity_act, kuranishi, preferred_gm_product, presentation_is_bigraded, AmbiguityResult, GmProduct, Kuranishi,
};
pub use tensor::{bch, tensor_bracket, Tensor};

use thiserror::Error;

use crate::artin::ArtinError;
use crate::dgla::DglaError;

#[derive(Debug, Error)]
pub enum DeformationError {
    #[error("shape mismatch for {0}")]
    Shape(&'static str),
    #[error("{0} has a component outside the maximal ideal")]
    NotInMaxIdeal(&'static str),
    #[error("BCH series is only implemented through order 4, algebra has order {0}")]
    BchOrder(usize),
    #[error("brute-force enumeration needs m³ = 0, got order {0}")]
    BruteOrder(usize),
    #[error("framed element without an augmentation")]
    MissingAugmentation,
    #[error("framed element but the splitting has no δ_g")]
    MissingDeltaG,
    #[error("gauge fixing did not converge in {0} steps")]
    NoConvergence(usize),
    #[error("splitting fails its identities")]
    BadSplitting,
    #[error("augmentation is not injective on H⁰")]
    NotInjective,
    #[error("grading: {0}")]
    Grading(String),
    #[error("universal element has nonzero MC defect")]
    ResidualDefect,
    #[error("gauge element is not in L⁰ ⊗ m²")]
    NotInM2,
    #[error("gauge element does not lie in H⁰ ⊗ m")]
    NotInH0,
    #[error(transparent)]
    Artin(#[from] ArtinError),
    #[error(transparent)]
    Dgla(#[from] DglaError),
}

#[cfg(test)]
mod tests;
