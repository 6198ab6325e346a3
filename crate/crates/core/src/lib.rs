//! Exact Goldman–Millson deformation theory at a variation of Hodge structure.
//!
//! Everything is computed over ℚ(i) with no floating point. The modules
//! build on each other bottom-up: [`linalg`] → [`artin`] → [`dgla`] →
//! [`deformation`] / [`hodge`] → [`mc_vmhs`], with [`group_cohomology`]
//! producing formal dglas from group presentations.

pub mod artin;
pub mod deformation;
pub mod dgla;
pub mod group_cohomology;
pub mod hodge;
pub mod linalg;
pub mod mc_vmhs;
