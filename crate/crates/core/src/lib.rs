//! Casimir–Lifshitz forces between a sphere and a plate immersed in a fluid,
//! plus the electrostatic, double-layer and hydrodynamic estimates that go
//! with such measurements, and a Welch two-sample t-test.
//!
//! Units: SI at the library boundary for lengths, forces and temperatures;
//! dielectric models take photon energies in eV.

// `!(x > 0.0)` is how NaN gets rejected along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod constants;
pub mod corrections;
pub mod dielectric;
pub mod error;
pub mod lifshitz;
pub mod quadrature;
pub mod stats;

pub mod cli;

pub use error::{Error, Result};
