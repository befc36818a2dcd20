//! Numerical laboratory for the isotropic spin-1 Heisenberg chain with
//! generic non-diagonal open boundaries.
//!
//! The crate builds the integrable structure of the model (R-matrices,
//! reflection matrices, transfer matrices), verifies the algebraic
//! identities they satisfy, extracts transfer-matrix zero roots at finite
//! size, classifies root configurations against the twelve ground-state
//! regimes, and evaluates the thermodynamic-limit densities and surface
//! energies both in closed form and by finite-size extrapolation.
//!
//! Layout:
//! - [`numerics`]: dense complex linear algebra, even polynomials, quadrature
//! - [`model`]: R/K/transfer matrices, the Hamiltonian, identity checks
//! - [`spectrum`]: diagonalization, eigenvalue reconstruction, zero roots
//! - [`patterns`]: regime templates, classification, Bethe-root residuals
//! - [`thermo`]: root densities, ground/surface energies, extrapolation

pub mod error;
pub mod model;
pub mod numerics;
pub mod patterns;
pub mod spectrum;
pub mod thermo;
pub mod tol;

pub use error::{CoreError, Result};
pub use numerics::{C64, ComplexMatrix, EvenPoly};
pub use tol::Tolerances;
