//! Self-contained complex dense linear algebra and polynomial utilities.

pub mod cmatrix;
pub mod eig;
pub mod poly;
pub mod quad;

pub use cmatrix::{C64, ComplexMatrix, I, ONE, ZERO, axpy, inner, vec_norm};
pub use eig::{complex_eigenvalues, eig_hermitian};
pub use poly::{EvenPoly, canonical_pair_rep, even_poly_roots, fit_even_poly};
pub use quad::{fourier_line_integral, quad_semiinfinite};
