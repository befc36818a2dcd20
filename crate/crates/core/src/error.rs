//! Error taxonomy shared by all modules.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the numerical core.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("dimension product {rows}x{cols} overflows the addressable size")]
    SizeOverflow { rows: usize, cols: usize },

    #[error("matrix dimension {dim} exceeds the dense budget {budget}; reduce the site count")]
    SizeBudget { dim: usize, budget: usize },

    #[error("matrix is not Hermitian: relative deviation {deviation:.3e} exceeds {tol:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver residual {residual:.3e} exceeds {tol:.3e}")]
    EigResidual { residual: f64, tol: f64 },

    #[error(
        "interpolation nodes are ill-conditioned (estimate {estimate:.3e} > {max:.3e}); respace the nodes"
    )]
    IllConditioned { estimate: f64, max: f64 },

    #[error("fit residual {residual:.3e} exceeds {tol:.3e} of the sample scale")]
    FitResidual { residual: f64, tol: f64 },

    #[error(
        "leading polynomial coefficient {magnitude:.3e} below tolerance {tol:.3e}; degree is degenerate"
    )]
    DegenerateLeadingCoeff { magnitude: f64, tol: f64 },

    #[error("quadrature failed to reach tolerance {tol:.3e}; best estimate {best:.12e} (error ~{error:.3e})")]
    QuadratureNoConvergence { best: f64, error: f64, tol: f64 },

    #[error("invalid model parameters: {0}")]
    Parameter(String),

    #[error("evaluation at a pole: u = {at}")]
    Pole { at: Complex64 },

    #[error(
        "degenerate energy subspace of dimension {subspace_dim} unresolved after rotation (residual {residual:.3e})"
    )]
    DegeneracyUnresolved { subspace_dim: usize, residual: f64 },

    #[error("eigenvalue reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("leading-coefficient mismatch: expected {expected:.6e}, got {got:.6e} (rel {rel:.3e})")]
    LeadingCoeff { expected: f64, got: f64, rel: f64 },

    #[error("root extraction produced {got} roots, contract requires {expected}")]
    RootCount { expected: usize, got: usize },

    #[error("no regime template within tolerance {tol}; best candidate {best_label} at misfit {best_misfit:.3e}")]
    Unclassified {
        tol: f64,
        best_label: char,
        best_misfit: f64,
    },

    #[error("Fourier convention check failed: {0}")]
    Convention(String),

    #[error("outside the supported parameter domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
