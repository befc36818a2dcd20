//! Centralized tolerances.
//!
//! Every threshold used by builders, verifiers, and the acceptance suite
//! lives here so a run can be tuned (or tightened) from a single record.
//! Values are grouped by origin: machine-precision checks on exact algebra,
//! method tolerances for iterative/fitted quantities, and looser physical
//! thresholds for finite-size comparisons.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Relative Frobenius deviation allowed by the Hermitian eigensolver precondition.
    pub hermitian_rel: f64,
    /// Eigen-decomposition reconstruction residual, relative to the input norm.
    pub eig_residual: f64,
    /// Algebraic identity residuals (Yang-Baxter, reflection equations, unitarity).
    pub identity_residual: f64,
    /// Transfer-matrix commutator residual, relative to the operand norms.
    pub commutator_rel: f64,
    /// Polynomial interpolation residual, relative to the largest sample value.
    pub fit_residual_rel: f64,
    /// Condition-number estimate above which a Vandermonde fit is rejected.
    pub condition_max: f64,
    /// Scaled polynomial evaluation residual allowed at an extracted root.
    pub root_eval_rel: f64,
    /// Magnitude below which a leading coefficient counts as degenerate.
    pub leading_coeff_floor: f64,
    /// Relative tolerance on the leading-coefficient contract of reconstructed eigenvalues.
    pub leading_coeff_rel: f64,
    /// Default absolute quadrature tolerance.
    pub quad_tol: f64,
    /// Residual below which a vector is accepted as a common transfer eigenstate.
    pub state_residual: f64,
    /// Residual above which a rotated degenerate subspace is reported unresolved.
    pub degeneracy_residual: f64,
    /// Energy gap under which two levels are treated as degenerate, relative to the spectral width.
    pub degeneracy_gap_rel: f64,
    /// Relative residual allowed on the fusion identity.
    pub fusion_rel: f64,
    /// Ground-state energy-from-roots agreement with exact diagonalization.
    pub energy_roots: f64,
    /// Bethe-equation log-residual ceiling at the homogeneous point.
    pub bae_residual: f64,
    /// Root-to-descriptor matching tolerance for regime classification.
    pub pattern_match: f64,
    /// Required ratio between the runner-up and best template misfits.
    pub misfit_ratio: f64,
    /// Fourier convention lock tolerance.
    pub fourier_check: f64,
    /// Agreement between the thermodynamic integral and the closed-form energy.
    pub closed_form: f64,
    /// Allowed drift of the ground-state energy when the free string position moves.
    pub zx_independence: f64,
    /// Relative deviation allowed between extrapolated and closed-form surface energies.
    pub extrapolation_rel: f64,
    /// Generic probe point u0 (in units of the crossing parameter) for state labeling.
    pub probe_point: f64,
    /// Largest dense operator dimension that will be materialized.
    pub dense_budget: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermitian_rel: 1e-10,
            eig_residual: 1e-10,
            identity_residual: 1e-10,
            commutator_rel: 1e-9,
            fit_residual_rel: 1e-8,
            condition_max: 1e12,
            root_eval_rel: 1e-6,
            leading_coeff_floor: 1e-8,
            leading_coeff_rel: 1e-6,
            quad_tol: 1e-10,
            state_residual: 1e-8,
            degeneracy_residual: 1e-6,
            degeneracy_gap_rel: 1e-9,
            fusion_rel: 1e-7,
            energy_roots: 1e-7,
            bae_residual: 1e-5,
            pattern_match: 0.15,
            misfit_ratio: 10.0,
            fourier_check: 1e-8,
            closed_form: 1e-6,
            zx_independence: 1e-8,
            extrapolation_rel: 0.05,
            probe_point: 0.37,
            dense_budget: 2187,
        }
    }
}

impl Tolerances {
    /// Set a tolerance by field name, as accepted on the command line.
    pub fn set_by_name(&mut self, name: &str, value: f64) -> Result<(), String> {
        match name {
            "hermitian_rel" => self.hermitian_rel = value,
            "eig_residual" => self.eig_residual = value,
            "identity_residual" => self.identity_residual = value,
            "commutator_rel" => self.commutator_rel = value,
            "fit_residual_rel" => self.fit_residual_rel = value,
            "condition_max" => self.condition_max = value,
            "root_eval_rel" => self.root_eval_rel = value,
            "leading_coeff_floor" => self.leading_coeff_floor = value,
            "leading_coeff_rel" => self.leading_coeff_rel = value,
            "quad_tol" => self.quad_tol = value,
            "state_residual" => self.state_residual = value,
            "degeneracy_residual" => self.degeneracy_residual = value,
            "degeneracy_gap_rel" => self.degeneracy_gap_rel = value,
            "fusion_rel" => self.fusion_rel = value,
            "energy_roots" => self.energy_roots = value,
            "bae_residual" => self.bae_residual = value,
            "pattern_match" => self.pattern_match = value,
            "misfit_ratio" => self.misfit_ratio = value,
            "fourier_check" => self.fourier_check = value,
            "closed_form" => self.closed_form = value,
            "zx_independence" => self.zx_independence = value,
            "extrapolation_rel" => self.extrapolation_rel = value,
            "probe_point" => self.probe_point = value,
            "dense_budget" => self.dense_budget = value as usize,
            _ => return Err(format!("unknown tolerance `{name}`")),
        }
        Ok(())
    }
}
