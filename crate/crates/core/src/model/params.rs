//! Model parameters.

use crate::error::{CoreError, Result};
use crate::numerics::C64;
use serde::{Deserialize, Serialize};

/// Physical parameters of the open spin-1 chain.
///
/// All parameters are real; that is what makes the Hamiltonian Hermitian.
/// `theta_bar` holds the imaginary parts of the inhomogeneities, i.e. the
/// regulators enter as theta_j = i * theta_bar_j and the physical point is
/// theta_bar = 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelParams {
    pub n_sites: usize,
    pub eta: f64,
    pub p_minus: f64,
    pub p_plus: f64,
    pub alpha_minus: f64,
    pub alpha_plus: f64,
    pub phi_minus: f64,
    pub phi_plus: f64,
    pub theta_bar: Vec<f64>,
}

impl ModelParams {
    pub fn new(
        n_sites: usize,
        eta: f64,
        p_minus: f64,
        p_plus: f64,
        alpha_minus: f64,
        alpha_plus: f64,
        phi_minus: f64,
        phi_plus: f64,
        theta_bar: Vec<f64>,
    ) -> Result<Self> {
        let p = Self {
            n_sites,
            eta,
            p_minus,
            p_plus,
            alpha_minus,
            alpha_plus,
            phi_minus,
            phi_plus,
            theta_bar,
        };
        p.validate()?;
        Ok(p)
    }

    /// Construct from the reduced boundary couplings p and q used throughout
    /// the root-pattern analysis: p = p_+/sqrt(1+alpha_+^2) - 1/2 and
    /// q = -p_-/sqrt(1+alpha_-^2) - 1/2, at eta = 1.
    pub fn from_pq(
        n_sites: usize,
        p: f64,
        q: f64,
        alpha_minus: f64,
        alpha_plus: f64,
        phi_minus: f64,
        phi_plus: f64,
    ) -> Result<Self> {
        let p_plus = (p + 0.5) * (1.0 + alpha_plus * alpha_plus).sqrt();
        let p_minus = -(q + 0.5) * (1.0 + alpha_minus * alpha_minus).sqrt();
        Self::new(
            n_sites,
            1.0,
            p_minus,
            p_plus,
            alpha_minus,
            alpha_plus,
            phi_minus,
            phi_plus,
            vec![0.0; n_sites],
        )
    }

    /// A generic parameter set for checks that only need valid couplings.
    pub fn example(n_sites: usize) -> Self {
        Self::from_pq(n_sites, 0.6, -0.2, 0.3, 0.2, 0.4, -0.7).unwrap()
    }

    fn validate(&self) -> Result<()> {
        if self.n_sites == 0 {
            return Err(CoreError::Parameter("need at least one site".into()));
        }
        if self.eta == 0.0 || !self.eta.is_finite() {
            return Err(CoreError::Parameter("crossing parameter must be nonzero".into()));
        }
        if self.theta_bar.len() != self.n_sites {
            return Err(CoreError::Parameter(format!(
                "theta_bar has {} entries for {} sites",
                self.theta_bar.len(),
                self.n_sites
            )));
        }
        let all = [
            self.p_minus,
            self.p_plus,
            self.alpha_minus,
            self.alpha_plus,
            self.phi_minus,
            self.phi_plus,
        ];
        if !all.iter().all(|x| x.is_finite()) || !self.theta_bar.iter().all(|x| x.is_finite()) {
            return Err(CoreError::Parameter("parameters must be finite".into()));
        }
        // Boundary denominators p_{+-}^2 - (1+alpha^2) eta^2/4 must not vanish.
        let eta2 = self.eta * self.eta;
        let dm = self.p_minus * self.p_minus
            - 0.25 * (1.0 + self.alpha_minus * self.alpha_minus) * eta2;
        let dp = self.p_plus * self.p_plus
            - 0.25 * (1.0 + self.alpha_plus * self.alpha_plus) * eta2;
        let scale = eta2.max(self.p_minus * self.p_minus).max(self.p_plus * self.p_plus);
        if dm.abs() < 1e-12 * scale || dp.abs() < 1e-12 * scale {
            return Err(CoreError::Parameter(
                "boundary denominator p^2 - (1+alpha^2) eta^2/4 vanishes".into(),
            ));
        }
        Ok(())
    }

    /// Reduced right-boundary coupling.
    pub fn p(&self) -> f64 {
        self.p_plus / (1.0 + self.alpha_plus * self.alpha_plus).sqrt() - 0.5
    }

    /// Reduced left-boundary coupling.
    pub fn q(&self) -> f64 {
        -self.p_minus / (1.0 + self.alpha_minus * self.alpha_minus).sqrt() - 0.5
    }

    /// Inhomogeneity theta_j = i * theta_bar_j (1-based site index).
    pub fn theta(&self, j: usize) -> C64 {
        C64::new(0.0, self.theta_bar[j - 1])
    }

    pub fn is_homogeneous(&self) -> bool {
        self.theta_bar.iter().all(|&t| t == 0.0)
    }

    /// Hilbert-space dimension 3^N.
    pub fn quantum_dim(&self) -> usize {
        3usize.pow(self.n_sites as u32)
    }

    /// Replace the inhomogeneities with the linear ramp
    /// theta_bar_j = slope * (j - (N+1)/2), a standard generic choice.
    pub fn with_theta_ramp(mut self, slope: f64) -> Self {
        let n = self.n_sites as f64;
        self.theta_bar = (1..=self.n_sites)
            .map(|j| slope * (j as f64 - 0.5 * (n + 1.0)))
            .collect();
        self
    }

    pub fn with_theta_bar(mut self, theta_bar: Vec<f64>) -> Self {
        assert_eq!(theta_bar.len(), self.n_sites);
        self.theta_bar = theta_bar;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_roundtrip() {
        let m = ModelParams::from_pq(4, 0.6, -0.2, 0.3, 0.2, 0.1, 0.2).unwrap();
        assert!((m.p() - 0.6).abs() < 1e-14);
        assert!((m.q() + 0.2).abs() < 1e-14);
    }

    #[test]
    fn singular_boundary_rejected() {
        // q = 0 makes p_-^2 = (1+alpha^2)/4 exactly
        assert!(ModelParams::from_pq(3, 0.6, 0.0, 0.3, 0.2, 0.0, 0.0).is_err());
        assert!(ModelParams::from_pq(3, 0.6, -1.0, 0.3, 0.2, 0.0, 0.0).is_err());
        assert!(ModelParams::from_pq(3, 0.6, -0.99, 0.3, 0.2, 0.0, 0.0).is_ok());
    }

    #[test]
    fn theta_is_imaginary() {
        let m = ModelParams::example(3).with_theta_ramp(0.1);
        assert!((m.theta(1).im - 0.1 * (1.0 - 2.0)).abs() < 1e-14);
        assert_eq!(m.theta(2).re, 0.0);
        assert!(!m.is_homogeneous());
    }
}
