//! Quantum-determinant factor entering the fusion identity.

use super::params::ModelParams;
use crate::error::{CoreError, Result};
use crate::numerics::C64;

/// a^{(1)}(u) = -[(2u+2eta)/(2u+eta)] (sqrt(1+a_+^2) u + p_+)
///             (sqrt(1+a_-^2) u - p_-) prod_l (u + theta_l + 3eta/2)(u - theta_l + 3eta/2).
pub fn a1(u: C64, params: &ModelParams) -> Result<C64> {
    let eta = params.eta;
    let denom = 2.0 * u + eta;
    if denom.norm() < 1e-13 * eta.abs().max(1.0) {
        return Err(CoreError::Pole { at: u });
    }
    let sp = (1.0 + params.alpha_plus * params.alpha_plus).sqrt();
    let sm = (1.0 + params.alpha_minus * params.alpha_minus).sqrt();
    let mut val = -(2.0 * u + 2.0 * eta) / denom * (sp * u + params.p_plus) * (sm * u - params.p_minus);
    for j in 1..=params.n_sites {
        let th = params.theta(j);
        val *= (u + th + 1.5 * eta) * (u - th + 1.5 * eta);
    }
    Ok(val)
}

/// d^{(1)}(u) = a^{(1)}(-u - eta).
pub fn d1(u: C64, params: &ModelParams) -> Result<C64> {
    a1(-u - params.eta, params)
}

/// delta^{(1)}(u) = a^{(1)}(u) d^{(1)}(u - eta); poles at u = +/- eta/2.
pub fn delta1(u: C64, params: &ModelParams) -> Result<C64> {
    Ok(a1(u, params)? * d1(u - params.eta, params)?)
}
