//! The open-chain Hamiltonian and its transfer-matrix cross-check.
//!
//! The direct form is the bilinear-biquadratic bulk
//! (1/eta) sum_j [ S_j.S_{j+1} - (S_j.S_{j+1})^2 ] plus the additive
//! constant (3N + 8/3)/eta and one boundary field on each end. The same
//! operator is generated by the logarithmic derivative of the spin-(1,1)
//! transfer matrix at the origin, which provides an independent numerical
//! oracle: H = t'(0) t(0)^{-1} at the homogeneous point.

use super::params::ModelParams;
use super::spin::SpinOperators;
use super::transfer::{TransferKind, transfer};
use crate::error::{CoreError, Result};
use crate::numerics::{C64, ComplexMatrix, ONE, ZERO};

/// Embed a single-site operator at `site` (1-based) into the N-site space.
fn embed_site(op: &ComplexMatrix, site: usize, n: usize) -> ComplexMatrix {
    let left = 3usize.pow((site - 1) as u32);
    let right = 3usize.pow((n - site) as u32);
    ComplexMatrix::identity(left)
        .kron(op)
        .unwrap()
        .kron(&ComplexMatrix::identity(right))
        .unwrap()
}

/// Embed a two-site operator on (site, site+1) into the N-site space.
fn embed_bond(op: &ComplexMatrix, site: usize, n: usize) -> ComplexMatrix {
    let left = 3usize.pow((site - 1) as u32);
    let right = 3usize.pow((n - site - 1) as u32);
    ComplexMatrix::identity(left)
        .kron(op)
        .unwrap()
        .kron(&ComplexMatrix::identity(right))
        .unwrap()
}

/// The bilinear-biquadratic bond operator S.S - (S.S)^2 on C^3 (x) C^3.
fn bond_operator() -> ComplexMatrix {
    let s = SpinOperators::spin1();
    let mut ss = ComplexMatrix::zeros(9, 9);
    for a in s.as_array() {
        ss = &ss + &a.kron(a).unwrap();
    }
    &ss - &(&ss * &ss)
}

/// Left boundary field on site 1 (excluding the 1/denominator prefactor).
fn boundary_field(
    s: &SpinOperators,
    p: f64,
    alpha: f64,
    phi: f64,
    eta: f64,
    right_end: bool,
) -> ComplexMatrix {
    // The two ends differ by the sign of the S^z coupling and of the
    // anticommutator terms involving S^z.
    let sz_sign = if right_end { -1.0 } else { 1.0 };
    let xz_sign = if right_end { 1.0 } else { -1.0 };
    let yz_sign = if right_end { -1.0 } else { 1.0 };

    let lin = {
        let fx = s.sx.scale(C64::new(alpha * phi.cos(), 0.0));
        let fy = s.sy.scale(C64::new(-alpha * phi.sin(), 0.0));
        let fz = s.sz.scale(C64::new(sz_sign, 0.0));
        (&(&fx + &fy) + &fz).scale(C64::new(2.0 * p, 0.0))
    };
    let sz2 = (&s.sz * &s.sz).scale(C64::new(-eta, 0.0));
    let quad = {
        let sx2 = &s.sx * &s.sx;
        let sy2 = &s.sy * &s.sy;
        let sz2 = &s.sz * &s.sz;
        let aniso = &(&sx2 - &sy2).scale(C64::new((2.0 * phi).cos(), 0.0)) - &sz2;
        aniso.scale(C64::new(-0.5 * alpha * alpha * eta, 0.0))
    };
    let xz = {
        let anti = &(&s.sx * &s.sz) + &(&s.sz * &s.sx);
        anti.scale(C64::new(xz_sign * alpha * eta * phi.cos(), 0.0))
    };
    let xy = {
        let anti = &(&s.sx * &s.sy) + &(&s.sy * &s.sx);
        anti.scale(C64::new(0.5 * alpha * alpha * eta * (2.0 * phi).sin(), 0.0))
    };
    let yz = {
        let anti = &(&s.sy * &s.sz) + &(&s.sz * &s.sy);
        anti.scale(C64::new(yz_sign * alpha * eta * phi.sin(), 0.0))
    };
    let ident = ComplexMatrix::identity(3).scale(C64::new(eta, 0.0));
    let sum = &(&(&(&(&lin + &sz2) + &quad) + &xz) + &xy) + &yz;
    &sum + &ident
}

/// Direct construction of the Hamiltonian at the homogeneous point.
pub fn hamiltonian(params: &ModelParams) -> Result<ComplexMatrix> {
    if !params.is_homogeneous() {
        return Err(CoreError::Parameter(
            "the direct Hamiltonian is defined at vanishing inhomogeneities".into(),
        ));
    }
    let n = params.n_sites;
    let eta = params.eta;
    let dq = params.quantum_dim();
    let s = SpinOperators::spin1();

    let inv_eta = C64::new(1.0 / eta, 0.0);
    let mut h = ComplexMatrix::identity(dq).scale(C64::new((3.0 * n as f64 + 8.0 / 3.0) / eta, 0.0));
    let bond = bond_operator();
    for j in 1..n {
        h = &h + &embed_bond(&bond, j, n).scale(inv_eta);
    }

    let dm = params.p_minus * params.p_minus
        - 0.25 * (1.0 + params.alpha_minus * params.alpha_minus) * eta * eta;
    let dp = params.p_plus * params.p_plus
        - 0.25 * (1.0 + params.alpha_plus * params.alpha_plus) * eta * eta;
    if dm == 0.0 || dp == 0.0 {
        return Err(CoreError::Parameter("singular boundary denominator".into()));
    }
    let hl = boundary_field(&s, params.p_minus, params.alpha_minus, params.phi_minus, eta, false)
        .scale(C64::new(1.0 / dm, 0.0));
    let hr = boundary_field(&s, params.p_plus, params.alpha_plus, params.phi_plus, eta, true)
        .scale(C64::new(1.0 / dp, 0.0));
    h = &h + &embed_site(&hl, 1, n);
    h = &h + &embed_site(&hr, n, n);
    Ok(h)
}

/// H reconstructed as t'(0) t(0)^{-1} by central differences on the
/// spin-(1,1) transfer matrix with one Richardson extrapolation step.
/// t(0) is a scalar multiple of the identity, which is verified before
/// dividing.
pub fn hamiltonian_from_transfer(
    params: &ModelParams,
    step: f64,
    dense_budget: usize,
) -> Result<ComplexMatrix> {
    if !params.is_homogeneous() {
        return Err(CoreError::Parameter(
            "the transfer-matrix check runs at the homogeneous point".into(),
        ));
    }
    let dq = params.quantum_dim();
    let t0 = transfer(ZERO, params, TransferKind::Spin11, dense_budget)?;
    let scalar = t0.trace() / (dq as f64);
    let dev = (&t0 - &ComplexMatrix::identity(dq).scale(scalar)).frobenius_norm();
    if dev > 1e-8 * t0.frobenius_norm() {
        return Err(CoreError::Reconstruction(format!(
            "t(0) is not proportional to the identity (deviation {dev:.3e})"
        )));
    }

    let diff = |h: f64| -> Result<ComplexMatrix> {
        let tp = transfer(C64::new(h, 0.0), params, TransferKind::Spin11, dense_budget)?;
        let tm = transfer(C64::new(-h, 0.0), params, TransferKind::Spin11, dense_budget)?;
        Ok((&tp - &tm).scale(C64::new(0.5 / h, 0.0)))
    };
    let d1 = diff(step)?;
    let d2 = diff(0.5 * step)?;
    // Richardson: (4 D(h/2) - D(h)) / 3 removes the O(h^2) error term.
    let d = (&d2.scale(C64::new(4.0, 0.0)) - &d1).scale(C64::new(1.0 / 3.0, 0.0));
    Ok(d.scale(ONE / scalar))
}

/// Total S^z on the N-site space.
pub fn total_sz(n: usize) -> ComplexMatrix {
    let s = SpinOperators::spin1();
    let dq = 3usize.pow(n as u32);
    let mut tot = ComplexMatrix::zeros(dq, dq);
    for j in 1..=n {
        tot = &tot + &embed_site(&s.sz, j, n);
    }
    tot
}
