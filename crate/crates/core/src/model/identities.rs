//! Algebraic identity suite.
//!
//! Residual checks, at seeded random spectral points, for every exact
//! relation the construction rests on: the Yang-Baxter equation, the
//! reflection equation and its dual, the mixed reflection equation coupling
//! the two auxiliary spins, unitarity of the mixed scattering matrix,
//! crossing symmetry of both transfer matrices, and commutativity of the
//! full transfer family. Residuals are Frobenius norms relative to the
//! magnitude of the participating products.

use super::kmatrix::{k_half_minus, k_minus_1, k_plus_1};
use super::params::ModelParams;
use super::rmatrix::{flip, r11, r_half_one, r_one_half, swap_conjugate};
use super::transfer::{TransferKind, transfer};
use crate::error::Result;
use crate::numerics::{C64, ComplexMatrix};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub points_tested: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub seed: u64,
    pub pass: bool,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2))
}

fn rel_diff(lhs: &ComplexMatrix, rhs: &ComplexMatrix) -> f64 {
    (lhs - rhs).frobenius_norm() / lhs.frobenius_norm().max(rhs.frobenius_norm()).max(1e-300)
}

/// R13 on V (x) V (x) V from the two-space matrix: conjugate R (x) I by the
/// flip of the last two factors.
fn embed_r13(r: &ComplexMatrix) -> ComplexMatrix {
    let p23 = ComplexMatrix::identity(3).kron(&flip(3, 3)).unwrap();
    let r12 = r.kron(&ComplexMatrix::identity(3)).unwrap();
    &(&p23 * &r12) * &p23
}

/// Yang-Baxter residual for the spin-(1,1) matrix at `points` random (u, v).
pub fn qybe_residual(eta: f64, points: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id3 = ComplexMatrix::identity(3);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        let r12 = r11(u - v, eta).kron(&id3).unwrap();
        let r13 = embed_r13(&r11(u, eta));
        let r23 = id3.kron(&r11(v, eta)).unwrap();
        let lhs = &(&r12 * &r13) * &r23;
        let rhs = &(&r23 * &r13) * &r12;
        worst = worst.max(rel_diff(&lhs, &rhs));
    }
    worst
}

/// Reflection-equation residual:
/// R12(u-v) K1(u) R21(u+v) K2(v) = K2(v) R21(u+v) K1(u) R12(u-v).
pub fn re_residual(params: &ModelParams, points: usize, seed: u64) -> f64 {
    let eta = params.eta;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id3 = ComplexMatrix::identity(3);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        let r12 = r11(u - v, eta);
        let r21 = swap_conjugate(&r11(u + v, eta), 3, 3);
        let k1 = k_minus_1(u, params).kron(&id3).unwrap();
        let k2 = id3.kron(&k_minus_1(v, params)).unwrap();
        let lhs = &(&(&r12 * &k1) * &r21) * &k2;
        let rhs = &(&(&k2 * &r21) * &k1) * &r12;
        worst = worst.max(rel_diff(&lhs, &rhs));
    }
    worst
}

/// Dual reflection-equation residual:
/// R12(v-u) K1+(u) R21(-u-v-2eta) K2+(v) = K2+(v) R21(-u-v-2eta) K1+(u) R12(v-u).
pub fn dual_re_residual(params: &ModelParams, points: usize, seed: u64) -> f64 {
    let eta = params.eta;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id3 = ComplexMatrix::identity(3);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        let r12 = r11(v - u, eta);
        let r21 = swap_conjugate(&r11(-u - v - 2.0 * eta, eta), 3, 3);
        let k1 = k_plus_1(u, params).kron(&id3).unwrap();
        let k2 = id3.kron(&k_plus_1(v, params)).unwrap();
        let lhs = &(&(&r12 * &k1) * &r21) * &k2;
        let rhs = &(&(&k2 * &r21) * &k1) * &r12;
        worst = worst.max(rel_diff(&lhs, &rhs));
    }
    worst
}

/// Mixed reflection-equation residual on C^3 (x) C^2 (spin-1 space first):
/// R12^{(1,1/2)}(u-v) K1^{-(1)}(u) R21^{(1/2,1)}(u+v) K2^{-(1/2)}(v) =
/// K2^{-(1/2)}(v) R12^{(1,1/2)}(u+v) K1^{-(1)}(u) R21^{(1/2,1)}(u-v).
pub fn mixed_re_residual(params: &ModelParams, points: usize, seed: u64) -> f64 {
    let eta = params.eta;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id2 = ComplexMatrix::identity(2);
    let id3 = ComplexMatrix::identity(3);
    // Both orientation labels resolve to the flip-conjugated fundamental
    // matrix on the C^3 (x) C^2 ordering.
    let m = |x: C64| r_one_half(x, eta);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        let k1 = k_minus_1(u, params).kron(&id2).unwrap();
        let k2 = id3.kron(&k_half_minus(v, params)).unwrap();
        let lhs = &(&(&m(u - v) * &k1) * &m(u + v)) * &k2;
        let rhs = &(&(&k2 * &m(u + v)) * &k1) * &m(u - v);
        worst = worst.max(rel_diff(&lhs, &rhs));
    }
    worst
}

/// Unitarity residual of the mixed scattering matrix:
/// R^{(1/2,1)}_{12}(u) R^{(1,1/2)}_{21}(-u) = -(u + 3eta/2)(u - 3eta/2) Id.
pub fn unitarity_residual(eta: f64, points: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let r12 = r_half_one(u, eta);
        let r21 = swap_conjugate(&r_one_half(-u, eta), 3, 2);
        let lhs = &r12 * &r21;
        let rhs = ComplexMatrix::identity(6).scale(-(u + 1.5 * eta) * (u - 1.5 * eta));
        worst = worst.max(rel_diff(&lhs, &rhs));
    }
    worst
}

/// Crossing residual ||t(u) - t(-u-eta)|| / ||t(u)|| at random points.
pub fn crossing_residual(
    params: &ModelParams,
    kind: TransferKind,
    points: usize,
    seed: u64,
    dense_budget: usize,
) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let t1 = transfer(u, params, kind, dense_budget)?;
        let t2 = transfer(-u - params.eta, params, kind, dense_budget)?;
        worst = worst.max(rel_diff(&t1, &t2));
    }
    Ok(worst)
}

/// Commutator residual ||[t_a(u), t_b(v)]|| / (||t_a(u)|| ||t_b(v)||).
pub fn commutativity_residual(
    params: &ModelParams,
    kind_a: TransferKind,
    kind_b: TransferKind,
    points: usize,
    seed: u64,
    dense_budget: usize,
) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let u = random_point(&mut rng);
        let v = random_point(&mut rng);
        let ta = transfer(u, params, kind_a, dense_budget)?;
        let tb = transfer(v, params, kind_b, dense_budget)?;
        let comm = ta.commutator(&tb);
        worst = worst.max(
            comm.frobenius_norm() / (ta.frobenius_norm() * tb.frobenius_norm()).max(1e-300),
        );
    }
    Ok(worst)
}

/// Run the full identity suite. `points` applies to the pure R/K identities;
/// the transfer-matrix checks use fewer points because each one builds
/// dense operators on the 3^N quantum space.
pub fn run_identity_suite(
    params: &ModelParams,
    points: usize,
    transfer_points: usize,
    tol_identity: f64,
    tol_commutator: f64,
    seed: u64,
    dense_budget: usize,
) -> Result<IdentityReport> {
    let eta = params.eta;
    let mut checks = Vec::new();
    let mut push = |name: &str, pts: usize, residual: f64, tol: f64| {
        checks.push(IdentityCheck {
            name: name.to_string(),
            points_tested: pts,
            max_residual: residual,
            tolerance: tol,
            pass: residual <= tol,
        });
    };

    push(
        "yang_baxter",
        points,
        qybe_residual(eta, points, seed),
        tol_identity,
    );
    push(
        "reflection",
        points,
        re_residual(params, points, seed.wrapping_add(1)),
        tol_identity,
    );
    push(
        "dual_reflection",
        points,
        dual_re_residual(params, points, seed.wrapping_add(2)),
        tol_identity,
    );
    push(
        "mixed_reflection",
        points,
        mixed_re_residual(params, points, seed.wrapping_add(3)),
        tol_identity,
    );
    push(
        "unitarity",
        points,
        unitarity_residual(eta, points, seed.wrapping_add(4)),
        tol_identity,
    );
    push(
        "crossing_spin11",
        transfer_points,
        crossing_residual(params, TransferKind::Spin11, transfer_points, seed.wrapping_add(5), dense_budget)?,
        tol_identity,
    );
    push(
        "crossing_spin_half_1",
        transfer_points,
        crossing_residual(params, TransferKind::SpinHalf1, transfer_points, seed.wrapping_add(6), dense_budget)?,
        tol_identity,
    );
    push(
        "commutativity_spin11",
        transfer_points,
        commutativity_residual(params, TransferKind::Spin11, TransferKind::Spin11, transfer_points, seed.wrapping_add(7), dense_budget)?,
        tol_commutator,
    );
    push(
        "commutativity_mixed_kinds",
        transfer_points,
        commutativity_residual(params, TransferKind::SpinHalf1, TransferKind::Spin11, transfer_points, seed.wrapping_add(8), dense_budget)?,
        tol_commutator,
    );

    let pass = checks.iter().all(|c| c.pass);
    Ok(IdentityReport { checks, seed, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qybe_holds() {
        assert!(qybe_residual(1.0, 25, 7) < 1e-10);
        assert!(qybe_residual(0.6, 10, 8) < 1e-10);
    }

    #[test]
    fn reflection_equations_hold() {
        let params = ModelParams::example(2);
        assert!(re_residual(&params, 25, 7) < 1e-10);
        assert!(dual_re_residual(&params, 25, 7) < 1e-10);
        assert!(mixed_re_residual(&params, 25, 7) < 1e-10);
    }

    #[test]
    fn unitarity_holds() {
        assert!(unitarity_residual(1.0, 25, 7) < 1e-12);
    }

    #[test]
    fn transfer_family_commutes_and_crosses() {
        let params = ModelParams::example(2).with_theta_ramp(0.06);
        let budget = 1 << 20;
        assert!(
            crossing_residual(&params, TransferKind::Spin11, 4, 3, budget).unwrap() < 1e-10
        );
        assert!(
            crossing_residual(&params, TransferKind::SpinHalf1, 4, 3, budget).unwrap() < 1e-10
        );
        assert!(
            commutativity_residual(&params, TransferKind::Spin11, TransferKind::Spin11, 4, 3, budget)
                .unwrap()
                < 1e-9
        );
        assert!(
            commutativity_residual(&params, TransferKind::SpinHalf1, TransferKind::Spin11, 4, 3, budget)
                .unwrap()
                < 1e-9
        );
    }
}
