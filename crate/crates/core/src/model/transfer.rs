//! Double-row transfer matrices.
//!
//! The transfer matrix tr_0 { K_0^+(u) T_0(u) K_0^-(u) That_0(u) } is never
//! assembled from explicit monodromy matrices. Instead its action on a state
//! is computed by streaming the auxiliary space through the chain: for each
//! auxiliary basis vector the 2N local scattering factors and the two
//! reflection matrices are applied to an (aux x quantum)-shaped vector, and
//! the partial trace is the sum of the diagonal auxiliary blocks. One
//! application costs O(N d^2 3^N) instead of the O(d^3 3^{3N}) of naive
//! operator products, which keeps probing feasible through N = 6.
//!
//! Basis order: the auxiliary index is slowest, then site 1, ..., site N.

use super::kmatrix::{k_half_minus, k_half_plus, k_minus_1, k_plus_1};
use super::params::ModelParams;
use super::rmatrix::{r11, r_half_one, swap_conjugate};
use crate::error::{CoreError, Result};
use crate::numerics::{C64, ComplexMatrix, ZERO};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Which transfer matrix: the spin-(1,1) one generating the Hamiltonian, or
/// the fundamental spin-(1/2,1) one entering the fusion hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransferKind {
    Spin11,
    SpinHalf1,
}

impl TransferKind {
    pub fn aux_dim(self) -> usize {
        match self {
            TransferKind::Spin11 => 3,
            TransferKind::SpinHalf1 => 2,
        }
    }
}

/// Apply a local operator acting on (aux, site j) to a vector on
/// aux (x) site_1 (x) ... (x) site_N. `site` is 1-based.
fn apply_aux_site(
    op: &ComplexMatrix,
    site: usize,
    d0: usize,
    n: usize,
    x: &[C64],
    scratch: &mut Vec<C64>,
) -> Vec<C64> {
    let dq = 3usize.pow(n as u32);
    let stride = 3usize.pow((n - site) as u32);
    let outer = dq / (3 * stride);
    debug_assert_eq!(op.rows(), d0 * 3);
    debug_assert_eq!(x.len(), d0 * dq);

    scratch.clear();
    scratch.resize(d0 * dq, ZERO);
    let y = scratch;
    for hi in 0..outer {
        for lo in 0..stride {
            let base = hi * 3 * stride + lo;
            // Gather the d0*3 amplitudes of this fiber, apply op, scatter.
            for a_out in 0..d0 {
                for s_out in 0..3 {
                    let mut acc = ZERO;
                    let orow = op.row(a_out * 3 + s_out);
                    for a_in in 0..d0 {
                        for s_in in 0..3 {
                            let c = orow[a_in * 3 + s_in];
                            if c != ZERO {
                                acc += c * x[a_in * dq + base + s_in * stride];
                            }
                        }
                    }
                    y[a_out * dq + base + s_out * stride] = acc;
                }
            }
        }
    }
    std::mem::take(y)
}

/// Apply an operator on the auxiliary space alone.
fn apply_aux_only(op: &ComplexMatrix, d0: usize, dq: usize, x: &[C64]) -> Vec<C64> {
    let mut y = vec![ZERO; d0 * dq];
    for a_out in 0..d0 {
        for a_in in 0..d0 {
            let c = op[(a_out, a_in)];
            if c == ZERO {
                continue;
            }
            let src = &x[a_in * dq..(a_in + 1) * dq];
            let dst = &mut y[a_out * dq..(a_out + 1) * dq];
            for (d, s) in dst.iter_mut().zip(src) {
                *d += c * s;
            }
        }
    }
    y
}

/// Local factors for one evaluation point, cached per site because the
/// inhomogeneities differ along the chain.
struct LocalFactors {
    /// R acting on (aux, site j) inside the forward monodromy, argument u - theta_j.
    forward: Vec<ComplexMatrix>,
    /// R acting on (aux, site j) inside the reflected monodromy, argument u + theta_j.
    backward: Vec<ComplexMatrix>,
    k_minus: ComplexMatrix,
    k_plus: ComplexMatrix,
}

fn local_factors(u: C64, params: &ModelParams, kind: TransferKind) -> LocalFactors {
    let eta = params.eta;
    let n = params.n_sites;
    match kind {
        TransferKind::Spin11 => LocalFactors {
            forward: (1..=n).map(|j| r11(u - params.theta(j), eta)).collect(),
            // R_{j0} = flip-conjugated R_{0j}
            backward: (1..=n)
                .map(|j| swap_conjugate(&r11(u + params.theta(j), eta), 3, 3))
                .collect(),
            k_minus: k_minus_1(u, params),
            k_plus: k_plus_1(u, params),
        },
        TransferKind::SpinHalf1 => LocalFactors {
            forward: (1..=n).map(|j| r_half_one(u - params.theta(j), eta)).collect(),
            // The mixed R with the spin-1 slot on the site and the spin-1/2
            // slot on the auxiliary space coincides entrywise with the
            // (aux, site)-ordered fundamental matrix.
            backward: (1..=n).map(|j| r_half_one(u + params.theta(j), eta)).collect(),
            k_minus: k_half_minus(u, params),
            k_plus: k_half_plus(u, params),
        },
    }
}

/// t(u) |psi> without materializing t(u).
pub fn apply_transfer(u: C64, params: &ModelParams, kind: TransferKind, psi: &[C64]) -> Vec<C64> {
    let factors = local_factors(u, params, kind);
    apply_transfer_cached(&factors, params, kind, psi)
}

fn apply_transfer_cached(
    factors: &LocalFactors,
    params: &ModelParams,
    kind: TransferKind,
    psi: &[C64],
) -> Vec<C64> {
    let n = params.n_sites;
    let dq = params.quantum_dim();
    let d0 = kind.aux_dim();
    assert_eq!(psi.len(), dq);

    let mut out = vec![ZERO; dq];
    let mut scratch = Vec::new();
    for a in 0..d0 {
        let mut x = vec![ZERO; d0 * dq];
        x[a * dq..(a + 1) * dq].copy_from_slice(psi);
        // Reflected monodromy R_{10} ... R_{N0}: rightmost factor first.
        for j in (1..=n).rev() {
            x = apply_aux_site(&factors.backward[j - 1], j, d0, n, &x, &mut scratch);
        }
        x = apply_aux_only(&factors.k_minus, d0, dq, &x);
        // Forward monodromy R_{0N} ... R_{01}: site 1 first.
        for j in 1..=n {
            x = apply_aux_site(&factors.forward[j - 1], j, d0, n, &x, &mut scratch);
        }
        x = apply_aux_only(&factors.k_plus, d0, dq, &x);
        // Partial trace: keep the a-th auxiliary block.
        for (o, v) in out.iter_mut().zip(&x[a * dq..(a + 1) * dq]) {
            *o += v;
        }
    }
    out
}

/// Materialize t(u) as a dense matrix on the quantum space, column by column.
pub fn transfer(
    u: C64,
    params: &ModelParams,
    kind: TransferKind,
    dense_budget: usize,
) -> Result<ComplexMatrix> {
    let dq = params.quantum_dim();
    if dq > dense_budget {
        return Err(CoreError::SizeBudget {
            dim: dq,
            budget: dense_budget,
        });
    }
    let factors = local_factors(u, params, kind);
    let cols: Vec<Vec<C64>> = (0..dq)
        .into_par_iter()
        .map(|j| {
            let mut e = vec![ZERO; dq];
            e[j] = C64::new(1.0, 0.0);
            apply_transfer_cached(&factors, params, kind, &e)
        })
        .collect();
    let mut m = ComplexMatrix::zeros(dq, dq);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..dq {
            m[(i, j)] = col[i];
        }
    }
    Ok(m)
}

/// Rayleigh quotient <psi| t(u) |psi> / <psi|psi>.
pub fn transfer_expectation(
    u: C64,
    params: &ModelParams,
    kind: TransferKind,
    psi: &[C64],
) -> C64 {
    let tpsi = apply_transfer(u, params, kind, psi);
    crate::numerics::inner(psi, &tpsi) / crate::numerics::inner(psi, psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::vec_norm;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_state(dq: usize, seed: u64) -> Vec<C64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..dq)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn apply_matches_materialized_matrix() {
        let params = ModelParams::example(2).with_theta_ramp(0.07);
        let u = C64::new(0.41, 0.13);
        for kind in [TransferKind::Spin11, TransferKind::SpinHalf1] {
            let t = transfer(u, &params, kind, 1 << 20).unwrap();
            let psi = random_state(9, 5);
            let via_apply = apply_transfer(u, &params, kind, &psi);
            let via_matrix = t.mul_vec(&psi);
            let diff: f64 = via_apply
                .iter()
                .zip(&via_matrix)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(diff < 1e-12 * vec_norm(&via_matrix).max(1.0));
        }
    }

    #[test]
    fn fundamental_transfer_value_at_origin() {
        // t^{(1/2,1)}(0) = 2 p_- p_+ prod_l (theta_l + 3 eta/2)(-theta_l + 3 eta/2) Id
        let params = ModelParams::example(3).with_theta_ramp(0.1);
        let t0 = transfer(ZERO, &params, TransferKind::SpinHalf1, 1 << 20).unwrap();
        let mut scalar = C64::new(2.0 * params.p_minus * params.p_plus, 0.0);
        for j in 1..=3 {
            let th = params.theta(j);
            scalar *= (th + 1.5 * params.eta) * (-th + 1.5 * params.eta);
        }
        let want = ComplexMatrix::identity(27).scale(scalar);
        assert!(
            (&t0 - &want).frobenius_norm() < 1e-10 * want.frobenius_norm(),
            "t(0) deviates: {:e}",
            (&t0 - &want).frobenius_norm()
        );
    }

    #[test]
    fn transfer_is_hermitian_at_real_argument() {
        let params = ModelParams::example(2);
        for kind in [TransferKind::Spin11, TransferKind::SpinHalf1] {
            let t = transfer(C64::new(0.37, 0.0), &params, kind, 1 << 20).unwrap();
            assert!(t.hermitian_deviation() < 1e-12, "kind {kind:?}");
        }
        // Imaginary inhomogeneities preserve hermiticity at real u.
        let params = params.with_theta_ramp(0.1);
        let t = transfer(C64::new(0.51, 0.0), &params, TransferKind::SpinHalf1, 1 << 20).unwrap();
        assert!(t.hermitian_deviation() < 1e-12);
    }

    #[test]
    fn size_budget_enforced() {
        let params = ModelParams::example(2);
        assert!(matches!(
            transfer(ZERO, &params, TransferKind::Spin11, 8),
            Err(CoreError::SizeBudget { .. })
        ));
    }
}
