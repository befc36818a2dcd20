//! Boundary reflection matrices.
//!
//! The spin-1 reflection matrix is the generic non-diagonal solution of the
//! reflection equation; its dual is the same matrix at the crossed argument
//! with the (p, alpha, phi) triple swapped to the other boundary. The
//! fundamental (spin-1/2) matrices carry the boundary angle phi through the
//! same U(1) gauge rotation that dresses the spin-1 matrix, so that both
//! hierarchies describe one boundary field direction.

use super::params::ModelParams;
use crate::numerics::{C64, ComplexMatrix};

fn k_minus_1_raw(u: C64, p: f64, alpha: f64, phi: f64, eta: f64) -> ComplexMatrix {
    let he = 0.5 * eta;
    let a2 = alpha * alpha;
    let sq2 = std::f64::consts::SQRT_2;
    let ephi = C64::from_polar(1.0, phi);
    let ephi_c = ephi.conj();
    let e2phi = C64::from_polar(1.0, 2.0 * phi);
    let e2phi_c = e2phi.conj();

    let x1 = (p + u + he) * (p + u - he) + 0.5 * a2 * eta * (u - he);
    let x2 = (p + u - he) * (p - u + he) + a2 * (u + he) * (u - he);
    let x3 = (p - u - he) * (p - u + he) + 0.5 * a2 * eta * (u - he);
    let y4 = sq2 * alpha * ephi_c * u * (p + u - he);
    let y4p = sq2 * alpha * ephi * u * (p + u - he);
    let y5 = sq2 * alpha * ephi_c * u * (p - u + he);
    let y5p = sq2 * alpha * ephi * u * (p - u + he);
    let y6 = a2 * e2phi_c * u * (u - he);
    let y6p = a2 * e2phi * u * (u - he);

    let pref = 2.0 * u + eta;
    ComplexMatrix::from_rows(&[
        vec![pref * x1, pref * y4p, pref * y6p],
        vec![pref * y4, pref * x2, pref * y5p],
        vec![pref * y6, pref * y5, pref * x3],
    ])
}

/// Spin-1 reflection matrix K^{-(1)}(u), 3x3.
pub fn k_minus_1(u: C64, params: &ModelParams) -> ComplexMatrix {
    k_minus_1_raw(
        u,
        params.p_minus,
        params.alpha_minus,
        params.phi_minus,
        params.eta,
    )
}

/// Dual spin-1 reflection matrix K^{+(1)}(u) = K^{-(1)}(-u-eta) with the
/// boundary triple swapped to (p_+, alpha_+, phi_+).
pub fn k_plus_1(u: C64, params: &ModelParams) -> ComplexMatrix {
    k_minus_1_raw(
        -u - params.eta,
        params.p_plus,
        params.alpha_plus,
        params.phi_plus,
        params.eta,
    )
}

fn k_half_raw(u: C64, p: f64, alpha: f64, phi: f64) -> ComplexMatrix {
    let ephi = C64::from_polar(1.0, phi);
    ComplexMatrix::from_rows(&[
        vec![p + u, alpha * u * ephi],
        vec![alpha * u * ephi.conj(), p - u],
    ])
}

/// Fundamental reflection matrix K^{-(1/2)}(u), 2x2. At phi_- = 0 this is
/// [[p_- + u, alpha_- u], [alpha_- u, p_- - u]]; nonzero phi_- rotates the
/// off-diagonal phases exactly as it does for the spin-1 matrix.
pub fn k_half_minus(u: C64, params: &ModelParams) -> ComplexMatrix {
    k_half_raw(u, params.p_minus, params.alpha_minus, params.phi_minus)
}

/// Fundamental dual reflection matrix K^{+(1/2)}(u) = K^{-(1/2)}(-u-eta)
/// with (p_-, alpha_-, phi_-) -> (p_+, -alpha_+, phi_+).
pub fn k_half_plus(u: C64, params: &ModelParams) -> ComplexMatrix {
    k_half_raw(
        -u - params.eta,
        params.p_plus,
        -params.alpha_plus,
        params.phi_plus,
    )
}

/// Fundamental reflection matrix with the dual selected by flag.
pub fn k_half(u: C64, params: &ModelParams, dual: bool) -> ComplexMatrix {
    if dual {
        k_half_plus(u, params)
    } else {
        k_half_minus(u, params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ComplexMatrix, ZERO};

    #[test]
    fn k_minus_at_zero_is_scalar() {
        let m = ModelParams::example(2);
        let k0 = k_minus_1(ZERO, &m);
        let scalar = m.eta
            * (m.p_minus * m.p_minus
                - 0.25 * (1.0 + m.alpha_minus * m.alpha_minus) * m.eta * m.eta);
        let want = ComplexMatrix::identity(3).scale(C64::new(scalar, 0.0));
        assert!((&k0 - &want).frobenius_norm() < 1e-12);
    }

    #[test]
    fn k_minus_diagonal_when_alpha_vanishes() {
        let m = ModelParams::new(2, 1.0, 0.9, 1.4, 0.0, 0.0, 0.3, 0.7, vec![0.0; 2]).unwrap();
        for &u in &[C64::new(0.4, 0.0), C64::new(-0.3, 0.8)] {
            let k = k_minus_1(u, &m);
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert_eq!(k[(i, j)], ZERO);
                    }
                }
            }
            let kp = k_plus_1(u, &m);
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert_eq!(kp[(i, j)], ZERO);
                    }
                }
            }
        }
    }

    #[test]
    fn k_plus_at_minus_eta_is_scalar() {
        // Duality maps u = -eta to the u = 0 point of the unswapped matrix.
        let m = ModelParams::example(2);
        let k = k_plus_1(C64::new(-m.eta, 0.0), &m);
        let scalar = m.eta
            * (m.p_plus * m.p_plus - 0.25 * (1.0 + m.alpha_plus * m.alpha_plus) * m.eta * m.eta);
        let want = ComplexMatrix::identity(3).scale(C64::new(scalar, 0.0));
        assert!((&k - &want).frobenius_norm() < 1e-12);
    }

    #[test]
    fn k_half_at_zero_is_p_minus() {
        let m = ModelParams::example(2);
        let k = k_half(ZERO, &m, false);
        let want = ComplexMatrix::identity(2).scale(C64::new(m.p_minus, 0.0));
        assert!((&k - &want).frobenius_norm() < 1e-14);
    }

    #[test]
    fn k_half_diagonal_when_alpha_vanishes() {
        let m = ModelParams::new(2, 1.0, 0.9, 1.4, 0.0, 0.0, 0.3, 0.7, vec![0.0; 2]).unwrap();
        let k = k_half(C64::new(0.3, 0.6), &m, false);
        assert_eq!(k[(0, 1)], ZERO);
        assert_eq!(k[(1, 0)], ZERO);
    }

    #[test]
    fn k_matrices_hermitian_at_real_argument() {
        let m = ModelParams::example(2);
        for &u in &[0.3f64, -0.9, 1.7] {
            let u = C64::new(u, 0.0);
            assert!(k_minus_1(u, &m).hermitian_deviation() < 1e-14);
            assert!(k_plus_1(u, &m).hermitian_deviation() < 1e-14);
            assert!(k_half(u, &m, false).hermitian_deviation() < 1e-14);
            assert!(k_half(u, &m, true).hermitian_deviation() < 1e-14);
        }
    }
}
