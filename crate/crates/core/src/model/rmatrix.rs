//! Scattering matrices.
//!
//! The spin-(1,1) matrix acts on C^3 (x) C^3 and is given entrywise; the
//! fundamental spin-(1/2,1) matrix acts on C^2 (x) C^3 and has the compact
//! form (u + eta/2) + eta sigma.S. Orientation-reversed variants are built
//! by conjugating with the flip of the two tensor factors.

use super::spin::{SpinOperators, pauli};
use crate::numerics::{C64, ComplexMatrix, ONE, ZERO};

/// Spin-(1,1) scattering matrix, 9x9.
pub fn r11(u: C64, eta: f64) -> ComplexMatrix {
    let e2 = eta * eta;
    let a = u * (u + eta) + 2.0 * e2;
    let b = u * (u + eta);
    let c = (u + eta) * (u + 2.0 * eta);
    let d = u * (u - eta);
    let e = 2.0 * eta * (u + eta);
    let f = C64::new(2.0 * e2, 0.0);
    let g = 2.0 * u * eta;

    let mut m = ComplexMatrix::zeros(9, 9);
    m[(0, 0)] = c;
    m[(1, 1)] = b;
    m[(1, 3)] = e;
    m[(2, 2)] = d;
    m[(2, 4)] = g;
    m[(2, 6)] = f;
    m[(3, 1)] = e;
    m[(3, 3)] = b;
    m[(4, 2)] = g;
    m[(4, 4)] = a;
    m[(4, 6)] = g;
    m[(5, 5)] = b;
    m[(5, 7)] = e;
    m[(6, 2)] = f;
    m[(6, 4)] = g;
    m[(6, 6)] = d;
    m[(7, 5)] = e;
    m[(7, 7)] = b;
    m[(8, 8)] = c;
    m
}

/// Fundamental spin-(1/2,1) scattering matrix on C^2 (x) C^3, 6x6:
/// (u + eta/2) I + eta * sigma . S.
pub fn r_half_one(u: C64, eta: f64) -> ComplexMatrix {
    let s = SpinOperators::spin1();
    let (px, py, pz) = pauli();
    let mut m = ComplexMatrix::identity(6).scale(u + 0.5 * eta);
    for (p, sp) in [(&px, &s.sx), (&py, &s.sy), (&pz, &s.sz)] {
        let term = p.kron(sp).unwrap().scale(C64::new(eta, 0.0));
        m = &m + &term;
    }
    m
}

/// Orientation-reversed mixed matrix on C^3 (x) C^2, obtained by flipping
/// the factors of `r_half_one`.
pub fn r_one_half(u: C64, eta: f64) -> ComplexMatrix {
    swap_conjugate(&r_half_one(u, eta), 2, 3)
}

/// The flip C^{d1} (x) C^{d2} -> C^{d2} (x) C^{d1} as a permutation matrix.
pub fn flip(d1: usize, d2: usize) -> ComplexMatrix {
    let mut p = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for a in 0..d1 {
        for b in 0..d2 {
            p[(b * d1 + a, a * d2 + b)] = ONE;
        }
    }
    p
}

/// Conjugate an operator on C^{d1} (x) C^{d2} into the flipped ordering.
pub fn swap_conjugate(m: &ComplexMatrix, d1: usize, d2: usize) -> ComplexMatrix {
    assert_eq!(m.rows(), d1 * d2);
    let mut out = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for a in 0..d1 {
        for b in 0..d2 {
            for c in 0..d1 {
                for d in 0..d2 {
                    let v = m[(a * d2 + b, c * d2 + d)];
                    if v != ZERO {
                        out[(b * d1 + a, d * d1 + c)] = v;
                    }
                }
            }
        }
    }
    out
}

/// Permutation operator on C^3 (x) C^3 (the zero-argument spin-(1,1) matrix
/// up to the factor 2 eta^2).
pub fn permutation33() -> ComplexMatrix {
    flip(3, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r11_at_zero_is_permutation() {
        for &eta in &[1.0f64, 0.7] {
            let r0 = r11(ZERO, eta);
            let want = permutation33().scale(C64::new(2.0 * eta * eta, 0.0));
            assert!((&r0 - &want).frobenius_norm() < 1e-14);
        }
    }

    #[test]
    fn r11_entry_values_at_zero() {
        // a(0) = c(0) = 2 eta^2
        let eta = 1.3;
        let r0 = r11(ZERO, eta);
        assert!((r0[(4, 4)] - C64::new(2.0 * eta * eta, 0.0)).norm() < 1e-14);
        assert!((r0[(0, 0)] - C64::new(2.0 * eta * eta, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn r_half_one_trace_is_six_u_plus_half_eta() {
        // Pauli (x) spin products are traceless, so tr R = 6 (u + eta/2).
        let eta = 1.0;
        let u = C64::new(0.35, -0.8);
        let tr = r_half_one(u, eta).trace();
        assert!((tr - 6.0 * (u + 0.5 * eta)).norm() < 1e-13);
    }

    #[test]
    fn unitarity_of_mixed_r() {
        // R^{(1/2,1)}_{12}(u) R^{(1,1/2)}_{21}(-u) = -(u + 3 eta/2)(u - 3 eta/2) Id
        let eta = 1.0;
        for &u in &[C64::new(0.3, 0.2), C64::new(-1.1, 0.45), ZERO] {
            let lhs = {
                let r12 = r_half_one(u, eta);
                // R^{(1,1/2)} with its first slot on space 2: flip back to C^2 (x) C^3
                let r21 = swap_conjugate(&r_one_half(-u, eta), 3, 2);
                &r12 * &r21
            };
            let scalar = -(u + 1.5 * eta) * (u - 1.5 * eta);
            let want = ComplexMatrix::identity(6).scale(scalar);
            assert!(
                (&lhs - &want).frobenius_norm() < 1e-12 * want.frobenius_norm().max(1.0),
                "u = {u}"
            );
        }
    }

    #[test]
    fn unitarity_at_origin_is_nine_quarters() {
        let lhs = {
            let r12 = r_half_one(ZERO, 1.0);
            let r21 = swap_conjugate(&r_one_half(ZERO, 1.0), 3, 2);
            &r12 * &r21
        };
        let want = ComplexMatrix::identity(6).scale(C64::new(2.25, 0.0));
        assert!((&lhs - &want).frobenius_norm() < 1e-13);
    }

    #[test]
    fn flip_is_involutive() {
        let p = flip(2, 3);
        let q = flip(3, 2);
        assert!((&(&q * &p) - &ComplexMatrix::identity(6)).frobenius_norm() < 1e-15);
    }
}
