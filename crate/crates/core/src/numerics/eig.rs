//! Eigensolvers.
//!
//! Hermitian problems are delegated to nalgebra's self-adjoint
//! decomposition and re-checked against the contract (ascending
//! eigenvalues, unitary eigenvector matrix, reconstruction residual).
//! General complex spectra are only ever needed for small companion
//! matrices, for which a shifted QR iteration on Hessenberg form is
//! implemented directly.

use super::cmatrix::{C64, ComplexMatrix, ONE, ZERO};
use crate::error::{CoreError, Result};
use nalgebra::DMatrix;

/// Full spectrum of a Hermitian matrix: eigenvalues ascending, eigenvectors
/// as orthonormal columns in matching order.
pub fn eig_hermitian(m: &ComplexMatrix, tol: f64) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !m.is_square() {
        return Err(CoreError::Shape(format!(
            "eig_hermitian needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.hermitian_deviation();
    if dev > tol {
        return Err(CoreError::NotHermitian { deviation: dev, tol });
    }
    let n = m.rows();
    let na = DMatrix::from_fn(n, n, |i, j| {
        // Symmetrize so roundoff in the input cannot leak into the solver.
        0.5 * (m[(i, j)] + m[(j, i)].conj())
    });
    let se = na.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let values: Vec<f64> = order.iter().map(|&k| se.eigenvalues[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| se.eigenvectors[(i, order[j])]);

    let residual = reconstruction_residual(m, &values, &vectors);
    let scale = m.frobenius_norm().max(1.0);
    if residual > tol * scale * (n as f64) {
        return Err(CoreError::EigResidual {
            residual: residual / scale,
            tol,
        });
    }
    Ok((values, vectors))
}

fn reconstruction_residual(m: &ComplexMatrix, values: &[f64], vectors: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mv = m * vectors;
    let mut dev = 0.0;
    for j in 0..n {
        for i in 0..n {
            dev += (mv[(i, j)] - vectors[(i, j)] * values[j]).norm_sqr();
        }
    }
    dev.sqrt()
}

/// Eigenvalues of a small general complex matrix by shifted QR iteration.
///
/// The input is reduced to upper Hessenberg form first; companion matrices
/// arrive already in that shape. Intended for dimensions up to a few tens.
pub fn complex_eigenvalues(m: &ComplexMatrix) -> Result<Vec<C64>> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut h = to_hessenberg(m);
    let mut eigs = vec![ZERO; n];
    let mut hi = n; // active block is rows/cols 0..hi
    let mut iter_since_deflation = 0usize;
    let max_iter = 80 * n;
    let mut total = 0usize;

    while hi > 0 {
        total += 1;
        if total > max_iter {
            return Err(CoreError::Reconstruction(format!(
                "QR iteration failed to converge on a {n}x{n} matrix"
            )));
        }
        if hi == 1 {
            eigs[0] = h[(0, 0)];
            hi = 0;
            continue;
        }
        // Deflate any negligible subdiagonal inside the active block.
        let mut lo = hi - 1;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if h[(lo, lo - 1)].norm() <= f64::EPSILON * s.max(f64::MIN_POSITIVE) {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if h[(hi - 1, hi - 2.min(hi - 1))] == ZERO && hi >= 2 && h[(hi - 1, hi - 2)] == ZERO {
            eigs[hi - 1] = h[(hi - 1, hi - 1)];
            hi -= 1;
            iter_since_deflation = 0;
            continue;
        }

        // Wilkinson shift from the trailing 2x2 of the active block.
        let a = h[(hi - 2, hi - 2)];
        let b = h[(hi - 2, hi - 1)];
        let c = h[(hi - 1, hi - 2)];
        let d = h[(hi - 1, hi - 1)];
        let mut shift = {
            let tr = a + d;
            let det = a * d - b * c;
            let disc = (tr * tr - 4.0 * det).sqrt();
            let l1 = 0.5 * (tr + disc);
            let l2 = 0.5 * (tr - disc);
            if (l1 - d).norm() < (l2 - d).norm() { l1 } else { l2 }
        };
        iter_since_deflation += 1;
        if iter_since_deflation % 12 == 0 {
            // Exceptional shift to break rare stalls.
            shift = d + C64::new(1.5 * c.norm(), 0.5 * c.norm());
        }

        qr_step(&mut h, lo, hi, shift);

        // Deflation test at the bottom of the block.
        let s = h[(hi - 2, hi - 2)].norm() + h[(hi - 1, hi - 1)].norm();
        if h[(hi - 1, hi - 2)].norm() <= f64::EPSILON * s.max(f64::MIN_POSITIVE) {
            eigs[hi - 1] = h[(hi - 1, hi - 1)];
            hi -= 1;
            iter_since_deflation = 0;
        }
    }
    Ok(eigs)
}

/// One implicit single-shift QR sweep on the Hessenberg block lo..hi.
fn qr_step(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: C64) {
    let n = h.rows();
    // Givens rotations eliminating the subdiagonal of (H - shift I).
    let mut rotations: Vec<(C64, f64)> = Vec::with_capacity(hi - lo - 1);
    let mut x = h[(lo, lo)] - shift;
    let mut y = h[(lo + 1, lo)];
    for k in lo..hi - 1 {
        let (cs, sn) = givens(x, y);
        rotations.push((sn, cs));
        // Apply rotation to rows k, k+1.
        for j in k.saturating_sub(1)..n {
            let hk = h[(k, j)];
            let hk1 = h[(k + 1, j)];
            h[(k, j)] = cs * hk + sn.conj() * hk1;
            h[(k + 1, j)] = -sn * hk + cs * hk1;
        }
        if k + 2 < hi {
            x = h[(k + 1, k)];
            y = h[(k + 2, k)];
        }
    }
    // Apply the transposed rotations to columns: H <- G H G^dagger.
    for (k, &(sn, cs)) in rotations.iter().enumerate() {
        let k = lo + k;
        let top = (k + 2).min(hi);
        for i in 0..=top.min(n - 1) {
            let hk = h[(i, k)];
            let hk1 = h[(i, k + 1)];
            h[(i, k)] = cs * hk + sn * hk1;
            h[(i, k + 1)] = -sn.conj() * hk + cs * hk1;
        }
    }
}

/// Complex Givens rotation: returns (c, s) with c real such that
/// [c, conj(s); -s, c] * [x; y] = [r; 0].
fn givens(x: C64, y: C64) -> (f64, C64) {
    let xn = x.norm();
    let yn = y.norm();
    if yn == 0.0 {
        return (1.0, ZERO);
    }
    let r = (xn * xn + yn * yn).sqrt();
    if xn == 0.0 {
        // c = 0; pick s = y/|y| * ... so that -s*x + c*y handled; use s = conj(y)/r * phase
        return (0.0, y.conj() / y.norm());
    }
    let c = xn / r;
    let phase_x = x / xn;
    let s = phase_x * y.conj() / r;
    (c, s)
}

/// Householder reduction to upper Hessenberg form (similarity transform).
fn to_hessenberg(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        // Build the reflector for column k, rows k+1..n.
        let mut v: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let alpha = v[0];
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let phase = if alpha == ZERO { ONE } else { alpha / alpha.norm() };
        v[0] += phase * norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // H <- (I - 2 v v^dag / |v|^2) H (same from the right).
        for j in 0..n {
            let mut dot = ZERO;
            for (idx, i) in (k + 1..n).enumerate() {
                dot += v[idx].conj() * h[(i, j)];
            }
            let f = 2.0 * dot / vnorm2;
            for (idx, i) in (k + 1..n).enumerate() {
                let upd = f * v[idx];
                h[(i, j)] -= upd;
            }
        }
        for i in 0..n {
            let mut dot = ZERO;
            for (idx, j) in (k + 1..n).enumerate() {
                dot += h[(i, j)] * v[idx];
            }
            let f = 2.0 * dot / vnorm2;
            for (idx, j) in (k + 1..n).enumerate() {
                let upd = f * v[idx].conj();
                h[(i, j)] -= upd;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagonal_matrix_sorted_spectrum() {
        let m = ComplexMatrix::diag(&[C64::new(3.0, 0.0), C64::new(1.0, 0.0), C64::new(2.0, 0.0)]);
        let (vals, _) = eig_hermitian(&m, 1e-10).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        assert!((vals[2] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum() {
        let sx = ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ONE, ZERO]]);
        let (vals, _) = eig_hermitian(&sx, 1e-10).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn random_hermitian_reconstruction_and_unitarity() {
        let n = 20;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let re = rng.random_range(-1.0..1.0);
                let im = rng.random_range(-1.0..1.0);
                if i == j {
                    m[(i, j)] = C64::new(re, 0.0);
                } else {
                    m[(i, j)] = C64::new(re, im);
                    m[(j, i)] = C64::new(re, -im);
                }
            }
        }
        let (vals, vecs) = eig_hermitian(&m, 1e-10).unwrap();
        // Reconstruct V diag(vals) V^dagger and compare to the input.
        let vd = ComplexMatrix::from_fn(n, n, |i, j| vecs[(i, j)] * vals[j]);
        let rec = &vd * &vecs.dagger();
        assert!((&rec - &m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
        // Unitarity of the eigenvector matrix.
        let vtv = &vecs.dagger() * &vecs;
        assert!((&vtv - &ComplexMatrix::identity(n)).frobenius_norm() < 1e-10);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let m = ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ZERO, ZERO]]);
        assert!(matches!(
            eig_hermitian(&m, 1e-10),
            Err(CoreError::NotHermitian { .. })
        ));
    }

    #[test]
    fn qr_eigenvalues_of_known_matrix() {
        // Companion matrix of (x-1)(x-2i)(x+3) = x^3 + (2 - 2i) x^2 + (-3 - 4i) x + 6i
        // roots: 1, 2i, -3
        let c0 = C64::new(0.0, 6.0);
        let c1 = C64::new(-3.0, -4.0);
        let c2 = C64::new(2.0, -2.0);
        let mut m = ComplexMatrix::zeros(3, 3);
        m[(0, 2)] = -c0;
        m[(1, 2)] = -c1;
        m[(2, 2)] = -c2;
        m[(1, 0)] = ONE;
        m[(2, 1)] = ONE;
        let mut eigs = complex_eigenvalues(&m).unwrap();
        eigs.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((eigs[0] - C64::new(-3.0, 0.0)).norm() < 1e-10);
        assert!((eigs[1] - C64::new(0.0, 2.0)).norm() < 1e-10);
        assert!((eigs[2] - C64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn qr_eigenvalues_random_dense() {
        let n = 12;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let eigs = complex_eigenvalues(&m).unwrap();
        // Trace and determinant-free check: sum of eigenvalues equals trace.
        let sum: C64 = eigs.iter().sum();
        assert!((sum - m.trace()).norm() < 1e-8);
    }
}
