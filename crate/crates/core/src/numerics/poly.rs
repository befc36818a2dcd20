//! Even polynomials and their zero points.
//!
//! Transfer-matrix eigenvalues are even functions of the shifted spectral
//! parameter v, so they are represented once in the halved variable w = v^2.
//! Fitting works on scaled monomials through a Householder QR least-squares
//! solve; roots come from the companion matrix of the w-polynomial and each
//! w-root expands into the pair +/- sqrt(w).

use super::cmatrix::{C64, ComplexMatrix, ONE, ZERO};
use super::eig::complex_eigenvalues;
use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// Polynomial P(v) = sum_j c_j (v^2)^j, stored by its coefficients in w = v^2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvenPoly {
    /// c_0 .. c_m with m = degree in v^2.
    pub coeffs: Vec<C64>,
}

impl EvenPoly {
    pub fn new(coeffs: Vec<C64>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn degree_in_v2(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> C64 {
        *self.coeffs.last().unwrap()
    }

    /// Evaluate at w = v^2 (Horner).
    pub fn eval_w(&self, w: C64) -> C64 {
        let mut acc = ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * w + c;
        }
        acc
    }

    /// Evaluate at the original variable v.
    pub fn eval_v(&self, v: C64) -> C64 {
        self.eval_w(v * v)
    }

    /// d/dw of the w-polynomial.
    pub fn derivative_w(&self) -> EvenPoly {
        if self.coeffs.len() == 1 {
            return EvenPoly::new(vec![ZERO]);
        }
        EvenPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * ((k + 1) as f64))
                .collect(),
        )
    }

    /// Largest coefficient magnitude; the natural scale for residual checks.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// |P(v)| normalized by the largest term magnitude at that point, which
    /// is the resolution limit of evaluation in double precision.
    pub fn scaled_residual_at(&self, v: C64) -> f64 {
        let w = v * v;
        let mut term_scale = 0.0f64;
        let mut wp = ONE;
        for &c in &self.coeffs {
            term_scale = term_scale.max((c * wp).norm());
            wp *= w;
        }
        self.eval_w(w).norm() / term_scale.max(f64::MIN_POSITIVE)
    }
}

/// Interpolate an even polynomial of the given degree in v^2 through the
/// samples (v_i, value_i). Requires at least degree+1 samples with distinct
/// v^2; extra samples turn the square solve into least squares, and the
/// result must still pass through every sample within `fit_tol` relative to
/// the largest sample.
pub fn fit_even_poly(
    samples: &[(C64, C64)],
    degree_in_v2: usize,
    fit_tol: f64,
    condition_max: f64,
) -> Result<EvenPoly> {
    let m = degree_in_v2 + 1;
    if samples.len() < m {
        return Err(CoreError::Shape(format!(
            "need at least {m} samples for degree {degree_in_v2} in v^2, got {}",
            samples.len()
        )));
    }
    let ws: Vec<C64> = samples.iter().map(|&(v, _)| v * v).collect();
    let wmax = ws.iter().map(|w| w.norm()).fold(0.0, f64::max).max(1e-300);
    for (i, wi) in ws.iter().enumerate() {
        for wj in &ws[..i] {
            if (wi - wj).norm() <= 1e-14 * wmax {
                return Err(CoreError::Shape(
                    "duplicate v^2 interpolation nodes".into(),
                ));
            }
        }
    }

    // Scaled Vandermonde in w/wmax.
    let a = ComplexMatrix::from_fn(samples.len(), m, |i, j| {
        let mut p = ONE;
        let x = ws[i] / wmax;
        for _ in 0..j {
            p *= x;
        }
        p
    });
    let rhs: Vec<C64> = samples.iter().map(|&(_, y)| y).collect();
    let (scaled, cond) = qr_lstsq(&a, &rhs)?;
    if cond > condition_max {
        return Err(CoreError::IllConditioned {
            estimate: cond,
            max: condition_max,
        });
    }
    let mut coeffs = scaled;
    let mut div = 1.0;
    for c in coeffs.iter_mut() {
        *c /= div;
        div *= wmax;
    }
    let poly = EvenPoly::new(coeffs);

    let scale = rhs.iter().map(|y| y.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let worst = samples
        .iter()
        .map(|&(v, y)| (poly.eval_v(v) - y).norm())
        .fold(0.0, f64::max);
    if worst > fit_tol * scale {
        return Err(CoreError::FitResidual {
            residual: worst / scale,
            tol: fit_tol,
        });
    }
    Ok(poly)
}

/// All roots in the v variable, returned as one representative per +/- pair
/// (so `degree_in_v2` entries; the full root set is the returned values and
/// their negatives). Each w-root is polished by Newton iteration before the
/// square root is taken.
pub fn even_poly_roots(p: &EvenPoly, leading_floor: f64, eval_tol: f64) -> Result<Vec<C64>> {
    let scale = p.coeff_scale();
    if p.leading().norm() <= leading_floor * scale.max(f64::MIN_POSITIVE) {
        return Err(CoreError::DegenerateLeadingCoeff {
            magnitude: p.leading().norm(),
            tol: leading_floor * scale,
        });
    }
    let m = p.degree_in_v2();
    if m == 0 {
        return Ok(vec![]);
    }
    // Monic coefficients in w, with a variable scaling to balance magnitudes.
    let lead = p.leading();
    let monic: Vec<C64> = p.coeffs[..m].iter().map(|&c| c / lead).collect();
    let s = monic
        .iter()
        .enumerate()
        .map(|(j, c)| c.norm().powf(1.0 / (m - j) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-150);
    let scaled: Vec<C64> = monic
        .iter()
        .enumerate()
        .map(|(j, &c)| c / s.powi((m - j) as i32))
        .collect();

    let mut comp = ComplexMatrix::zeros(m, m);
    for i in 1..m {
        comp[(i, i - 1)] = ONE;
    }
    for i in 0..m {
        comp[(i, m - 1)] = -scaled[i];
    }
    let mut w_roots = complex_eigenvalues(&comp)?;
    for w in w_roots.iter_mut() {
        *w *= s;
        *w = newton_polish_w(p, *w);
    }

    let dp = p.derivative_w();
    let mut out = Vec::with_capacity(m);
    for w in w_roots {
        let v = w.sqrt();
        let v = canonical_pair_rep(v);
        let residual = p.scaled_residual_at(v);
        if residual > eval_tol {
            // One more polish attempt in w before giving up.
            let w2 = newton_polish_w(p, v * v);
            let v2 = canonical_pair_rep(w2.sqrt());
            if p.scaled_residual_at(v2) > eval_tol {
                return Err(CoreError::Reconstruction(format!(
                    "root residual {:.3e} above {:.1e} at v = {} (|P'| = {:.3e})",
                    p.scaled_residual_at(v2),
                    eval_tol,
                    v2,
                    dp.eval_w(w2).norm()
                )));
            }
            out.push(v2);
        } else {
            out.push(v);
        }
    }
    Ok(out)
}

fn newton_polish_w(p: &EvenPoly, mut w: C64) -> C64 {
    let dp = p.derivative_w();
    for _ in 0..8 {
        let f = p.eval_w(w);
        let d = dp.eval_w(w);
        if d.norm() == 0.0 {
            break;
        }
        let step = f / d;
        let next = w - step;
        if !next.re.is_finite() || !next.im.is_finite() {
            break;
        }
        // Only accept steps that do not increase |P|.
        if p.eval_w(next).norm() <= f.norm() {
            w = next;
        } else {
            break;
        }
        if step.norm() <= 1e-15 * w.norm().max(1.0) {
            break;
        }
    }
    w
}

/// Pick the representative of the +/- pair: positive imaginary part, ties
/// broken toward positive real part.
pub fn canonical_pair_rep(v: C64) -> C64 {
    let tol = 1e-12 * v.norm().max(1.0);
    if v.im > tol || (v.im.abs() <= tol && v.re >= 0.0) {
        v
    } else {
        -v
    }
}

/// Householder QR least squares for complex systems; returns the solution and
/// a condition estimate (ratio of extreme |R_jj|).
fn qr_lstsq(a: &ComplexMatrix, b: &[C64]) -> Result<(Vec<C64>, f64)> {
    let nrow = a.rows();
    let ncol = a.cols();
    assert!(nrow >= ncol);
    assert_eq!(nrow, b.len());
    let mut r = a.clone();
    let mut rhs = b.to_vec();
    for k in 0..ncol {
        let mut v: Vec<C64> = (k..nrow).map(|i| r[(i, k)]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(CoreError::IllConditioned {
                estimate: f64::INFINITY,
                max: 0.0,
            });
        }
        let alpha = v[0];
        let phase = if alpha == ZERO { ONE } else { alpha / alpha.norm() };
        v[0] += phase * norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        for j in k..ncol {
            let mut dot = ZERO;
            for (idx, i) in (k..nrow).enumerate() {
                dot += v[idx].conj() * r[(i, j)];
            }
            let f = 2.0 * dot / vnorm2;
            for (idx, i) in (k..nrow).enumerate() {
                let upd = f * v[idx];
                r[(i, j)] -= upd;
            }
        }
        let mut dot = ZERO;
        for (idx, i) in (k..nrow).enumerate() {
            dot += v[idx].conj() * rhs[i];
        }
        let f = 2.0 * dot / vnorm2;
        for (idx, i) in (k..nrow).enumerate() {
            let upd = f * v[idx];
            rhs[i] -= upd;
        }
    }
    let mut diag_min = f64::INFINITY;
    let mut diag_max = 0.0f64;
    for k in 0..ncol {
        let d = r[(k, k)].norm();
        diag_min = diag_min.min(d);
        diag_max = diag_max.max(d);
    }
    let cond = if diag_min == 0.0 {
        f64::INFINITY
    } else {
        diag_max / diag_min
    };
    // Back substitution on the upper triangle.
    let mut x = vec![ZERO; ncol];
    for k in (0..ncol).rev() {
        let mut acc = rhs[k];
        for j in k + 1..ncol {
            acc -= r[(k, j)] * x[j];
        }
        if r[(k, k)] == ZERO {
            return Err(CoreError::IllConditioned {
                estimate: f64::INFINITY,
                max: 0.0,
            });
        }
        x[k] = acc / r[(k, k)];
    }
    Ok((x, cond))
}
