//! Quadrature over the half line.
//!
//! Every integrand in the thermodynamic module decays exponentially, so the
//! half line is covered by fixed-width panels, each integrated with adaptive
//! Simpson refinement, until the panel contributions fall below the target.
//! A separate routine handles oscillatory Fourier integrals with algebraic
//! decay via half-period summation accelerated by repeated averaging.

use super::cmatrix::C64;
use crate::error::{CoreError, Result};

/// Integrate f over [0, inf) to absolute accuracy `tol`. Integrands are
/// assumed smooth with (eventually) exponential decay; integrands that are
/// symmetric over the whole line can be handled by doubling the result.
pub fn quad_semiinfinite(f: &dyn Fn(f64) -> f64, tol: f64) -> Result<f64> {
    let panel_width = 2.0;
    let max_panels = 2000;
    let mut total = 0.0;
    let mut quiet_panels = 0;
    for k in 0..max_panels {
        let a = k as f64 * panel_width;
        let b = a + panel_width;
        let panel_tol = (tol / 8.0).max(1e-18) / (1.0 + 0.05 * k as f64);
        let val = adaptive_simpson(f, a, b, panel_tol, 32);
        total += val;
        let envelope = f(a).abs().max(f(a + 0.5 * panel_width).abs()).max(f(b).abs());
        if val.abs() < tol / 8.0 && envelope * panel_width < tol / 8.0 {
            quiet_panels += 1;
            if quiet_panels >= 3 {
                return Ok(total);
            }
        } else {
            quiet_panels = 0;
        }
    }
    Err(CoreError::QuadratureNoConvergence {
        best: total,
        error: f(max_panels as f64 * panel_width).abs() * panel_width,
        tol,
    })
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    simpson_step(f, a, b, fa, fb, fc, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let fd = f(d);
    let fe = f(e);
    let left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
    let right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, c, fa, fc, fd, left, tol / 2.0, depth - 1)
            + simpson_step(f, c, b, fc, fb, fe, right, tol / 2.0, depth - 1)
    }
}

/// Fourier transform \int_{-inf}^{inf} f(u) e^{2 i u w} du of a smooth real
/// function with algebraic decay (the convolution kernels are Lorentzians).
///
/// For w != 0 the integral over [0, inf) of f(u) e^{2iuw} + f(-u) e^{-2iuw}
/// is summed over half-periods of the oscillation and the alternating tail
/// is resummed by iterated averaging. For w = 0 the tail is closed with an
/// asymptotic 1/u^2 series fitted from samples.
pub fn fourier_line_integral(f: &dyn Fn(f64) -> f64, w: f64, tol: f64) -> Result<C64> {
    if w == 0.0 {
        let g = |u: f64| f(u) + f(-u);
        // Integrate far enough that the remainder estimate from a c2/u^2
        // tail model is below tolerance, then add the modeled tail.
        let l = 600.0;
        let head = adaptive_panels(&g, 0.0, l, tol / 4.0);
        let c2 = g(l) * l * l;
        let c2b = g(2.0 * l) * 4.0 * l * l;
        let tail = c2 / l; // integral of c2/u^2 from l
        let model_err = (c2 - c2b).abs() / l;
        if model_err > tol {
            return Err(CoreError::QuadratureNoConvergence {
                best: head + tail,
                error: model_err,
                tol,
            });
        }
        return Ok(C64::new(head + tail, 0.0));
    }

    let re_part = |u: f64| (f(u) + f(-u)) * (2.0 * u * w).cos();
    let im_part = |u: f64| (f(u) - f(-u)) * (2.0 * u * w).sin();
    let re = oscillatory_halfline(&re_part, w.abs(), tol)?;
    let im = oscillatory_halfline(&im_part, w.abs(), tol)?;
    Ok(C64::new(re, im))
}

/// Sum of integrals over half-periods [k pi / (2|w|), (k+1) pi / (2|w|)),
/// resummed with a triangular averaging scheme (Euler transformation of the
/// eventually alternating partial sums).
fn oscillatory_halfline(g: &dyn Fn(f64) -> f64, w: f64, tol: f64) -> Result<f64> {
    let half_period = std::f64::consts::PI / (2.0 * w);
    let n_min = 24usize;
    let n_max = 160usize;
    let mut partials: Vec<f64> = Vec::with_capacity(n_max);
    let mut acc = 0.0;
    for k in 0..n_max {
        let a = k as f64 * half_period;
        let b = a + half_period;
        acc += adaptive_simpson(g, a, b, tol / 16.0, 24);
        partials.push(acc);
        if k + 1 >= n_min {
            let (value, err) = averaged_limit(&partials);
            if err < tol / 2.0 {
                return Ok(value);
            }
        }
    }
    let (value, err) = averaged_limit(&partials);
    if err < tol {
        Ok(value)
    } else {
        Err(CoreError::QuadratureNoConvergence {
            best: value,
            error: err,
            tol,
        })
    }
}

/// Repeatedly average neighbouring partial sums; for alternating remainders
/// each pass gains roughly a factor of two. Returns the extrapolated limit
/// and a crude error estimate from the last contraction.
fn averaged_limit(partials: &[f64]) -> (f64, f64) {
    let tail = 18.min(partials.len());
    let mut row: Vec<f64> = partials[partials.len() - tail..].to_vec();
    let mut last_spread = f64::INFINITY;
    while row.len() > 1 {
        let next: Vec<f64> = row.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
        last_spread = next
            .windows(2)
            .map(|p| (p[1] - p[0]).abs())
            .fold(0.0, f64::max)
            .max((next[next.len() - 1] - row[row.len() - 1]).abs() * 1e-2);
        row = next;
    }
    (row[0], last_spread.max(f64::EPSILON * row[0].abs()))
}

fn adaptive_panels(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let panels = ((b - a) / 4.0).ceil() as usize;
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for k in 0..panels {
        let lo = a + k as f64 * width;
        total += adaptive_simpson(f, lo, lo + width, tol / panels as f64, 24);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential_decay_basics() {
        let v = quad_semiinfinite(&|w| (-w).exp(), 1e-10).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
        let v = quad_semiinfinite(&|w| (-2.0 * w).exp(), 1e-10).unwrap();
        assert!((v - 0.5).abs() < 1e-10);
    }

    #[test]
    fn first_moment_of_exponential() {
        // closed-form antiderivative: -(w+1) e^{-w}, so the integral is 1
        let v = quad_semiinfinite(&|w| w * (-w).exp(), 1e-10).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn slow_exponents_converge() {
        let v = quad_semiinfinite(&|w| (-0.2 * w).exp(), 1e-10).unwrap();
        assert!((v - 5.0).abs() < 1e-9);
    }

    #[test]
    fn lorentzian_fourier_pair() {
        // a_n(u) = n / (2 pi (u^2 + n^2/4)) transforms to e^{-n|w|}
        for &n in &[1.0f64, 2.0, 3.0] {
            let f = move |u: f64| n / (2.0 * PI * (u * u + n * n / 4.0));
            for &w in &[0.3f64, -0.5, 1.0] {
                let got = fourier_line_integral(&f, w, 1e-9).unwrap();
                let want = (-n * w.abs()).exp();
                assert!(
                    (got.re - want).abs() < 1e-8 && got.im.abs() < 1e-8,
                    "n={n} w={w}: got {got}, want {want}"
                );
            }
            let got = fourier_line_integral(&f, 0.0, 1e-9).unwrap();
            assert!((got.re - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn odd_lorentzian_fourier_pair() {
        // b_n(u) = 2u / (2 pi (u^2 + n^2/4)) transforms to i sign(w) e^{-n|w|}
        let n = 2.0;
        let f = move |u: f64| 2.0 * u / (2.0 * PI * (u * u + n * n / 4.0));
        let got = fourier_line_integral(&f, 0.5, 1e-9).unwrap();
        assert!((got.im - (-1.0f64).exp()).abs() < 1e-8, "got {got}");
        assert!(got.re.abs() < 1e-8);
        let got = fourier_line_integral(&f, -0.5, 1e-9).unwrap();
        assert!((got.im + (-1.0f64).exp()).abs() < 1e-8);
    }
}
