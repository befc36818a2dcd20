//! Spin-1 and spin-1/2 operator matrices.

use crate::numerics::{C64, ComplexMatrix, ONE, ZERO};

/// The three spin-1 generators in the S^z basis (1, 0, -1).
#[derive(Debug, Clone)]
pub struct SpinOperators {
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

impl SpinOperators {
    pub fn spin1() -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let c = |re: f64, im: f64| C64::new(re, im);
        let sx = ComplexMatrix::from_rows(&[
            vec![ZERO, c(r, 0.0), ZERO],
            vec![c(r, 0.0), ZERO, c(r, 0.0)],
            vec![ZERO, c(r, 0.0), ZERO],
        ]);
        let sy = ComplexMatrix::from_rows(&[
            vec![ZERO, c(0.0, -r), ZERO],
            vec![c(0.0, r), ZERO, c(0.0, -r)],
            vec![ZERO, c(0.0, r), ZERO],
        ]);
        let sz = ComplexMatrix::diag(&[ONE, ZERO, -ONE]);
        Self { sx, sy, sz }
    }

    pub fn as_array(&self) -> [&ComplexMatrix; 3] {
        [&self.sx, &self.sy, &self.sz]
    }
}

/// Pauli matrices (sigma_x, sigma_y, sigma_z).
pub fn pauli() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let c = |re: f64, im: f64| C64::new(re, im);
    let sx = ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ONE, ZERO]]);
    let sy = ComplexMatrix::from_rows(&[vec![ZERO, c(0.0, -1.0)], vec![c(0.0, 1.0), ZERO]]);
    let sz = ComplexMatrix::diag(&[ONE, -ONE]);
    (sx, sy, sz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::I;

    #[test]
    fn su2_commutators() {
        let s = SpinOperators::spin1();
        // [Sx, Sy] = i Sz and cyclic permutations
        let pairs = [
            (&s.sx, &s.sy, &s.sz),
            (&s.sy, &s.sz, &s.sx),
            (&s.sz, &s.sx, &s.sy),
        ];
        for (a, b, c) in pairs {
            let comm = a.commutator(b);
            let want = c.scale(I);
            assert!((&comm - &want).frobenius_norm() < 1e-14);
        }
    }

    #[test]
    fn casimir_is_two() {
        let s = SpinOperators::spin1();
        let c2 = &(&(&s.sx * &s.sx) + &(&s.sy * &s.sy)) + &(&s.sz * &s.sz);
        let want = ComplexMatrix::identity(3).scale(C64::new(2.0, 0.0));
        assert!((&c2 - &want).frobenius_norm() < 1e-14);
    }
}
