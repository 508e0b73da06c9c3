//! Graded operators on finite carriers, over exact Gaussian rationals.
//!
//! Entries are complex numbers with rational real and imaginary parts, so
//! algebraic identities among the realized generators come out as exact
//! zeros, not small residuals. The super-bracket is
//! `[[X, Y]] = XY - (-1)^(deg X deg Y) YX`.

use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::{to_f64, Rational};
use crate::rmatrix::RationalMatrix;

/// Dense matrix with exact rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMatrix {
    pub re: RationalMatrix,
    pub im: RationalMatrix,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { re: RationalMatrix::zeros(n, n), im: RationalMatrix::zeros(n, n) }
    }

    pub fn identity(n: usize) -> Self {
        CMatrix { re: RationalMatrix::identity(n), im: RationalMatrix::zeros(n, n) }
    }

    pub fn from_real(re: RationalMatrix) -> Self {
        let n = re.rows();
        CMatrix { re, im: RationalMatrix::zeros(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.re.rows()
    }

    pub fn set(&mut self, r: usize, c: usize, re: Rational, im: Rational) {
        *self.re.get_mut(r, c) = re;
        *self.im.get_mut(r, c) = im;
    }

    pub fn mul(&self, other: &CMatrix) -> Result<CMatrix> {
        let ac = self.re.mul(&other.re)?;
        let bd = self.im.mul(&other.im)?;
        let ad = self.re.mul(&other.im)?;
        let bc = self.im.mul(&other.re)?;
        Ok(CMatrix { re: sub(&ac, &bd), im: add(&ad, &bc) })
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        CMatrix { re: add(&self.re, &other.re), im: add(&self.im, &other.im) }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        CMatrix { re: sub(&self.re, &other.re), im: sub(&self.im, &other.im) }
    }

    pub fn neg(&self) -> CMatrix {
        CMatrix::zeros(self.dim()).sub(self)
    }

    /// Scalar multiplication by `re + i im`.
    pub fn scale(&self, re: &Rational, im: &Rational) -> CMatrix {
        let a = scale(&self.re, re);
        let b = scale(&self.im, im);
        let c = scale(&self.re, im);
        let d = scale(&self.im, re);
        CMatrix { re: sub(&a, &b), im: add(&c, &d) }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        let n = self.dim();
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                *out.re.get_mut(c, r) = self.re.get(r, c).clone();
                *out.im.get_mut(c, r) = -self.im.get(r, c).clone();
            }
        }
        out
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (n, m) = (self.dim(), other.dim());
        let mut out = CMatrix::zeros(n * m);
        for br in 0..n {
            for bc in 0..n {
                let (a, b) = (self.re.get(br, bc).clone(), self.im.get(br, bc).clone());
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                for r in 0..m {
                    for c in 0..m {
                        let (x, y) = (other.re.get(r, c), other.im.get(r, c));
                        if x.is_zero() && y.is_zero() {
                            continue;
                        }
                        *out.re.get_mut(br * m + r, bc * m + c) = &a * x - &b * y;
                        *out.im.get_mut(br * m + r, bc * m + c) = &a * y + &b * x;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.max_abs() == 0.0
    }

    /// Largest entry magnitude as f64, for residual reporting.
    pub fn max_abs(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in 0..n {
                let re = to_f64(self.re.get(r, c));
                let im = to_f64(self.im.get(r, c));
                worst = worst.max(re.hypot(im));
            }
        }
        worst
    }

    /// Largest entry magnitude over rows and columns in `lo..=hi`.
    pub fn max_abs_block(&self, lo: usize, hi: usize) -> f64 {
        let mut worst = 0.0f64;
        for r in lo..=hi {
            for c in lo..=hi {
                let re = to_f64(self.re.get(r, c));
                let im = to_f64(self.im.get(r, c));
                worst = worst.max(re.hypot(im));
            }
        }
        worst
    }

    /// Exact zero test on the block with rows and columns in `lo..=hi`.
    pub fn block_is_zero(&self, lo: usize, hi: usize) -> bool {
        for r in lo..=hi {
            for c in lo..=hi {
                if !self.re.get(r, c).is_zero() || !self.im.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn add(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            *out.get_mut(r, c) += b.get(r, c);
        }
    }
    out
}

fn sub(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            *out.get_mut(r, c) -= b.get(r, c);
        }
    }
    out
}

fn scale(a: &RationalMatrix, s: &Rational) -> RationalMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            *out.get_mut(r, c) *= s;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// bosonic
    Even,
    /// fermionic
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOperator {
    pub mat: CMatrix,
    pub degree: Parity,
}

impl GradedOperator {
    pub fn even(mat: CMatrix) -> Self {
        GradedOperator { mat, degree: Parity::Even }
    }

    pub fn odd(mat: CMatrix) -> Self {
        GradedOperator { mat, degree: Parity::Odd }
    }

    pub fn adjoint(&self) -> GradedOperator {
        GradedOperator { mat: self.mat.adjoint(), degree: self.degree }
    }
}

/// `XY - (-1)^(deg X deg Y) YX`, of degree `deg X + deg Y (mod 2)`.
pub fn super_bracket(x: &GradedOperator, y: &GradedOperator) -> Result<GradedOperator> {
    if x.mat.dim() != y.mat.dim() {
        return Err(VqError::DimensionMismatch(format!(
            "super bracket between carriers of dimension {} and {}",
            x.mat.dim(),
            y.mat.dim()
        )));
    }
    let xy = x.mat.mul(&y.mat)?;
    let yx = y.mat.mul(&x.mat)?;
    let anticommute = x.degree == Parity::Odd && y.degree == Parity::Odd;
    let mat = if anticommute { xy.add(&yx) } else { xy.sub(&yx) };
    let degree = if x.degree == y.degree { Parity::Even } else { Parity::Odd };
    Ok(GradedOperator { mat, degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graded(rng: &mut ChaCha8Rng, n: usize, degree: Parity) -> GradedOperator {
        let mut m = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(
                    r,
                    c,
                    rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
                    rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
                );
            }
        }
        GradedOperator { mat: m, degree }
    }

    #[test]
    fn bracket_reduces_to_commutator_and_anticommutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = random_graded(&mut rng, 3, Parity::Even);
        let y = random_graded(&mut rng, 3, Parity::Even);
        let comm = super_bracket(&x, &y).unwrap();
        let direct = x.mat.mul(&y.mat).unwrap().sub(&y.mat.mul(&x.mat).unwrap());
        assert_eq!(comm.mat, direct);
        assert_eq!(comm.degree, Parity::Even);

        let f = random_graded(&mut rng, 3, Parity::Odd);
        let g = random_graded(&mut rng, 3, Parity::Odd);
        let anti = super_bracket(&f, &g).unwrap();
        let direct = f.mat.mul(&g.mat).unwrap().add(&g.mat.mul(&f.mat).unwrap());
        assert_eq!(anti.mat, direct);
        assert_eq!(anti.degree, Parity::Even);

        let mixed = super_bracket(&x, &f).unwrap();
        assert_eq!(mixed.degree, Parity::Odd);
    }

    #[test]
    fn super_jacobi_identity_exact() {
        // [[X, [[Y, Z]]]] = [[[[X, Y]], Z]] + (-1)^(deg X deg Y) [[Y, [[X, Z]]]]
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let parities = [Parity::Even, Parity::Odd];
        for &px in &parities {
            for &py in &parities {
                for &pz in &parities {
                    let x = random_graded(&mut rng, 3, px);
                    let y = random_graded(&mut rng, 3, py);
                    let z = random_graded(&mut rng, 3, pz);
                    let lhs = super_bracket(&x, &super_bracket(&y, &z).unwrap()).unwrap();
                    let t1 = super_bracket(&super_bracket(&x, &y).unwrap(), &z).unwrap();
                    let t2 = super_bracket(&y, &super_bracket(&x, &z).unwrap()).unwrap();
                    let sign = if px == Parity::Odd && py == Parity::Odd { rint(-1) } else { rint(1) };
                    let rhs = t1.mat.add(&t2.mat.scale(&sign, &rint(0)));
                    let defect = lhs.mat.sub(&rhs);
                    assert!(defect.is_zero(), "parities {px:?} {py:?} {pz:?}");
                }
            }
        }
    }

    #[test]
    fn bracket_adjoint_compatibility() {
        // ([[X, Y]])^+ = [[Y^+, X^+]] for every parity combination
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let parities = [Parity::Even, Parity::Odd];
        for &px in &parities {
            for &py in &parities {
                let x = random_graded(&mut rng, 4, px);
                let y = random_graded(&mut rng, 4, py);
                let lhs = super_bracket(&x, &y).unwrap().mat.adjoint();
                let rhs = super_bracket(&y.adjoint(), &x.adjoint()).unwrap().mat;
                assert_eq!(lhs, rhs, "parities {px:?} {py:?}");
            }
        }
    }

    #[test]
    fn carrier_mismatch_rejected() {
        let x = GradedOperator::even(CMatrix::identity(2));
        let y = GradedOperator::even(CMatrix::identity(3));
        assert!(matches!(super_bracket(&x, &y), Err(VqError::DimensionMismatch(_))));
    }

    #[test]
    fn kron_and_adjoint() {
        let mut a = CMatrix::zeros(2);
        a.set(0, 1, rint(1), rint(2));
        let mut b = CMatrix::zeros(2);
        b.set(1, 0, rint(3), rint(-1));
        let k = a.kron(&b);
        // entry ((0,1),(1,0)) -> row 0*2+1 = 1, col 1*2+0 = 2
        assert_eq!(k.re.get(1, 2), &rint(5)); // (1+2i)(3-i) = 5+5i
        assert_eq!(k.im.get(1, 2), &rint(5));
        let adj = k.adjoint();
        assert_eq!(adj.re.get(2, 1), &rint(5));
        assert_eq!(adj.im.get(2, 1), &rint(-5));
    }
}
