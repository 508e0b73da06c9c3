//! Exact dense matrices over the rationals.
//!
//! Only desk-scale orders are needed (Vandermonde systems and oracles up to
//! 8x8), so plain Gaussian elimination with exact division is used throughout.

use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(VqError::DimensionMismatch(format!(
                "{}x{} matrix with {} entries",
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::from_integer(1.into());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(VqError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(VqError::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.entries.clone();
        let at = |m: &Vec<Rational>, r: usize, c: usize| m[r * n + c].clone();
        let mut det = Rational::from_integer(1.into());
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !at(&m, r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(Rational::zero()),
            };
            if pivot_row != col {
                for c in 0..n {
                    m.swap(pivot_row * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = at(&m, col, col);
            det *= &pivot;
            for r in (col + 1)..n {
                let factor = at(&m, r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * &at(&m, col, c);
                    m[r * n + c] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Exact solution of `self * x = b`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(VqError::DimensionMismatch(format!(
                "solving {}x{} system against rhs of length {}",
                self.rows,
                self.cols,
                b.len()
            )));
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.push(b[r].clone());
                row
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or_else(|| VqError::Singular(format!("zero pivot in column {col}")))?;
            aug.swap(col, pivot_row);
            let pivot = aug[col][col].clone();
            for c in col..=n {
                aug[col][c] = &aug[col][c] / &pivot;
            }
            for r in 0..n {
                if r == col || aug[r][col].is_zero() {
                    continue;
                }
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let sub = &factor * &aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
        Ok(aug.into_iter().map(|row| row[row.len() - 1].clone()).collect())
    }

    pub fn inverse(&self) -> Result<RationalMatrix> {
        if self.rows != self.cols {
            return Err(VqError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = RationalMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::from_integer(1.into());
            let col = self.solve(&e)?;
            for i in 0..n {
                *out.get_mut(i, j) = col[i].clone();
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn det_and_inverse_roundtrip() {
        let m = RationalMatrix::new(
            3,
            3,
            vec![
                rint(2), rint(1), rint(0),
                rint(1), rat(1, 2), rint(1),
                rint(0), rint(3), rint(-1),
            ],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
        assert_eq!(inv.mul(&m).unwrap(), RationalMatrix::identity(3));
    }

    #[test]
    fn singular_detected() {
        let m = RationalMatrix::new(2, 2, vec![rint(1), rint(2), rint(2), rint(4)]).unwrap();
        assert_eq!(m.det().unwrap(), rint(0));
        assert!(matches!(m.solve(&[rint(1), rint(1)]), Err(VqError::Singular(_))));
    }

    #[test]
    fn solve_exact() {
        let m = RationalMatrix::new(2, 2, vec![rint(1), rint(1), rint(1), rint(-1)]).unwrap();
        let x = m.solve(&[rint(3), rint(1)]).unwrap();
        assert_eq!(x, vec![rint(2), rint(1)]);
    }
}
