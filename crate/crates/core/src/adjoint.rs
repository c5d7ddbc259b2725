//! The complex adjoint `χ(A)` of a quaternion matrix.
//!
//! Writing `A = A₀ + A₁𝐣` with complex `A₀, A₁`, `χ(A)` is the block matrix
//! `[[A₀, A₁], [-conj(A₁), conj(A₀)]]`. The map is an algebra homomorphism
//! with `χ(A*) = χ(A)ᴴ`, and for Hermitian `A` its ordinary determinant is the
//! square of the Hermitian determinant. Its elimination-based determinant
//! shares no code with the permutation sums and serves as their oracle.

use alloc::format;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| (a.re - b.re).abs().max((a.im - b.im).abs()))
                .fold(0.0, f64::max),
        )
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Result<Complex64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&p, &q| m[p * n + k].norm_sqr().total_cmp(&m[q * n + k].norm_sqr()))
                .expect("non-empty range");
            if m[pivot * n + k].norm_sqr() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if pivot != k {
                for j in 0..n {
                    m.swap(k * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = m[k * n + k];
            det *= p;
            for i in k + 1..n {
                let f = m[i * n + k] / p;
                if f.norm_sqr() == 0.0 {
                    continue;
                }
                for j in k..n {
                    let v = m[k * n + j];
                    m[i * n + j] -= f * v;
                }
            }
        }
        Ok(det)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// `χ(A)` for an `n×m` quaternion matrix, a `2n×2m` complex matrix.
pub fn complex_adjoint(a: &QMatrix) -> CMatrix {
    let (n, m) = (a.rows(), a.cols());
    let mut out = CMatrix::zeros(2 * n, 2 * m);
    for i in 0..n {
        for j in 0..m {
            let q = a[(i, j)];
            // q = (w + x𝐢) + (y + z𝐢)𝐣
            let a0 = Complex64::new(q.w(), q.x());
            let a1 = Complex64::new(q.y(), q.z());
            out[(i, j)] = a0;
            out[(i, m + j)] = a1;
            out[(n + i, j)] = -a1.conj();
            out[(n + i, m + j)] = a0.conj();
        }
    }
    out
}
