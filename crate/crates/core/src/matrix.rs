//! Dense row-major quaternion matrices.

use alloc::format;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::quat::Quaternion;

#[derive(Clone, PartialEq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Quaternion::ONE
            } else {
                Quaternion::ZERO
            }
        })
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Quaternion::real(values[i])
            } else {
                Quaternion::ZERO
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Quaternion,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows(rows: &[&[Quaternion]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Quaternion] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// `A*`: transpose with every entry conjugated.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Quaternion::ZERO;
            for k in 0..self.cols {
                acc += self[(i, k)] * other[(k, j)];
            }
            acc
        }))
    }

    /// `A A*`.
    pub fn gram_rows(&self) -> QMatrix {
        self.matmul(&self.conj_transpose()).expect("shapes agree")
    }

    /// `A* A`.
    pub fn gram_cols(&self) -> QMatrix {
        self.conj_transpose().matmul(self).expect("shapes agree")
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &QMatrix,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| f(*a, *b))
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<QMatrix> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.rows,
                });
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    size: self.cols,
                });
            }
        }
        Ok(Self::from_fn(rows.len(), cols.len(), |a, b| {
            self[(rows[a], cols[b])]
        }))
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<QMatrix> {
        self.submatrix(idx, idx)
    }

    /// Largest componentwise deviation between two equally shaped matrices,
    /// or `None` when the shapes differ.
    pub fn max_abs_diff(&self, other: &QMatrix) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.max_abs_diff(b))
                .fold(0.0, f64::max),
        )
    }

    /// Largest componentwise deviation of `A - A*`; `None` if not square.
    pub fn hermitian_deviation(&self) -> Option<f64> {
        if !self.is_square() {
            return None;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max(self[(i, j)].max_abs_diff(&self[(j, i)].conj()));
            }
        }
        Some(dev)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation().is_some_and(|d| d <= tol)
    }

    /// Replaces row `i` by `row(i) + Σ c · row(k)` (coefficients on the left).
    pub fn add_left_row_combination(&self, i: usize, terms: &[(Quaternion, usize)]) -> QMatrix {
        let mut out = self.clone();
        for j in 0..self.cols {
            let mut v = self[(i, j)];
            for &(c, k) in terms {
                v += c * self[(k, j)];
            }
            out[(i, j)] = v;
        }
        out
    }

    /// Replaces column `j` by `col(j) + Σ col(k) · c` (coefficients on the right).
    pub fn add_right_col_combination(&self, j: usize, terms: &[(Quaternion, usize)]) -> QMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            let mut v = self[(i, j)];
            for &(c, k) in terms {
                v += self[(i, k)] * c;
            }
            out[(i, j)] = v;
        }
        out
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_wrong_length() {
        assert!(QMatrix::new(2, 2, vec![Quaternion::ONE; 3]).is_err());
    }

    #[test]
    fn conj_transpose_and_products() {
        let a = QMatrix::from_rows(&[
            &[Quaternion::I, Quaternion::J],
            &[Quaternion::ZERO, Quaternion::ONE],
        ])
        .unwrap();
        let at = a.conj_transpose();
        assert_eq!(at[(0, 0)], -Quaternion::I);
        assert_eq!(at[(1, 0)], -Quaternion::J);
        let g = a.gram_rows();
        assert!(g.is_hermitian(0.0));
        assert_eq!(g[(0, 0)], Quaternion::real(2.0));
        assert!(a.matmul(&QMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn submatrix_bounds() {
        let a = QMatrix::identity(3);
        assert_eq!(a.submatrix(&[0, 2], &[2]).unwrap()[(1, 0)], Quaternion::ONE);
        assert!(a.submatrix(&[3], &[0]).is_err());
    }

    #[test]
    fn hermitian_check() {
        let mut a = QMatrix::identity(2);
        a[(0, 1)] = Quaternion::J;
        assert!(!a.is_hermitian(1e-9));
        a[(1, 0)] = -Quaternion::J;
        assert!(a.is_hermitian(1e-9));
        assert!(!QMatrix::zeros(2, 3).is_hermitian(1.0));
    }
}
