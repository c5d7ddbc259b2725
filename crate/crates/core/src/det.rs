//! Row and column determinants of quaternion matrices and the quantities
//! built on them: the Hermitian determinant, principal-minor sums, the
//! characteristic polynomial, invertibility and determinantal rank.

use alloc::format;
use alloc::vec::Vec;

use crate::arrangement::{signed_sum, Reading};
use crate::combinatorics::Combinations;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::sum::CompensatedSum;

fn check_square(a: &QMatrix, pivot: usize, cfg: &Config) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() > cfg.size_cap {
        return Err(Error::SizeCapExceeded {
            size: a.rows(),
            cap: cfg.size_cap,
        });
    }
    if pivot >= a.rows() {
        return Err(Error::IndexOutOfRange {
            index: pivot,
            size: a.rows(),
        });
    }
    Ok(())
}

/// Row determinant `rdet_i A` for a zero-based row index `i`.
pub fn rdet(a: &QMatrix, i: usize, cfg: &Config) -> Result<Quaternion> {
    check_square(a, i, cfg)?;
    Ok(signed_sum(a, i, Reading::Row, cfg.leader_order))
}

/// Column determinant `cdet_j A` for a zero-based column index `j`.
pub fn cdet(a: &QMatrix, j: usize, cfg: &Config) -> Result<Quaternion> {
    check_square(a, j, cfg)?;
    Ok(signed_sum(a, j, Reading::Column, cfg.leader_order))
}

fn check_hermitian(a: &QMatrix, tol: f64) -> Result<()> {
    match a.hermitian_deviation() {
        None => Err(Error::DimensionMismatch(format!(
            "{}x{} matrix is not square",
            a.rows(),
            a.cols()
        ))),
        Some(d) if d > tol => Err(Error::NotHermitian { deviation: d }),
        Some(_) => Ok(()),
    }
}

fn real_part(q: Quaternion, tol: f64) -> Result<f64> {
    let residue = q.im_norm();
    if residue > tol * q.re().abs().max(1.0) {
        return Err(Error::NotReal { residue });
    }
    Ok(q.re())
}

/// Determinant of a Hermitian matrix, taken as the row determinant at row 0.
///
/// The empty matrix has determinant 1.
pub fn det_hermitian(a: &QMatrix, cfg: &Config) -> Result<f64> {
    check_hermitian(a, cfg.tol)?;
    if a.rows() == 0 {
        return Ok(1.0);
    }
    real_part(rdet(a, 0, cfg)?, cfg.tol)
}

/// All `2n` row and column determinants of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianDet {
    pub value: f64,
    pub rdets: Vec<Quaternion>,
    pub cdets: Vec<Quaternion>,
    /// Largest componentwise distance between any two of the `2n` values.
    pub spread: f64,
    /// Largest imaginary residue among them.
    pub residue: f64,
}

/// Verification-mode Hermitian determinant: computes every `rdet_i` and
/// `cdet_i` and fails unless they agree within `cfg.tol` and are real.
pub fn det_hermitian_checked(a: &QMatrix, cfg: &Config) -> Result<HermitianDet> {
    check_hermitian(a, cfg.tol)?;
    let n = a.rows();
    if n == 0 {
        return Ok(HermitianDet {
            value: 1.0,
            rdets: Vec::new(),
            cdets: Vec::new(),
            spread: 0.0,
            residue: 0.0,
        });
    }
    let rdets = (0..n)
        .map(|i| rdet(a, i, cfg))
        .collect::<Result<Vec<_>>>()?;
    let cdets = (0..n)
        .map(|j| cdet(a, j, cfg))
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<Quaternion> = rdets.iter().chain(cdets.iter()).copied().collect();
    let mut spread: f64 = 0.0;
    for (t, p) in all.iter().enumerate() {
        for q in &all[t + 1..] {
            spread = spread.max(p.max_abs_diff(q));
        }
    }
    let residue = all.iter().map(|q| q.im_norm()).fold(0.0, f64::max);
    let value = real_part(rdets[0], cfg.tol)?;
    if residue > cfg.tol * value.abs().max(1.0) {
        return Err(Error::NotReal { residue });
    }
    if spread > cfg.tol * value.abs().max(1.0) {
        return Err(Error::Disagreement { spread });
    }
    Ok(HermitianDet {
        value,
        rdets,
        cdets,
        spread,
        residue,
    })
}

/// `Σ det A[α, α]` over all `s`-element index sets `α`.
pub fn principal_minor_sum(a: &QMatrix, s: usize, cfg: &Config) -> Result<f64> {
    check_hermitian(a, cfg.tol)?;
    let n = a.rows();
    if s > n {
        return Err(Error::IndexOutOfRange { index: s, size: n });
    }
    if s > cfg.size_cap {
        return Err(Error::SizeCapExceeded {
            size: s,
            cap: cfg.size_cap,
        });
    }
    let mut acc = CompensatedSum::new();
    for alpha in Combinations::new(n, s) {
        let minor = a.principal_submatrix(&alpha)?;
        acc.add(det_hermitian(&minor, cfg)?);
    }
    Ok(acc.value())
}

/// `p(t) = tⁿ - d₁tⁿ⁻¹ + d₂tⁿ⁻² - ⋯ + (-1)ⁿ dₙ` for a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    /// `d₁, …, dₙ`.
    pub coefficients: Vec<f64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 1.0;
        for (s, d) in self.coefficients.iter().enumerate() {
            let sign = if s % 2 == 0 { -1.0 } else { 1.0 };
            acc = acc * t + sign * d;
        }
        acc
    }
}

pub fn char_poly_hermitian(a: &QMatrix, cfg: &Config) -> Result<CharPoly> {
    check_hermitian(a, cfg.tol)?;
    if a.rows() > cfg.size_cap {
        return Err(Error::SizeCapExceeded {
            size: a.rows(),
            cap: cfg.size_cap,
        });
    }
    let coefficients = (1..=a.rows())
        .map(|s| principal_minor_sum(a, s, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharPoly { coefficients })
}

/// `det(A A*) > tol`. Non-square matrices are never invertible.
pub fn is_invertible(a: &QMatrix, cfg: &Config) -> Result<bool> {
    if !a.is_square() {
        return Ok(false);
    }
    Ok(det_hermitian(&a.gram_rows(), cfg)? > cfg.tol)
}

/// Largest `s` with a positive sum of order-`s` principal minors of `A A*`,
/// checked against the same quantity for `A* A`.
pub fn rank_determinantal(a: &QMatrix, cfg: &Config) -> Result<usize> {
    let limit = a.rows().min(a.cols());
    if limit > cfg.size_cap {
        return Err(Error::SizeCapExceeded {
            size: limit,
            cap: cfg.size_cap,
        });
    }
    let rank_of = |g: &QMatrix| -> Result<usize> {
        let mut rank = 0;
        for s in 1..=limit {
            if principal_minor_sum(g, s, cfg)? > cfg.tol {
                rank = s;
            }
        }
        Ok(rank)
    };
    let left = rank_of(&a.gram_rows())?;
    let right = rank_of(&a.gram_cols())?;
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(left)
}
