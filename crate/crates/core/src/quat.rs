//! Real quaternions `w + x𝐢 + y𝐣 + z𝐤` over `f64`.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A quaternion with finite components.
///
/// Multiplication is the Hamilton product (`𝐢² = 𝐣² = 𝐤² = 𝐢𝐣𝐤 = -1`) and is
/// not commutative.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::raw(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::raw(0.0, 0.0, 0.0, 1.0);

    /// The eight Lipschitz units `±1, ±𝐢, ±𝐣, ±𝐤`.
    pub const LIPSCHITZ_UNITS: [Self; 8] = [
        Self::raw(1.0, 0.0, 0.0, 0.0),
        Self::raw(-1.0, 0.0, 0.0, 0.0),
        Self::raw(0.0, 1.0, 0.0, 0.0),
        Self::raw(0.0, -1.0, 0.0, 0.0),
        Self::raw(0.0, 0.0, 1.0, 0.0),
        Self::raw(0.0, 0.0, -1.0, 0.0),
        Self::raw(0.0, 0.0, 0.0, 1.0),
        Self::raw(0.0, 0.0, 0.0, -1.0),
    ];

    const fn raw(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Builds a quaternion, rejecting NaN and infinite components.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if w.is_finite() && x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self::raw(w, x, y, z))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_components(c: [f64; 4]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// A real quaternion.
    ///
    /// # Panics
    /// If `r` is not finite.
    pub fn real(r: f64) -> Self {
        assert!(r.is_finite(), "non-finite real part");
        Self::raw(r, 0.0, 0.0, 0.0)
    }

    pub(crate) const fn from_components_unchecked(c: [f64; 4]) -> Self {
        Self::raw(c[0], c[1], c[2], c[3])
    }

    pub fn w(&self) -> f64 {
        self.w
    }
    pub fn x(&self) -> f64 {
        self.x
    }
    pub fn y(&self) -> f64 {
        self.y
    }
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Real (scalar) part.
    pub fn re(&self) -> f64 {
        self.w
    }

    /// The pure-imaginary part `x𝐢 + y𝐣 + z𝐤`.
    pub fn im(&self) -> Self {
        Self::raw(0.0, self.x, self.y, self.z)
    }

    pub fn im_norm(&self) -> f64 {
        libm::sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
    }

    pub fn conj(&self) -> Self {
        Self::raw(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// `conj(q) / |q|²`; fails when `|q| <= tol`.
    pub fn inverse_with_tol(&self, tol: f64) -> Result<Self> {
        let n = self.norm();
        if n <= tol {
            return Err(Error::ZeroDivisor { norm: n });
        }
        Ok(self.conj() / self.norm_sqr())
    }

    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with_tol(crate::config::DEFAULT_TOL)
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Scales to unit norm; fails on (near-)zero input.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= crate::config::DEFAULT_TOL {
            return Err(Error::ZeroDivisor { norm: n });
        }
        Ok(*self / n)
    }

    /// Whether `a` and `b` lie in the same similarity class `u⁻¹ a u = b`.
    ///
    /// Two quaternions are similar exactly when they share the real part and
    /// the length of the imaginary part.
    pub fn similar(&self, other: &Self, tol: f64) -> bool {
        (self.re() - other.re()).abs() <= tol && (self.im_norm() - other.im_norm()).abs() <= tol
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.components();
        let b = other.components();
        a.iter()
            .zip(b.iter())
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    }

    /// `|self - other|`.
    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Index into [`Self::LIPSCHITZ_UNITS`] when within `tol` of one of them.
    pub fn lipschitz_unit_index(&self, tol: f64) -> Option<usize> {
        Self::LIPSCHITZ_UNITS
            .iter()
            .position(|u| self.max_abs_diff(u) <= tol)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}, {:?}, {:?}]",
            self.w, self.x, self.y, self.z
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = f.precision().unwrap_or(6);
        write!(f, "{:.*}", prec, self.w)?;
        for (v, unit) in [(self.x, 'i'), (self.y, 'j'), (self.z, 'k')] {
            let sign = if v.is_sign_negative() { '-' } else { '+' };
            write!(f, " {} {:.*}{}", sign, prec, v.abs(), unit)?;
        }
        Ok(())
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::raw(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::raw(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::raw(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::raw(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::raw(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}
