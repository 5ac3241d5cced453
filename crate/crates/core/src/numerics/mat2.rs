use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Two-component complex spinor.
pub type Spinor = [Complex64; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// 2x2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Mat2C {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2C {
    pub const fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Mat2C {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn from_real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Mat2C::new(a11.into(), a12.into(), a21.into(), a22.into())
    }

    pub const fn zero() -> Self {
        Mat2C::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Mat2C::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn scalar(s: Complex64) -> Self {
        Mat2C::new(s, ZERO, ZERO, s)
    }

    #[inline]
    pub fn a11(&self) -> Complex64 {
        self.m[0][0]
    }
    #[inline]
    pub fn a12(&self) -> Complex64 {
        self.m[0][1]
    }
    #[inline]
    pub fn a21(&self) -> Complex64 {
        self.m[1][0]
    }
    #[inline]
    pub fn a22(&self) -> Complex64 {
        self.m[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.a11() * self.a22() - self.a12() * self.a21()
    }

    pub fn trace(&self) -> Complex64 {
        self.a11() + self.a22()
    }

    /// Inverse via the adjugate; `None` when the determinant is exactly zero.
    pub fn inv(&self) -> Option<Mat2C> {
        let d = self.det();
        if d == ZERO || !d.is_finite() {
            return None;
        }
        let r = d.inv();
        Some(Mat2C::new(
            self.a22() * r,
            -self.a12() * r,
            -self.a21() * r,
            self.a11() * r,
        ))
    }

    pub fn transpose(&self) -> Mat2C {
        Mat2C::new(self.a11(), self.a21(), self.a12(), self.a22())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Mat2C {
        self.map(|c| c.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2C {
        self.transpose().conj()
    }

    /// Entrywise real part, as a complex matrix.
    pub fn re(&self) -> Mat2C {
        self.map(|c| c.re.into())
    }

    /// Entrywise imaginary part, as a complex matrix with zero imaginary parts.
    pub fn im(&self) -> Mat2C {
        self.map(|c| c.im.into())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Mat2C {
        Mat2C::new(f(self.a11()), f(self.a12()), f(self.a21()), f(self.a22()))
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a11(), self.a12(), self.a21(), self.a22()]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.entries()
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Operator (spectral) norm on C^2 with the Euclidean norm.
    pub fn norm2(&self) -> f64 {
        let f2 = self.entries().iter().map(|c| c.norm_sqr()).sum::<f64>();
        let d = self.det().norm();
        let disc = (f2 * f2 - 4.0 * d * d).max(0.0).sqrt();
        ((f2 + disc) * 0.5).sqrt()
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        [
            self.a11() * v[0] + self.a12() * v[1],
            self.a21() * v[0] + self.a22() * v[1],
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|c| c.is_finite())
    }

    /// Entrywise `|a - b| <= tol`.
    pub fn approx_eq(&self, other: &Mat2C, tol: f64) -> bool {
        (*self - *other).max_abs() <= tol
    }
}

/// Pauli matrix `sigma_k`; `sigma_0` is the identity.
pub fn pauli(k: usize) -> Result<Mat2C> {
    match k {
        0 => Ok(Mat2C::identity()),
        1 => Ok(Mat2C::new(ZERO, ONE, ONE, ZERO)),
        2 => Ok(Mat2C::new(ZERO, -I, I, ZERO)),
        3 => Ok(Mat2C::new(ONE, ZERO, ZERO, -ONE)),
        _ => Err(Error::Index(k)),
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, o: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a11() + o.a11(),
            self.a12() + o.a12(),
            self.a21() + o.a21(),
            self.a22() + o.a22(),
        )
    }
}

impl AddAssign for Mat2C {
    fn add_assign(&mut self, o: Mat2C) {
        *self = *self + o;
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, o: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a11() - o.a11(),
            self.a12() - o.a12(),
            self.a21() - o.a21(),
            self.a22() - o.a22(),
        )
    }
}

impl Neg for Mat2C {
    type Output = Mat2C;
    fn neg(self) -> Mat2C {
        self.map(|c| -c)
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, o: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a11() * o.a11() + self.a12() * o.a21(),
            self.a11() * o.a12() + self.a12() * o.a22(),
            self.a21() * o.a11() + self.a22() * o.a21(),
            self.a21() * o.a12() + self.a22() * o.a22(),
        )
    }
}

impl Mul<Complex64> for Mat2C {
    type Output = Mat2C;
    fn mul(self, s: Complex64) -> Mat2C {
        self.map(|c| c * s)
    }
}

impl Mul<f64> for Mat2C {
    type Output = Mat2C;
    fn mul(self, s: f64) -> Mat2C {
        self.map(|c| c * s)
    }
}

impl Mul<Mat2C> for f64 {
    type Output = Mat2C;
    fn mul(self, m: Mat2C) -> Mat2C {
        m * self
    }
}

impl Mul<Mat2C> for Complex64 {
    type Output = Mat2C;
    fn mul(self, m: Mat2C) -> Mat2C {
        m * self
    }
}

impl fmt::Debug for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11(),
            self.a12(),
            self.a21(),
            self.a22()
        )
    }
}

impl fmt::Display for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
