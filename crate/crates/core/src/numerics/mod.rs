//! Scalar and 2x2 numerics underpinning the symbol, fiber and Green's-function code.

mod bessel;
mod mat2;
pub mod quad;
mod sqrt;

pub use bessel::{bessel_k, bessel_k01};
pub use mat2::{pauli, Mat2C, Spinor};
pub use sqrt::branch_sqrt;

pub use num_complex::Complex64;

/// Shorthand for building complex scalars.
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
