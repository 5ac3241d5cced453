//! Modified Bessel functions `K_0`, `K_1` of complex argument.
//!
//! Both orders come from the integral representation
//!
//! ```text
//! K_nu(w) = int_0^inf exp(-w cosh t) cosh(nu t) dt,   Re w > 0,
//! ```
//!
//! rewritten as `exp(-w) * int_0^inf exp(-2 w sinh^2(t/2)) cosh(nu t) dt` so the
//! exponential scale is factored out. The integrand already decays double
//! exponentially, so the trapezoidal rule on `[0, inf)` converges
//! geometrically in the number of nodes; the step is halved (reusing all
//! previous nodes) until two levels agree.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::BESSEL_ACCURACY_LIMIT;

const LEVEL_TOL: f64 = 1e-14;
const INITIAL_STEP: f64 = 0.5;
const MAX_HALVINGS: u32 = 14;
// Integrand magnitude relative to its value at t = 0 below which the tail is dropped.
const TAIL_EXPONENT: f64 = 45.0;

/// `K_order(w)` for `order` in {0, 1} and `Re w > 0`.
pub fn bessel_k(order: u8, w: Complex64) -> Result<Complex64> {
    let (k0, k1) = bessel_k01(w)?;
    match order {
        0 => Ok(k0),
        1 => Ok(k1),
        _ => Err(Error::domain(format!(
            "bessel_k supports orders 0 and 1, got {order}"
        ))),
    }
}

/// `(K_0(w), K_1(w))` from a single pass over the shared integrand.
pub fn bessel_k01(w: Complex64) -> Result<(Complex64, Complex64)> {
    if !(w.re.is_finite() && w.im.is_finite()) || w.re <= 0.0 {
        return Err(Error::domain(format!(
            "modified Bessel K needs Re w > 0, got w = {w}"
        )));
    }
    if w.norm() > BESSEL_ACCURACY_LIMIT {
        log::warn!(
            "K_nu({w}): |w| > {BESSEL_ACCURACY_LIMIT}, values are dominated by exponential underflow"
        );
    }

    let t_max = tail_cutoff(w.re);
    // sum over nodes k*h, k >= 1, plus half the t = 0 node (value 1 for both orders)
    let mut s0 = Complex64::new(0.5, 0.0);
    let mut s1 = Complex64::new(0.5, 0.0);
    let mut h = INITIAL_STEP;
    let add_nodes = |h: f64, start: usize, stride: usize, s0: &mut Complex64, s1: &mut Complex64| {
        let mut k = start;
        loop {
            let t = k as f64 * h;
            if t > t_max {
                break;
            }
            let sh = (0.5 * t).sinh();
            let g = (-2.0 * w * sh * sh).exp();
            *s0 += g;
            *s1 += g * t.cosh();
            k += stride;
        }
    };

    add_nodes(h, 1, 1, &mut s0, &mut s1);
    let mut prev = (s0 * h, s1 * h);
    for _ in 0..MAX_HALVINGS {
        h *= 0.5;
        add_nodes(h, 1, 2, &mut s0, &mut s1);
        let next = (s0 * h, s1 * h);
        let d0 = (next.0 - prev.0).norm() / next.0.norm();
        let d1 = (next.1 - prev.1).norm() / next.1.norm();
        prev = next;
        if d0 <= LEVEL_TOL && d1 <= LEVEL_TOL {
            let scale = (-w).exp();
            return Ok((prev.0 * scale, prev.1 * scale));
        }
    }
    Err(Error::Convergence(format!(
        "K_nu({w}): trapezoidal refinement did not settle; |arg w| is too close to pi/2"
    )))
}

/// Smallest `T` with `2 Re(w) sinh^2(T/2) - T >= TAIL_EXPONENT`; beyond it the
/// integrand (including the `cosh t <= e^t` factor) is negligible.
fn tail_cutoff(re_w: f64) -> f64 {
    let mut t: f64 = 1.0;
    for _ in 0..60 {
        let next = 2.0 * ((TAIL_EXPONENT + t) / (2.0 * re_w)).sqrt().asinh();
        if (next - t).abs() < 1e-3 {
            return next;
        }
        t = next;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rejects_left_half_plane() {
        assert!(bessel_k(0, c(0.0)).is_err());
        assert!(bessel_k(1, Complex64::new(-1.0, 2.0)).is_err());
        assert!(bessel_k(2, c(1.0)).is_err());
    }

    #[test]
    fn unit_argument() {
        // reference values frozen from the series oracle in tests/support
        let k0 = bessel_k(0, c(1.0)).unwrap();
        let k1 = bessel_k(1, c(1.0)).unwrap();
        assert!((k0.re - 0.42102443824070834).abs() < 1e-15, "{k0}");
        assert!((k1.re - 0.60190723019723457).abs() < 1e-15, "{k1}");
        assert_eq!(k0.im, 0.0);
    }

    #[test]
    fn positive_and_decreasing_on_real_ray() {
        let mut last = (f64::INFINITY, f64::INFINITY);
        let mut x: f64 = 0.01;
        while x <= 30.0 {
            let (k0, k1) = bessel_k01(c(x)).unwrap();
            assert!(k0.re > 0.0 && k1.re > 0.0);
            assert!(k0.re < last.0 && k1.re < last.1, "x = {x}");
            last = (k0.re, k1.re);
            x *= 1.05;
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let w = Complex64::new(0.7, 2.3);
        let (a0, a1) = bessel_k01(w).unwrap();
        let (b0, b1) = bessel_k01(w.conj()).unwrap();
        assert!((a0.conj() - b0).norm() < 1e-15 * a0.norm().max(1.0));
        assert!((a1.conj() - b1).norm() < 1e-15 * a1.norm().max(1.0));
    }
}
