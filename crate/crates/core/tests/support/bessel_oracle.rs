//! Independent reference for K_0 / K_1: ascending series for small |w| and the
//! Hankel asymptotic expansion for large |w|. Shares no code with the
//! integral-representation implementation.

#![allow(dead_code)]

use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest |w| for which the series is trusted (cancellation ~ e^{2|w|}).
pub const SERIES_MAX: f64 = 6.0;
/// Smallest |w| for which the asymptotic expansion reaches ~1e-13.
pub const ASYMPTOTIC_MIN: f64 = 16.0;

pub fn k0_series(z: Complex64) -> Complex64 {
    let q = z * z * 0.25;
    let lg = (z * 0.5).ln() + EULER_GAMMA;
    let mut term = Complex64::new(1.0, 0.0); // q^k / (k!)^2
    let mut i0 = term;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut harmonic = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term = term * q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term.norm() * harmonic < 1e-18 * (i0.norm() + tail.norm()) {
            break;
        }
    }
    -lg * i0 + tail
}

pub fn k1_series(z: Complex64) -> Complex64 {
    let q = z * z * 0.25;
    let mut term = Complex64::new(1.0, 0.0); // q^k / (k! (k+1)!)
    let mut psi_k1 = -EULER_GAMMA; // psi(k + 1)
    let mut psi_k2 = 1.0 - EULER_GAMMA; // psi(k + 2)
    let mut i1_sum = term;
    let mut psi_sum = term * (psi_k1 + psi_k2);
    for k in 1..200 {
        let kf = k as f64;
        term = term * q / (kf * (kf + 1.0));
        psi_k1 += 1.0 / kf;
        psi_k2 += 1.0 / (kf + 1.0);
        i1_sum += term;
        psi_sum += term * (psi_k1 + psi_k2);
        if term.norm() * (psi_k1.abs() + psi_k2.abs()) < 1e-18 * psi_sum.norm().max(1e-300) {
            break;
        }
    }
    let i1 = z * 0.5 * i1_sum;
    z.inv() + (z * 0.5).ln() * i1 - z * 0.25 * psi_sum
}

pub fn k_asymptotic(nu: u8, z: Complex64) -> Complex64 {
    let mu = 4.0 * (nu as f64).powi(2);
    let mut coeff = Complex64::new(1.0, 0.0);
    let mut sum = coeff;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        coeff = coeff * (mu - odd * odd) / (8.0 * kf) / z;
        let mag = coeff.norm();
        if mag > last {
            break;
        }
        sum += coeff;
        last = mag;
        if mag < 1e-17 {
            break;
        }
    }
    (std::f64::consts::FRAC_PI_2 / z).sqrt() * (-z).exp() * sum
}

/// Reference K_nu(w), or `None` in the window where neither expansion is trusted.
pub fn k_oracle(nu: u8, z: Complex64) -> Option<Complex64> {
    let r = z.norm();
    if r <= SERIES_MAX {
        Some(match nu {
            0 => k0_series(z),
            _ => k1_series(z),
        })
    } else if r >= ASYMPTOTIC_MIN {
        Some(k_asymptotic(nu, z))
    } else {
        None
    }
}
