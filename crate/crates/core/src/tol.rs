//! Numerical tolerances shared across the toolkit.

/// Target relative accuracy of `K_0` and `K_1` on `1e-3 <= |w| <= 30`.
pub const BESSEL_REL_TOL: f64 = 1e-9;

/// Relative accuracy of `branch_sqrt`: `r^2 = w` to this tolerance.
pub const SQRT_REL_TOL: f64 = 1e-14;

/// Above this modulus the Bessel values are dominated by exponential underflow.
pub const BESSEL_ACCURACY_LIMIT: f64 = 30.0;

/// `|c_z(p)| <= SINGULAR_C_TOL * (1 + |z| + |p|)` marks the symbol inverse as singular.
pub const SINGULAR_C_TOL: f64 = 1e-13;

/// Agreement between the closed-form and direct symbol determinants.
pub const DET_REL_TOL: f64 = 1e-12;

/// Entrywise tolerance for `theta_z * theta_z^{-1} = I` and the Weyl identities.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Fiber eigenvalue vs closed-form dispersion agreement.
pub const ORACLE_AGREEMENT_TOL: f64 = 1e-9;

/// Bisection termination for fiber eigenvalues (absolute, energy units).
pub const BISECTION_TOL: f64 = 1e-12;

/// Number of sign-scan nodes across the open fiber gap.
pub const FIBER_SCAN_NODES: usize = 2000;

/// Relative margin excluded at each end of the fiber gap during the scan.
pub const FIBER_GAP_MARGIN: f64 = 1e-3;

/// Maximum relative error of the numerical `K_0` Fourier pair.
pub const FOURIER_PAIR_TOL: f64 = 1e-6;
