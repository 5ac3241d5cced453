//! Independent check of the symbol calculus through the fiber decomposition.
//!
//! After a Fourier transform along the line, the operator decomposes into a
//! family of 1D problems indexed by the momentum `p`:
//!
//! ```text
//! (sigma_1 p - i sigma_2 d/dy + m sigma_3) f = z f   on y > 0 and y < 0,
//! i sigma_2 (f(0+) - f(0-)) = (eta / 2) (f(0+) + f(0-)).
//! ```
//!
//! For `z` in the fiber gap `|z| < sqrt(p^2 + m^2)` the decaying solutions are
//! `v_+ e^{-kappa y}` and `v_- e^{kappa y}`, and a bound state exists exactly
//! when the 2x2 transmission system for their amplitudes is singular. Nothing
//! here touches the boundary symbols; agreement with them is a genuine cross-check.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::quad::TanhSinh;
use crate::numerics::{pauli, Mat2C, Spinor};
use crate::params::ShellParams;
use crate::tol::{BISECTION_TOL, FIBER_GAP_MARGIN, FIBER_SCAN_NODES};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Decaying half-line solutions at one momentum and trial energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberSolution {
    pub p: f64,
    pub z: f64,
    /// Decay rate `sqrt(p^2 + m^2 - z^2) > 0`.
    pub kappa: f64,
    /// Boundary value of the solution on `y > 0`.
    pub v_plus: Spinor,
    /// Boundary value of the solution on `y < 0`.
    pub v_minus: Spinor,
    /// Determinant of the transmission system for the amplitudes `(alpha, beta)`.
    pub match_det: Complex64,
}

/// Normalized bound state `alpha v_+ e^{-kappa y}` / `beta v_- e^{kappa y}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub alpha: Complex64,
    pub beta: Complex64,
}

fn real_spinor(a: f64, b: f64) -> Spinor {
    [Complex64::new(a, 0.0), Complex64::new(b, 0.0)]
}

fn spinor_norm_sq(v: &Spinor) -> f64 {
    v[0].norm_sqr() + v[1].norm_sqr()
}

impl FiberSolution {
    pub fn new(params: &ShellParams, p: f64, z: f64) -> Result<Self> {
        let kappa = fiber_kappa(params, p, z)?;
        let m = params.m();
        // Each half-line eigenvector has two algebraically equivalent forms; the
        // one chosen here never vanishes for the given sign of p, so the
        // matching determinant has no spurious zeros inside the fiber gap.
        let (v_plus, v_minus) = if p >= 0.0 {
            (real_spinor(p + kappa, z - m), real_spinor(z + m, p + kappa))
        } else {
            (real_spinor(z + m, p - kappa), real_spinor(p - kappa, z - m))
        };
        let system = transmission_system(params.eta(), &v_plus, &v_minus);
        Ok(FiberSolution {
            p,
            z,
            kappa,
            v_plus,
            v_minus,
            match_det: system.det(),
        })
    }

    /// `(sigma_1 p + i kappa sigma_2 + m sigma_3)` on `y > 0`.
    pub fn upper_hamiltonian(&self, params: &ShellParams) -> Mat2C {
        half_line_hamiltonian(params.m(), self.p, self.kappa)
    }

    /// `(sigma_1 p - i kappa sigma_2 + m sigma_3)` on `y < 0`.
    pub fn lower_hamiltonian(&self, params: &ShellParams) -> Mat2C {
        half_line_hamiltonian(params.m(), self.p, -self.kappa)
    }

    /// Relative residuals `|(H_+- - z) v_+-| / |v_+-|` of both eigenvector relations.
    pub fn eigen_residuals(&self, params: &ShellParams) -> (f64, f64) {
        let shift = Mat2C::scalar(self.z.into());
        let res = |h: Mat2C, v: &Spinor| {
            let r = (h - shift).apply(v);
            (spinor_norm_sq(&r) / spinor_norm_sq(v)).sqrt()
        };
        (
            res(self.upper_hamiltonian(params), &self.v_plus),
            res(self.lower_hamiltonian(params), &self.v_minus),
        )
    }

    /// Null vector of the transmission system, normalized to unit `L^2` norm
    /// in the transverse variable (each half-line contributes `|v|^2 / (2 kappa)`).
    pub fn bound_state(&self, params: &ShellParams) -> BoundState {
        let s = transmission_system(params.eta(), &self.v_plus, &self.v_minus);
        let row1 = s.a11().norm() + s.a12().norm();
        let row2 = s.a21().norm() + s.a22().norm();
        let (alpha, beta) = if row1 >= row2 {
            (s.a12(), -s.a11())
        } else {
            (s.a22(), -s.a21())
        };
        let norm_sq = (alpha.norm_sqr() * spinor_norm_sq(&self.v_plus)
            + beta.norm_sqr() * spinor_norm_sq(&self.v_minus))
            / (2.0 * self.kappa);
        let scale = norm_sq.sqrt().recip();
        BoundState {
            alpha: alpha * scale,
            beta: beta * scale,
        }
    }

    /// Squared transverse norm of a state with amplitudes `(alpha, beta)`.
    pub fn state_norm_sq(&self, state: &BoundState) -> f64 {
        (state.alpha.norm_sqr() * spinor_norm_sq(&self.v_plus)
            + state.beta.norm_sqr() * spinor_norm_sq(&self.v_minus))
            / (2.0 * self.kappa)
    }

    /// `| i sigma_2 (f_+ - f_-) - (eta/2)(f_+ + f_-) |` at the interface.
    pub fn transmission_residual(&self, params: &ShellParams, state: &BoundState) -> f64 {
        let s = transmission_system(params.eta(), &self.v_plus, &self.v_minus);
        let r = s.apply(&[state.alpha, state.beta]);
        spinor_norm_sq(&r).sqrt()
    }
}

fn half_line_hamiltonian(m: f64, p: f64, kappa: f64) -> Mat2C {
    let s = |k| pauli(k).expect("static index");
    s(1) * p + s(2) * (I * kappa) + s(3) * m
}

/// Columns `(i sigma_2 - eta/2) v_+` and `-(i sigma_2 + eta/2) v_-`.
fn transmission_system(eta: f64, v_plus: &Spinor, v_minus: &Spinor) -> Mat2C {
    let is2 = pauli(2).expect("static index") * I;
    let half_eta = Mat2C::scalar((0.5 * eta).into());
    let c1 = (is2 - half_eta).apply(v_plus);
    let c2 = (is2 + half_eta).apply(v_minus);
    Mat2C::new(c1[0], -c2[0], c1[1], -c2[1])
}

/// Half-width `sqrt(p^2 + m^2)` of the fiber gap.
pub fn fiber_gap(params: &ShellParams, p: f64) -> f64 {
    p.hypot(params.m())
}

fn fiber_kappa(params: &ShellParams, p: f64, z: f64) -> Result<f64> {
    let e = fiber_gap(params, p);
    if !(z.abs() < e) {
        return Err(Error::precondition(format!(
            "fiber at p = {p}: z = {z} is outside the open fiber gap (-{e}, {e})"
        )));
    }
    Ok(((e - z.abs()) * (e + z.abs())).sqrt())
}

/// Determinant of the transmission system; zero exactly at fiber eigenvalues.
pub fn matching_det(params: &ShellParams, p: f64, z: f64) -> Result<Complex64> {
    params.require_coupling("matching_det")?;
    Ok(FiberSolution::new(params, p, z)?.match_det)
}

/// The bound-state energy of the fiber at momentum `p`, if any.
///
/// Sign scan over the open fiber gap (minus a relative margin at both ends)
/// followed by bisection.
pub fn fiber_eigenvalue(params: &ShellParams, p: f64) -> Result<Option<f64>> {
    fiber_root(params, p, BISECTION_TOL)
}

fn fiber_root(params: &ShellParams, p: f64, tol: f64) -> Result<Option<f64>> {
    params.require_noncritical("fiber_eigenvalue")?;
    let e = fiber_gap(params, p);
    if e == 0.0 {
        return Ok(None);
    }
    let lim = e * (1.0 - FIBER_GAP_MARGIN);
    let det = |z: f64| -> Result<f64> { Ok(matching_det(params, p, z)?.re) };
    let step = 2.0 * lim / (FIBER_SCAN_NODES - 1) as f64;
    let node = |k: usize| {
        if k + 1 == FIBER_SCAN_NODES {
            lim
        } else {
            -lim + step * k as f64
        }
    };

    let mut lo = node(0);
    let mut f_lo = det(lo)?;
    for k in 1..FIBER_SCAN_NODES {
        let hi = node(k);
        let f_hi = det(hi)?;
        if f_lo == 0.0 {
            return Ok(Some(lo));
        }
        if f_lo.signum() != f_hi.signum() {
            return bisect(&det, lo, hi, f_lo, tol).map(Some);
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(if f_lo == 0.0 { Some(lo) } else { None })
}

fn bisect(f: &dyn Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> Result<f64> {
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

/// `max_p |matching_det(p, 0)|` over the grid; only defined at critical coupling.
pub fn kernel_at_zero_scan(params: &ShellParams, p_grid: &[f64]) -> Result<f64> {
    if !params.is_critical() {
        return Err(Error::precondition(format!(
            "kernel_at_zero_scan needs eta = +-2, got {}",
            params.eta()
        )));
    }
    max_abs_matching_det_at_zero(params, p_grid)
}

/// `max_p |matching_det(p, 0)|` for any nonzero coupling.
pub fn max_abs_matching_det_at_zero(params: &ShellParams, p_grid: &[f64]) -> Result<f64> {
    p_grid
        .par_iter()
        .map(|&p| Ok(matching_det(params, p, 0.0)?.norm()))
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}

/// `min_p |matching_det(p, 0)|`, the other side of the critical dichotomy.
pub fn min_abs_matching_det_at_zero(params: &ShellParams, p_grid: &[f64]) -> Result<f64> {
    p_grid
        .par_iter()
        .map(|&p| Ok(matching_det(params, p, 0.0)?.norm()))
        .try_reduce(|| f64::INFINITY, |a, b| Ok(a.min(b)))
}

/// Relative residual `|| (A - z(p0)) f_w || / || f_w ||` of a Gaussian wave
/// packet of fiber bound states centred at `p0` with momentum spread `width`:
///
/// ```text
/// R(w)^2 = int g_w(p)^2 (z(p) - z(p0))^2 dp / int g_w(p)^2 dp
/// ```
///
/// integrated over `[p0 - 8w, p0 + 8w]`. `R(w) -> 0` certifies `z(p0)` as a
/// point of continuous spectrum.
pub fn quasimode_residual(params: &ShellParams, p0: f64, width: f64) -> Result<f64> {
    params.require_noncritical("quasimode_residual")?;
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::precondition(format!(
            "quasimode_residual: width must be positive, got {width}"
        )));
    }
    let z0 = fiber_root(params, p0, 0.0)?.ok_or_else(|| {
        Error::precondition(format!(
            "quasimode_residual: no fiber bound state at p0 = {p0} for eta = {}",
            params.eta()
        ))
    })?;

    // |g_w|^2 times the transverse norm of the normalized bound state at p.
    let weighted = |p: f64| -> Result<(f64, f64)> {
        let z = fiber_root(params, p, 0.0)?.ok_or_else(|| {
            Error::precondition(format!("quasimode_residual: fiber bound state lost at p = {p}"))
        })?;
        let fiber = FiberSolution::new(params, p, z)?;
        let state = fiber.bound_state(params);
        let g = (-(p - p0).powi(2) / (2.0 * width * width)).exp();
        Ok((g * g * fiber.state_norm_sq(&state), z))
    };

    let quad = TanhSinh::with_tol(1e-10);
    let (a, b) = (p0 - 8.0 * width, p0 + 8.0 * width);
    let mut failure = None;
    let mut sample = |p: f64, numerator: bool| match weighted(p) {
        Ok((w, z)) => {
            if numerator {
                w * (z - z0).powi(2)
            } else {
                w
            }
        }
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    };
    let num = quad.integrate(a, b, |p| sample(p, true))?;
    let den = quad.integrate(a, b, |p| sample(p, false))?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok((num.value / den.value).sqrt())
}
