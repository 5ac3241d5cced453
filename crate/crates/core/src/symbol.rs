//! Fourier-multiplier symbols of the boundary operators on the line.
//!
//! Along the shell the single-layer-type operator `C_z` acts in momentum space
//! as multiplication by the 2x2 matrix
//!
//! ```text
//! Chat_z(p) = (sigma_1 p + m sigma_3 + z) / (2 kappa),   kappa = sqrt(p^2 + m^2 - z^2),
//! ```
//!
//! and the boundary parameter `Theta`, the Weyl function `M(z)` and the
//! combination `Theta - M(z) = -Lambda [1/eta + C_z] Lambda` all reduce to
//! symbols built from it, with `Lambda` acting as `(p^2 + 1)^{1/4}`.
//!
//! The Fourier transform uses the kernel `e^{-ipx} / sqrt(2 pi)`. The opposite
//! sign convention flips the off-diagonal entries under `p -> -p`, which leaves
//! every determinant, spectrum and diagnostic unchanged.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::quad::TanhSinh;
use crate::numerics::{branch_sqrt, Mat2C};
use crate::params::ShellParams;
use crate::tol::SINGULAR_C_TOL;

/// A momentum / spectral-parameter pair together with its decay rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolPoint {
    pub p: f64,
    pub z: Complex64,
    /// `branch_sqrt(p^2 + m^2 - z^2)`.
    pub kappa: Complex64,
}

impl SymbolPoint {
    pub fn new(params: &ShellParams, p: f64, z: Complex64) -> Result<Self> {
        Ok(SymbolPoint {
            p,
            z,
            kappa: decay_rate(params.m(), p, z)?,
        })
    }

    pub fn real(params: &ShellParams, p: f64, z: f64) -> Result<Self> {
        Self::new(params, p, Complex64::new(z, 0.0))
    }
}

/// `sqrt(p^2 + m^2 - z^2)` on the principal branch, with the real part
/// assembled as `p^2 + (|m| - x)(|m| + x) + y^2` to avoid cancellation.
pub fn decay_rate(m: f64, p: f64, z: Complex64) -> Result<Complex64> {
    let (x, y) = (z.re, z.im);
    let am = m.abs();
    let radicand = Complex64::new(p * p + (am - x) * (am + x) + y * y, -2.0 * x * y);
    branch_sqrt(radicand)
}

#[inline]
fn lambda_sq(p: f64) -> f64 {
    p.hypot(1.0)
}

/// Default reference point `zeta = i (1 + |m|)` in the resolvent set of the free operator.
pub fn default_zeta(params: &ShellParams) -> Complex64 {
    Complex64::new(0.0, 1.0 + params.abs_m())
}

/// `Chat_z(p)`.
pub fn chat(params: &ShellParams, pt: &SymbolPoint) -> Mat2C {
    let m = params.m();
    let two_kappa = pt.kappa * 2.0;
    let off = Complex64::from(pt.p) / two_kappa;
    Mat2C::new((pt.z + m) / two_kappa, off, off, (pt.z - m) / two_kappa)
}

/// Symbol of the self-adjoint boundary parameter,
/// `-sqrt(p^2 + 1) [ sigma_0 / eta + Re Chat_zeta(p) ]`.
pub fn theta_ref(params: &ShellParams, zeta: Complex64, p: f64) -> Result<Mat2C> {
    params.require_coupling("theta_ref")?;
    require_nonreal(zeta, "theta_ref: zeta")?;
    let c_zeta = chat(params, &SymbolPoint::new(params, p, zeta)?);
    let inner = Mat2C::scalar((1.0 / params.eta()).into()) + c_zeta.re();
    Ok(inner * -lambda_sq(p))
}

/// Symbol of the Weyl function, `sqrt(p^2 + 1) ( Chat_z(p) - Re Chat_zeta(p) )`.
pub fn weyl_symbol(params: &ShellParams, z: Complex64, zeta: Complex64, p: f64) -> Result<Mat2C> {
    require_nonreal(zeta, "weyl_symbol: zeta")?;
    if z.im == 0.0 && z.re.abs() >= params.abs_m() {
        return Err(Error::precondition(format!(
            "weyl_symbol: real z = {} must lie in the gap (-{m}, {m})",
            z.re,
            m = params.abs_m()
        )));
    }
    let c_z = chat(params, &SymbolPoint::new(params, p, z)?);
    let c_zeta = chat(params, &SymbolPoint::new(params, p, zeta)?);
    Ok((c_z - c_zeta.re()) * lambda_sq(p))
}

/// Symbol of `Theta - M(z)`: `-sqrt(p^2 + 1) [ sigma_0 / eta + Chat_z(p) ]`.
pub fn theta_z(params: &ShellParams, pt: &SymbolPoint) -> Result<Mat2C> {
    params.require_coupling("theta_z")?;
    let inner = Mat2C::scalar((1.0 / params.eta()).into()) + chat(params, pt);
    Ok(inner * -lambda_sq(pt.p))
}

/// Closed form `(p^2 + 1) [ 1/eta^2 + z / (eta kappa) - 1/4 ]` of `det theta_z(p)`.
pub fn det_theta(params: &ShellParams, pt: &SymbolPoint) -> Result<Complex64> {
    params.require_coupling("det_theta")?;
    let eta = params.eta();
    let bracket = pt.z / (pt.kappa * eta) + (1.0 / (eta * eta) - 0.25);
    Ok(bracket * (pt.p * pt.p + 1.0))
}

/// Magnitude of the individual terms of [`det_theta`]; the scale against which
/// its cancellation error is measured.
pub fn det_theta_scale(params: &ShellParams, pt: &SymbolPoint) -> f64 {
    let eta = params.eta();
    (pt.p * pt.p + 1.0) * (1.0 / (eta * eta) + (pt.z / (pt.kappa * eta)).norm() + 0.25)
}

/// `c_z(p) = (4 - eta^2) kappa + 4 eta z`; vanishes exactly on the dispersion curve.
pub fn c_func(params: &ShellParams, pt: &SymbolPoint) -> Result<Complex64> {
    params.require_coupling("c_func")?;
    let eta = params.eta();
    Ok(pt.kappa * (4.0 - eta * eta) + pt.z * (4.0 * eta))
}

/// Singularity threshold for [`theta_inv`] at this point.
pub fn singular_threshold(pt: &SymbolPoint) -> f64 {
    SINGULAR_C_TOL * (1.0 + pt.z.norm() + pt.p.abs())
}

/// `theta_z(p)^{-1} = -2 eta / (c_z(p) sqrt(p^2+1)) [[2k + eta(z-m), -eta p], [-eta p, 2k + eta(z+m)]]`.
pub fn theta_inv(params: &ShellParams, pt: &SymbolPoint) -> Result<Mat2C> {
    let c = c_func(params, pt)?;
    let threshold = singular_threshold(pt);
    if c.norm() <= threshold {
        return Err(Error::Singular {
            z: pt.z,
            p: pt.p,
            magnitude: c.norm(),
            threshold,
        });
    }
    let (eta, m) = (params.eta(), params.m());
    let two_kappa = pt.kappa * 2.0;
    let off = Complex64::from(-eta * pt.p);
    let adj = Mat2C::new(two_kappa + (pt.z - m) * eta, off, off, two_kappa + (pt.z + m) * eta);
    let prefactor = Complex64::from(-2.0 * eta) / (c * lambda_sq(pt.p));
    Ok(adj * prefactor)
}

/// Zeros `(p_-, p_+)` of the boundary value `c_{x+i0}(p)` for `x` on the free
/// essential spectrum, if any.
pub fn p_crit(params: &ShellParams, x: f64) -> Result<Option<(f64, f64)>> {
    params.require_coupling("p_crit")?;
    if x.abs() < params.abs_m() {
        return Err(Error::precondition(format!(
            "p_crit: |x| = {} must be at least |m| = {}",
            x.abs(),
            params.abs_m()
        )));
    }
    if params.is_critical() {
        return Ok(None);
    }
    let eta = params.eta();
    let d = eta * eta - 4.0;
    if x * eta / d < 0.0 {
        return Ok(None);
    }
    let ratio = (eta * eta + 4.0) / d;
    let radicand = ratio * ratio * x * x - params.m() * params.m();
    if radicand < 0.0 {
        return Ok(None);
    }
    let r = radicand.sqrt();
    Ok(Some((-r, r)))
}

/// One row of a `y -> 0` limit table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub y: f64,
    pub value: f64,
}

/// `sup_p || y theta_{x+iy}^{-1}(p) ||` over the grid for each `y`.
///
/// Tends to zero as `y -> 0` for every `x` on the free essential spectrum.
pub fn limit_sup_diag(
    params: &ShellParams,
    x: f64,
    y_list: &[f64],
    p_grid: &[f64],
) -> Result<Vec<LimitRow>> {
    params.require_coupling("limit_sup_diag")?;
    if x.abs() < params.abs_m() {
        return Err(Error::precondition(format!(
            "limit_sup_diag: x = {x} must satisfy |x| >= |m| = {}",
            params.abs_m()
        )));
    }
    check_y_list(y_list)?;
    y_list
        .iter()
        .map(|&y| {
            let z = Complex64::new(x, y);
            let sup = p_grid
                .par_iter()
                .map(|&p| {
                    let pt = SymbolPoint::new(params, p, z)?;
                    Ok(theta_inv(params, &pt)?.norm2() * y)
                })
                .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
            Ok(LimitRow { y, value: sup })
        })
        .collect()
}

/// Nodes used to sample the interval in [`limit_im_diag`].
pub const IM_DIAG_NODES: usize = 401;

/// `max_{p in [a, b]} max_entries |Im theta_{x+iy}^{-1}(p)|` for each `y`.
///
/// For `|x| > |m|` and `[a, b]` strictly inside `(-sqrt(x^2-m^2), sqrt(x^2-m^2))`
/// these converge to a nonzero limit.
pub fn limit_im_diag(
    params: &ShellParams,
    x: f64,
    interval: (f64, f64),
    y_list: &[f64],
) -> Result<Vec<LimitRow>> {
    params.require_coupling("limit_im_diag")?;
    let (a, b) = interval;
    let am = params.abs_m();
    if !(x.abs() > am) {
        return Err(Error::precondition(format!(
            "limit_im_diag: |x| = {} must exceed |m| = {am}",
            x.abs()
        )));
    }
    let q = ((x.abs() - am) * (x.abs() + am)).sqrt();
    if !(a <= b && -q < a && b < q) {
        return Err(Error::precondition(format!(
            "limit_im_diag: interval [{a}, {b}] must lie strictly inside (-{q}, {q})"
        )));
    }
    if let Some((pm, pp)) = p_crit(params, x)? {
        if (a..=b).contains(&pm) || (a..=b).contains(&pp) {
            return Err(Error::precondition(format!(
                "limit_im_diag: interval [{a}, {b}] touches a zero of c_(x+i0) at +-{pp}"
            )));
        }
    }
    check_y_list(y_list)?;

    let nodes: Vec<f64> = if a == b {
        vec![a]
    } else {
        crate::grid::linear(a, b, IM_DIAG_NODES)?
    };
    y_list
        .iter()
        .map(|&y| {
            let z = Complex64::new(x, y);
            let max = nodes
                .par_iter()
                .map(|&p| {
                    let pt = SymbolPoint::new(params, p, z)?;
                    Ok(theta_inv(params, &pt)?.im().max_abs())
                })
                .try_reduce(|| 0.0, |u, v| Ok(u.max(v)))?;
            Ok(LimitRow { y, value: max })
        })
        .collect()
}

/// Half-width of the momentum window used by [`limit_weighted_diag`].
pub const WEIGHTED_DIAG_CUTOFF: f64 = 12.0;

/// `( int || y theta_{x+iy}^{-1}(p) phi(p) ||_F^2 dp )^{1/2}` with the fixed test
/// function `phi(p) = e^{-p^2 / 2}`, for each `y`.
///
/// This is the action on a single vector, so it tends to zero as `y -> 0` even
/// where [`limit_sup_diag`] does not: near the zeros of `c_{x+i0}` the
/// integrand is a peak of height `O(1)` and width `O(y)`. The window is split
/// at those zeros, and at the momenta where the decay rate vanishes, so the
/// adaptive rule resolves the near-singular features from both sides.
pub fn limit_weighted_diag(params: &ShellParams, x: f64, y_list: &[f64]) -> Result<Vec<LimitRow>> {
    params.require_coupling("limit_weighted_diag")?;
    if x.abs() < params.abs_m() {
        return Err(Error::precondition(format!(
            "limit_weighted_diag: x = {x} must satisfy |x| >= |m| = {}",
            params.abs_m()
        )));
    }
    check_y_list(y_list)?;
    // zeros of c_{x+i0} and the momenta where kappa_{x+i0} vanishes
    let q = ((x.abs() - params.abs_m()) * (x.abs() + params.abs_m())).sqrt();
    let mut centers = vec![-q, q];
    if let Some((pm, pp)) = p_crit(params, x)? {
        centers.extend([pm, pp]);
    }
    let quad = TanhSinh::with_tol(1e-8);
    y_list
        .iter()
        .map(|&y| {
            let mut breaks = vec![-WEIGHTED_DIAG_CUTOFF, 0.0, WEIGHTED_DIAG_CUTOFF];
            for c in centers.iter() {
                for d in [0.0, 10.0 * y, -10.0 * y, 1e3 * y, -1e3 * y] {
                    if (c + d).abs() < WEIGHTED_DIAG_CUTOFF {
                        breaks.push(c + d);
                    }
                }
            }
            breaks.sort_by(f64::total_cmp);
            breaks.dedup();
            let z = Complex64::new(x, y);
            let mut failure = None;
            let mut total = 0.0;
            for w in breaks.windows(2) {
                let est = quad.integrate(w[0], w[1], |p: f64| {
                    match SymbolPoint::new(params, p, z).and_then(|pt| theta_inv(params, &pt)) {
                        Ok(inv) => (y * inv.frobenius()).powi(2) * (-p * p).exp(),
                        Err(e) => {
                            failure.get_or_insert(e);
                            0.0
                        }
                    }
                })?;
                total += est.value;
            }
            match failure {
                Some(e) => Err(e),
                None => Ok(LimitRow { y, value: total.sqrt() }),
            }
        })
        .collect()
}

fn check_y_list(y_list: &[f64]) -> Result<()> {
    if let Some(&bad) = y_list.iter().find(|&&y| !(y > 0.0 && y <= 1.0)) {
        return Err(Error::precondition(format!(
            "y values must lie in (0, 1], got {bad}"
        )));
    }
    Ok(())
}

fn require_nonreal(z: Complex64, what: &str) -> Result<()> {
    if z.im == 0.0 {
        return Err(Error::precondition(format!("{what} = {z} must be off the real axis")));
    }
    Ok(())
}
