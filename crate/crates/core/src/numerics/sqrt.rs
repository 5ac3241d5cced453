use num_complex::Complex64;

use crate::error::{Error, Result};

/// Square root holomorphic on `C \ (-inf, 0]` with strictly positive real part.
///
/// Points on the closed negative real axis (including zero) are rejected; no
/// one-sided limit is assigned there.
pub fn branch_sqrt(w: Complex64) -> Result<Complex64> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::domain(format!("branch_sqrt: non-finite argument {w}")));
    }
    if w.im == 0.0 && w.re <= 0.0 {
        return Err(Error::domain(format!(
            "branch_sqrt: argument {w} lies on the cut (-inf, 0]; the branch is holomorphic \
             on C \\ (-inf, 0] with Re sqrt(w) > 0"
        )));
    }
    // Cancellation-free form: t = sqrt((|w| + |Re w|) / 2).
    let t = ((w.norm() + w.re.abs()) * 0.5).sqrt();
    if w.re >= 0.0 {
        Ok(Complex64::new(t, w.im / (2.0 * t)))
    } else {
        Ok(Complex64::new(w.im.abs() / (2.0 * t), t.copysign(w.im)))
    }
}
