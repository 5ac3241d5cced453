//! Momentum grids for diagnostics and sweeps.

use crate::error::{Error, Result};

/// Uniform grid with `count >= 2` nodes on `[min, max]`, endpoints included.
pub fn linear(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 || !(min < max) || !min.is_finite() || !max.is_finite() {
        return Err(Error::precondition(format!(
            "grid needs min < max and count >= 2, got [{min}, {max}] with {count} nodes"
        )));
    }
    let step = (max - min) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| if i + 1 == count { max } else { min + step * i as f64 })
        .collect())
}

/// Symmetric grid on `[-half_width, half_width]`: uniform on the inner tenth,
/// geometric outside it. Half of the nodes on each side go to the uniform core.
///
/// `count` is rounded up to the next odd number so that `p = 0` is a node.
pub fn hybrid(half_width: f64, count: usize) -> Result<Vec<f64>> {
    if !(half_width > 0.0) || count < 5 {
        return Err(Error::precondition(format!(
            "hybrid grid needs half_width > 0 and count >= 5, got {half_width}, {count}"
        )));
    }
    let per_side = count / 2;
    let core_side = per_side / 2;
    let tail_side = per_side - core_side;
    let core = half_width / 10.0;
    let ratio = 10f64.powf(1.0 / tail_side as f64);

    let mut positive = Vec::with_capacity(per_side);
    positive.extend((1..=core_side).map(|k| core * k as f64 / core_side as f64));
    positive.extend((1..=tail_side).map(|k| {
        if k == tail_side {
            half_width
        } else {
            core * ratio.powi(k as i32)
        }
    }));

    let mut grid: Vec<f64> = positive.iter().rev().map(|p| -p).collect();
    grid.push(0.0);
    grid.extend(positive);
    Ok(grid)
}

/// Default diagnostic grid: 4001 nodes on `[-100, 100]`.
pub fn default_diagnostic() -> Vec<f64> {
    hybrid(100.0, 4001).expect("static parameters are valid")
}

/// Insert `factor - 1` equally spaced nodes in every interval.
pub fn refine(grid: &[f64], factor: usize) -> Vec<f64> {
    if factor <= 1 || grid.len() < 2 {
        return grid.to_vec();
    }
    let mut out = Vec::with_capacity((grid.len() - 1) * factor + 1);
    for w in grid.windows(2) {
        for j in 0..factor {
            out.push(w[0] + (w[1] - w[0]) * j as f64 / factor as f64);
        }
    }
    out.push(*grid.last().unwrap());
    out
}
