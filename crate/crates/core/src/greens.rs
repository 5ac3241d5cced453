//! The free resolvent kernel
//!
//! ```text
//! G_z(x) = (i k / 2 pi) K_1(k |x|) (sigma . x) / |x| + (1 / 2 pi) K_0(k |x|) (z + m sigma_3),
//! k = sqrt(m^2 - z^2),
//! ```
//!
//! its finite-difference residual against the free Dirac operator, the
//! cosine transform of `K_0`, and convolution with sampled spinor fields.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::quad::{GaussLegendre, QuadValue};
use crate::numerics::{bessel_k, bessel_k01, pauli, Mat2C, Spinor};
use crate::symbol::decay_rate;
use crate::tol::BESSEL_ACCURACY_LIMIT;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Scalar coefficients of `G_z(x) = b . sigma + a (z + m sigma_3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParts {
    pub a: Complex64,
    pub b: [Complex64; 2],
}

impl KernelParts {
    pub fn assemble(&self, m: f64, z: Complex64) -> Mat2C {
        let s = |k| pauli(k).expect("static index");
        s(1) * self.b[0] + s(2) * self.b[1] + (Mat2C::scalar(z) + s(3) * m) * self.a
    }
}

impl Add for KernelParts {
    type Output = KernelParts;
    fn add(self, o: KernelParts) -> KernelParts {
        KernelParts {
            a: self.a + o.a,
            b: [self.b[0] + o.b[0], self.b[1] + o.b[1]],
        }
    }
}

impl std::ops::Sub for KernelParts {
    type Output = KernelParts;
    fn sub(self, o: KernelParts) -> KernelParts {
        KernelParts {
            a: self.a - o.a,
            b: [self.b[0] - o.b[0], self.b[1] - o.b[1]],
        }
    }
}

impl Mul<f64> for KernelParts {
    type Output = KernelParts;
    fn mul(self, s: f64) -> KernelParts {
        KernelParts {
            a: self.a * s,
            b: [self.b[0] * s, self.b[1] * s],
        }
    }
}

impl QuadValue for KernelParts {
    fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        KernelParts { a: z, b: [z, z] }
    }
    fn magnitude(&self) -> f64 {
        self.a.norm().max(self.b[0].norm()).max(self.b[1].norm())
    }
    fn is_finite_value(&self) -> bool {
        self.a.is_finite() && self.b[0].is_finite() && self.b[1].is_finite()
    }
}

/// `sqrt(m^2 - z^2)`; a domain error for `z` in the spectrum of the free operator.
pub fn kernel_decay(m: f64, z: Complex64) -> Result<Complex64> {
    decay_rate(m, 0.0, z).map_err(|_| {
        Error::domain(format!(
            "z = {z} lies in the spectrum (-inf, -{0}] U [{0}, inf) of the free operator",
            m.abs()
        ))
    })
}

fn parts_with_decay(k: Complex64, x: [f64; 2]) -> Result<KernelParts> {
    let r = x[0].hypot(x[1]);
    if r == 0.0 {
        return Err(Error::domain("Green's kernel is singular at x = 0"));
    }
    let (k0, k1) = bessel_k01(k * r)?;
    let c = I * k * k1 / (2.0 * PI * r);
    Ok(KernelParts {
        a: k0 / (2.0 * PI),
        b: [c * x[0], c * x[1]],
    })
}

pub fn kernel_parts(m: f64, z: Complex64, x: [f64; 2]) -> Result<KernelParts> {
    parts_with_decay(kernel_decay(m, z)?, x)
}

/// `G_z(x)` for `z` off the free spectrum and `x != 0`.
pub fn green_kernel(m: f64, z: Complex64, x: [f64; 2]) -> Result<Mat2C> {
    Ok(kernel_parts(m, z, x)?.assemble(m, z))
}

/// `-i (sigma_1 d1 + sigma_2 d2) + (m sigma_3 - z) center`.
fn dirac_apply(m: f64, z: Complex64, center: Mat2C, d1: Mat2C, d2: Mat2C) -> Mat2C {
    let s = |k| pauli(k).expect("static index");
    (s(1) * d1 + s(2) * d2) * (-I) + (s(3) * m - Mat2C::scalar(z)) * center
}

/// Central-difference evaluation of `(-i sigma . grad + m sigma_3 - z) G_z` at `x`.
pub fn pde_residual(m: f64, z: Complex64, x: [f64; 2], h: f64) -> Result<Mat2C> {
    let limit = 0.25 * x[0].hypot(x[1]);
    if !(h > 0.0 && h < limit) {
        return Err(Error::Step { h, limit });
    }
    let k = kernel_decay(m, z)?;
    let g = |dx: f64, dy: f64| -> Result<Mat2C> {
        Ok(parts_with_decay(k, [x[0] + dx, x[1] + dy])?.assemble(m, z))
    };
    let d1 = (g(h, 0.0)? - g(-h, 0.0)?) * (0.5 / h);
    let d2 = (g(0.0, h)? - g(0.0, -h)?) * (0.5 / h);
    Ok(dirac_apply(m, z, g(0.0, 0.0)?, d1, d2))
}

/// `|R(h)| / |R(h/2)|` in the Frobenius norm; close to 4 for a second-order scheme.
pub fn richardson_ratio(m: f64, z: Complex64, x: [f64; 2], h: f64) -> Result<f64> {
    let coarse = pde_residual(m, z, x, h)?;
    let fine = pde_residual(m, z, x, 0.5 * h)?;
    Ok(coarse.frobenius() / fine.frobenius())
}

/// Largest `|p| / kappa` resolved by the cosine-transform rule.
pub const MAX_TRANSFORM_RATIO: f64 = 100.0;

/// Nodes and weights for `int_0^inf g(t) dt` with `g` carrying a logarithmic
/// singularity at 0, with `K_0(t)` cached at each node.
struct K0Rule {
    nodes: Vec<(f64, f64, f64)>,
}

fn k0_rule() -> Result<&'static K0Rule> {
    static RULE: OnceLock<std::result::Result<K0Rule, Error>> = OnceLock::new();
    RULE.get_or_init(|| {
        const SPLIT: f64 = 0.1;
        const LOG_SPAN: usize = 40;
        let gl = GaussLegendre::new(16);
        let mut nodes = Vec::new();
        // (0, SPLIT] through t = SPLIT e^{-s}, which turns ln t into a linear term
        for panel in 0..LOG_SPAN {
            for (s, w) in gl.mapped(panel as f64, panel as f64 + 1.0) {
                let t = SPLIT * (-s).exp();
                nodes.push((t, w * t, 0.0));
            }
        }
        let panels = ((BESSEL_ACCURACY_LIMIT - SPLIT) / SPLIT).round() as usize;
        for panel in 0..panels {
            let a = SPLIT * (panel + 1) as f64;
            for (t, w) in gl.mapped(a, a + SPLIT) {
                nodes.push((t, w, 0.0));
            }
        }
        for node in &mut nodes {
            node.2 = bessel_k(0, node.0.into())?.re;
        }
        Ok(K0Rule { nodes })
    })
    .as_ref()
    .map_err(Clone::clone)
}

/// `(1 / sqrt(2 pi)) int K_0(kappa |x|) e^{-ipx} dx`, computed by quadrature.
pub fn k0_fourier_transform(kappa: f64, p: f64) -> Result<f64> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::precondition(format!("kappa must be positive, got {kappa}")));
    }
    let q = p / kappa;
    if !(q.abs() <= MAX_TRANSFORM_RATIO) {
        return Err(Error::precondition(format!(
            "|p| / kappa = {} exceeds the resolved range {MAX_TRANSFORM_RATIO}",
            q.abs()
        )));
    }
    let integral: f64 = k0_rule()?.nodes.iter().map(|&(t, w, k0)| w * k0 * (q * t).cos()).sum();
    Ok((2.0 / PI).sqrt() * integral / kappa)
}

/// Max relative deviation of the numerical transform of `K_0(kappa |x|)` from
/// `sqrt(pi/2) / sqrt(p^2 + kappa^2)` over the grid.
pub fn fourier_pair_check(kappa: f64, p_grid: &[f64]) -> Result<f64> {
    p_grid.iter().try_fold(0.0f64, |worst, &p| {
        let exact = (PI / 2.0).sqrt() / p.hypot(kappa);
        let numeric = k0_fourier_transform(kappa, p)?;
        Ok(worst.max((numeric - exact).abs() / exact))
    })
}

/// Decay rate fitted from `ln(sqrt(|x|) |G_z(x)|)` against `|x|`, and the
/// exact rate `Re sqrt(m^2 - z^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    pub fitted: f64,
    pub expected: f64,
}

impl DecayFit {
    pub fn relative_error(&self) -> f64 {
        (self.fitted - self.expected).abs() / self.expected
    }
}

/// Least-squares decay fit over `|x|` in `[r_min, r_max]` along the first axis.
pub fn decay_fit(m: f64, z: Complex64, r_min: f64, r_max: f64) -> Result<DecayFit> {
    const SAMPLES: usize = 61;
    if !(0.0 < r_min && r_min < r_max) {
        return Err(Error::precondition(format!("decay fit needs 0 < r_min < r_max, got [{r_min}, {r_max}]")));
    }
    let k = kernel_decay(m, z)?;
    let mut pts = Vec::with_capacity(SAMPLES);
    for i in 0..SAMPLES {
        let r = r_min + (r_max - r_min) * i as f64 / (SAMPLES - 1) as f64;
        let g = parts_with_decay(k, [r, 0.0])?.assemble(m, z);
        pts.push((r, (r.sqrt() * g.frobenius()).ln()));
    }
    let n = SAMPLES as f64;
    let mr = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let ml = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mr) * (p.1 - ml)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mr).powi(2)).sum();
    Ok(DecayFit {
        fitted: -sxy / sxx,
        expected: k.re,
    })
}

/// Piecewise-constant spinor field on a uniform grid of square cells.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    origin: [f64; 2],
    spacing: f64,
    nx: usize,
    ny: usize,
    values: Vec<Spinor>,
}

impl SpinorField {
    /// `values[j * nx + i]` is the value on the cell centred at
    /// `origin + spacing * (i, j)`.
    pub fn new(origin: [f64; 2], spacing: f64, nx: usize, ny: usize, values: Vec<Spinor>) -> Result<Self> {
        if !(spacing > 0.0 && spacing.is_finite()) {
            return Err(Error::precondition(format!("grid spacing must be positive, got {spacing}")));
        }
        if nx == 0 || ny == 0 || values.len() != nx * ny {
            return Err(Error::precondition(format!(
                "{} samples do not fill a {nx} x {ny} grid",
                values.len()
            )));
        }
        Ok(SpinorField {
            origin,
            spacing,
            nx,
            ny,
            values,
        })
    }

    pub fn from_fn(
        origin: [f64; 2],
        spacing: f64,
        nx: usize,
        ny: usize,
        f: impl Fn([f64; 2]) -> Spinor,
    ) -> Result<Self> {
        let values = (0..ny)
            .flat_map(|j| (0..nx).map(move |i| (i, j)))
            .map(|(i, j)| f([origin[0] + spacing * i as f64, origin[1] + spacing * j as f64]))
            .collect();
        Self::new(origin, spacing, nx, ny, values)
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn center(&self, i: usize, j: usize) -> [f64; 2] {
        [
            self.origin[0] + self.spacing * i as f64,
            self.origin[1] + self.spacing * j as f64,
        ]
    }

    pub fn value(&self, i: usize, j: usize) -> Spinor {
        self.values[j * self.nx + i]
    }

    fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v[0] == Complex64::new(0.0, 0.0) && v[1] == Complex64::new(0.0, 0.0))
    }
}

/// Integral of the kernel parts over the square of side `h` centred at `d`.
fn cell_integral(k: Complex64, d: [f64; 2], h: f64, rules: &CellRules) -> Result<KernelParts> {
    let dist = d[0].abs().max(d[1].abs());
    if dist <= 0.5 * h * (1.0 + 1e-9) {
        return singular_cell(k, d, h, &rules.duffy);
    }
    let gl = if dist <= 2.5 * h {
        &rules.near
    } else if dist <= 8.0 * h {
        &rules.mid
    } else {
        &rules.far
    };
    let mut acc = KernelParts::zero();
    for (x, wx) in gl.mapped(d[0] - 0.5 * h, d[0] + 0.5 * h) {
        for (y, wy) in gl.mapped(d[1] - 0.5 * h, d[1] + 0.5 * h) {
            acc = acc + parts_with_decay(k, [x, y])? * (wx * wy);
        }
    }
    Ok(acc)
}

/// Square containing (or touching) the origin, split into four triangles
/// with a vertex at the origin; on each, `t = u (P + v (Q - P))` cancels the
/// singularity. Signed areas keep the split exact if round-off places the
/// origin just outside.
fn singular_cell(k: Complex64, d: [f64; 2], h: f64, gl: &GaussLegendre) -> Result<KernelParts> {
    let (x0, x1) = (d[0] - 0.5 * h, d[0] + 0.5 * h);
    let (y0, y1) = (d[1] - 0.5 * h, d[1] + 0.5 * h);
    let corners = [[x0, y0], [x1, y0], [x1, y1], [x0, y1]];
    let mut acc = KernelParts::zero();
    for e in 0..4 {
        let p = corners[e];
        let q = corners[(e + 1) % 4];
        let twice_area = p[0] * q[1] - p[1] * q[0];
        if twice_area.abs() <= 1e-14 * h * h {
            continue;
        }
        for (u, wu) in gl.mapped(0.0, 1.0) {
            for (v, wv) in gl.mapped(0.0, 1.0) {
                let t = [u * (p[0] + v * (q[0] - p[0])), u * (p[1] + v * (q[1] - p[1]))];
                acc = acc + parts_with_decay(k, t)? * (wu * wv * u * twice_area);
            }
        }
    }
    Ok(acc)
}

struct CellRules {
    duffy: GaussLegendre,
    near: GaussLegendre,
    mid: GaussLegendre,
    far: GaussLegendre,
}

impl CellRules {
    fn new() -> Self {
        CellRules {
            duffy: GaussLegendre::new(16),
            near: GaussLegendre::new(8),
            mid: GaussLegendre::new(4),
            far: GaussLegendre::new(2),
        }
    }
}

/// Cell integrals for all index offsets `d = (eval cell) - (source cell)`
/// in a rectangle, at a fixed sub-cell offset of the evaluation point.
struct OffsetTable {
    lo: [i64; 2],
    dims: [usize; 2],
    /// Mirror symmetry per axis when the evaluation offset is zero on that axis.
    mirror: [bool; 2],
    entries: Vec<KernelParts>,
}

impl OffsetTable {
    fn build(k: Complex64, h: f64, offset: [f64; 2], lo: [i64; 2], hi: [i64; 2], rules: &CellRules) -> Result<Self> {
        let mirror = [offset[0] == 0.0, offset[1] == 0.0];
        let mut t_lo = lo;
        let mut dims = [0usize; 2];
        for a in 0..2 {
            if mirror[a] {
                t_lo[a] = 0;
                dims[a] = lo[a].abs().max(hi[a].abs()) as usize + 1;
            } else {
                dims[a] = (hi[a] - lo[a] + 1) as usize;
            }
        }
        let entries = (0..dims[0] * dims[1])
            .into_par_iter()
            .map(|n| {
                let d1 = t_lo[0] + (n % dims[0]) as i64;
                let d2 = t_lo[1] + (n / dims[0]) as i64;
                let d = [offset[0] + d1 as f64 * h, offset[1] + d2 as f64 * h];
                cell_integral(k, d, h, rules)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OffsetTable {
            lo: t_lo,
            dims,
            mirror,
            entries,
        })
    }

    fn get(&self, d: [i64; 2]) -> KernelParts {
        let mut idx = [0usize; 2];
        let mut sign = [1.0; 2];
        for a in 0..2 {
            let mut da = d[a];
            if self.mirror[a] && da < 0 {
                da = -da;
                sign[a] = -1.0;
            }
            idx[a] = (da - self.lo[a]) as usize;
        }
        let mut e = self.entries[idx[1] * self.dims[0] + idx[0]];
        e.b[0] *= sign[0];
        e.b[1] *= sign[1];
        e
    }
}

/// `[(A_0 - z)^{-1} f](x) = int G_z(x - y) f(y) dy` at each evaluation point.
///
/// The field is treated as constant on each cell. Cell integrals are
/// tabulated per index offset, so the cost is dominated by the span of the
/// evaluation points rather than their number.
pub fn resolvent_apply(m: f64, z: Complex64, field: &SpinorField, x_eval: &[[f64; 2]]) -> Result<Vec<Spinor>> {
    let k = kernel_decay(m, z)?;
    let zero = Complex64::new(0.0, 0.0);
    if field.is_zero() || x_eval.is_empty() {
        return Ok(vec![[zero, zero]; x_eval.len()]);
    }
    let h = field.spacing;
    let (nx, ny) = (field.nx as i64, field.ny as i64);

    // (cell index, sub-cell offset) of each evaluation point, grouped by offset
    let mut groups: BTreeMap<[i64; 2], (Vec<(usize, [i64; 2])>, [f64; 2])> = BTreeMap::new();
    for (n, x) in x_eval.iter().enumerate() {
        let mut idx = [0i64; 2];
        let mut key = [0i64; 2];
        let mut offset = [0.0; 2];
        for a in 0..2 {
            let f = (x[a] - field.origin[a]) / h;
            idx[a] = f.round() as i64;
            key[a] = ((f - f.round()) * 1e9).round() as i64;
            if key[a] != 0 {
                offset[a] = x[a] - (field.origin[a] + idx[a] as f64 * h);
            }
        }
        if idx[0] < 1 || idx[1] < 1 || idx[0] > nx - 2 || idx[1] > ny - 2 {
            log::warn!(
                "resolvent_apply: evaluation point ({}, {}) is within one cell of the field boundary",
                x[0],
                x[1]
            );
        }
        groups.entry(key).or_insert_with(|| (Vec::new(), offset)).0.push((n, idx));
    }

    let rules = CellRules::new();
    let mut out = vec![[zero, zero]; x_eval.len()];
    for (members, offset) in groups.into_values() {
        let mut lo = [i64::MAX; 2];
        let mut hi = [i64::MIN; 2];
        for (_, idx) in &members {
            for a in 0..2 {
                let n = if a == 0 { nx } else { ny };
                lo[a] = lo[a].min(idx[a] - (n - 1));
                hi[a] = hi[a].max(idx[a]);
            }
        }
        let table = OffsetTable::build(k, h, offset, lo, hi, &rules)?;
        let results: Vec<(usize, Spinor)> = members
            .par_iter()
            .map(|&(n, idx)| {
                let mut acc = [zero, zero];
                for j in 0..field.ny {
                    for i in 0..field.nx {
                        let f = field.value(i, j);
                        if f[0] == zero && f[1] == zero {
                            continue;
                        }
                        let w = table.get([idx[0] - i as i64, idx[1] - j as i64]).assemble(m, z);
                        let v = w.apply(&f);
                        acc[0] += v[0];
                        acc[1] += v[1];
                    }
                }
                (n, acc)
            })
            .collect();
        for (n, v) in results {
            out[n] = v;
        }
    }
    Ok(out)
}

fn spinor_column(v: Spinor) -> Mat2C {
    let zero = Complex64::new(0.0, 0.0);
    Mat2C::new(v[0], zero, v[1], zero)
}

/// Applies the free Dirac operator by central differences (step = grid
/// spacing) to `resolvent_apply(f)` at the given interior cells and returns the
/// largest relative deviation from `f` there.
pub fn resolvent_round_trip(m: f64, z: Complex64, field: &SpinorField, cells: &[(usize, usize)]) -> Result<f64> {
    let (nx, ny) = field.shape();
    let mut points = Vec::with_capacity(5 * cells.len());
    for &(i, j) in cells {
        if i == 0 || j == 0 || i + 1 >= nx || j + 1 >= ny {
            return Err(Error::precondition(format!("cell ({i}, {j}) is not interior to the {nx} x {ny} grid")));
        }
        for (di, dj) in [(0i64, 0i64), (1, 0), (-1, 0), (0, 1), (0, -1)] {
            points.push(field.center((i as i64 + di) as usize, (j as i64 + dj) as usize));
        }
    }
    let u = resolvent_apply(m, z, field, &points)?;
    let h = field.spacing();
    let mut worst = 0.0f64;
    for (n, &(i, j)) in cells.iter().enumerate() {
        let s = &u[5 * n..5 * n + 5];
        let col = |v: Spinor| spinor_column(v);
        let d1 = (col(s[1]) - col(s[2])) * (0.5 / h);
        let d2 = (col(s[3]) - col(s[4])) * (0.5 / h);
        let lhs = dirac_apply(m, z, col(s[0]), d1, d2);
        let f = field.value(i, j);
        let err = ((lhs.a11() - f[0]).norm_sqr() + (lhs.a21() - f[1]).norm_sqr()).sqrt();
        let scale = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
        if scale == 0.0 {
            return Err(Error::precondition(format!("field vanishes at cell ({i}, {j})")));
        }
        worst = worst.max(err / scale);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c64;

    #[test]
    fn kernel_example() {
        let g = green_kernel(1.0, c64(0.0, 0.0), [1.0, 0.0]).unwrap();
        let k0 = 0.42102443824070834 / (2.0 * PI);
        let k1 = 0.60190723019723457 / (2.0 * PI);
        assert!((g.a11() - c64(k0, 0.0)).norm() < 1e-14);
        assert!((g.a22() - c64(-k0, 0.0)).norm() < 1e-14);
        assert!((g.a12() - c64(0.0, k1)).norm() < 1e-14);
        assert!((g.a21() - c64(0.0, k1)).norm() < 1e-14);

        let g2 = green_kernel(1.0, c64(0.0, 0.0), [0.0, 1.0]).unwrap();
        assert!((g2.a12() - c64(k1, 0.0)).norm() < 1e-14);
        assert!((g2.a21() - c64(-k1, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn kernel_domain() {
        assert!(green_kernel(1.0, c64(0.5, 0.0), [0.0, 0.0]).is_err());
        assert!(matches!(green_kernel(1.0, c64(1.5, 0.0), [1.0, 0.0]), Err(Error::Domain(_))));
        assert!(matches!(pde_residual(0.0, c64(0.0, 0.0), [1.0, 0.0], 1e-3), Err(Error::Domain(_))));
        assert!(matches!(pde_residual(1.0, c64(0.0, 0.0), [1.0, 0.0], 0.25), Err(Error::Step { .. })));
    }

    #[test]
    fn pde_residual_small() {
        let r = pde_residual(1.0, c64(0.0, 0.0), [1.0, 0.0], 1e-3).unwrap();
        assert!(r.max_abs() < 1e-4, "{r}");
        let ratio = richardson_ratio(1.0, c64(0.2, 0.3), [0.7, -1.1], 1e-2).unwrap();
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn fourier_examples() {
        assert!((k0_fourier_transform(1.0, 0.0).unwrap() - (PI / 2.0).sqrt()).abs() < 1e-6);
        let v = k0_fourier_transform(2.0, 2.0).unwrap();
        assert!((v - (PI / 2.0).sqrt() / 8f64.sqrt()).abs() < 1e-6);
        assert!(k0_fourier_transform(0.0, 1.0).is_err());
    }

    #[test]
    fn zero_field() {
        let f = SpinorField::new([0.0, 0.0], 0.1, 3, 3, vec![[c64(0.0, 0.0); 2]; 9]).unwrap();
        let u = resolvent_apply(1.0, c64(0.0, 0.5), &f, &[[0.1, 0.1], [5.0, 5.0]]).unwrap();
        assert!(u.iter().all(|v| v[0].norm() == 0.0 && v[1].norm() == 0.0));
        assert!(SpinorField::new([0.0, 0.0], 0.1, 3, 3, vec![]).is_err());
    }
}
