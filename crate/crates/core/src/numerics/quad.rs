//! Quadrature rules: adaptive tanh-sinh on finite intervals and Gauss-Legendre nodes.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Values that can be accumulated by the quadrature rules.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

/// A pair of real integrands sharing the same nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair(pub f64, pub f64);

impl Add for Pair {
    type Output = Pair;
    fn add(self, o: Pair) -> Pair {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Pair {
    type Output = Pair;
    fn sub(self, o: Pair) -> Pair {
        Pair(self.0 - o.0, self.1 - o.1)
    }
}

impl Mul<f64> for Pair {
    type Output = Pair;
    fn mul(self, s: f64) -> Pair {
        Pair(self.0 * s, self.1 * s)
    }
}

impl QuadValue for Pair {
    fn zero() -> Self {
        Pair(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.0.abs().max(self.1.abs())
    }
    fn is_finite_value(&self) -> bool {
        self.0.is_finite() && self.1.is_finite()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TanhSinh {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_level: u32,
}

impl Default for TanhSinh {
    fn default() -> Self {
        TanhSinh {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_level: 10,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadEstimate<T> {
    pub value: T,
    /// Difference between the last two refinement levels.
    pub error: f64,
    pub evaluations: usize,
}

// Truncation of the transformed variable; endpoint distances reach ~1e-37 relative.
const T_MAX: f64 = 4.0;

impl TanhSinh {
    pub fn with_tol(rel_tol: f64) -> Self {
        TanhSinh {
            rel_tol,
            ..Default::default()
        }
    }

    /// Integrate `f` over `[a, b]`.
    ///
    /// Nodes never coincide with the endpoints, so integrable endpoint
    /// singularities are allowed. Non-finite samples are dropped.
    pub fn integrate<T, F>(&self, a: f64, b: f64, mut f: F) -> Result<QuadEstimate<T>>
    where
        T: QuadValue,
        F: FnMut(f64) -> T,
    {
        self.integrate_with_offsets(a, b, |x, _, _| f(x))
    }

    /// Like [`TanhSinh::integrate`], but `f(x, x - a, b - x)` also receives the
    /// distances to both endpoints, computed without cancellation.
    pub fn integrate_with_offsets<T, F>(&self, a: f64, b: f64, mut f: F) -> Result<QuadEstimate<T>>
    where
        T: QuadValue,
        F: FnMut(f64, f64, f64) -> T,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::domain("tanh-sinh needs a finite interval"));
        }
        if a == b {
            return Ok(QuadEstimate {
                value: T::zero(),
                error: 0.0,
                evaluations: 0,
            });
        }
        if a > b {
            let est = self.integrate_ordered(b, a, &mut |x, da, db| f(x, db, da))?;
            return Ok(QuadEstimate {
                value: est.value * -1.0,
                ..est
            });
        }
        self.integrate_ordered(a, b, &mut f)
    }

    fn integrate_ordered<T: QuadValue>(
        &self,
        a: f64,
        b: f64,
        f: &mut dyn FnMut(f64, f64, f64) -> T,
    ) -> Result<QuadEstimate<T>> {

        let half = 0.5 * (b - a);
        let mid = a + half;
        let mut evaluations = 0usize;

        // Weighted sample at transformed abscissa t.
        let mut sample = |t: f64| -> T {
            let v = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * v.abs()).exp();
            // sech^2(v) = 4 e / (1 + e)^2 and 1 - tanh|v| = 2 e / (1 + e)
            let weight = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
            let offset = half * 2.0 * e / (1.0 + e);
            let (x, da, db) = if t > 0.0 {
                (b - offset, 2.0 * half - offset, offset)
            } else if t < 0.0 {
                (a + offset, offset, 2.0 * half - offset)
            } else {
                (mid, half, half)
            };
            evaluations += 1;
            let y = f(x, da, db);
            if y.is_finite_value() {
                y * weight
            } else {
                T::zero()
            }
        };

        let mut h = 1.0;
        let mut sum = sample(0.0);
        let n0 = T_MAX as i64;
        for k in 1..=n0 {
            let t = k as f64;
            sum = sum + sample(t) + sample(-t);
        }
        let mut estimate = sum * (h * half);
        let mut error = f64::INFINITY;

        for level in 1..=self.max_level {
            h *= 0.5;
            let steps = (T_MAX / h) as i64;
            let mut k = 1;
            while k <= steps {
                let t = k as f64 * h;
                sum = sum + sample(t) + sample(-t);
                k += 2;
            }
            let next = sum * (h * half);
            error = (next - estimate).magnitude();
            estimate = next;
            if level >= 3 && error <= (self.rel_tol * estimate.magnitude()).max(self.abs_tol) {
                return Ok(QuadEstimate {
                    value: estimate,
                    error,
                    evaluations,
                });
            }
        }

        Err(Error::Convergence(format!(
            "tanh-sinh on [{a}, {b}] reached level {} with difference {error:e}",
            self.max_level
        )))
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..(n + 1) / 2 {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// Gauss-Legendre rule mapped onto `[a, b]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights on `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<T: QuadValue>(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> T) -> T {
        self.mapped(a, b)
            .fold(T::zero(), |acc, (x, w)| acc + f(x) * w)
    }
}
