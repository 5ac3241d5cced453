use std::f64::consts::PI;
use std::time::Instant;

use dirac_shell::greens::{
    decay_fit, fourier_pair_check, green_kernel, k0_fourier_transform, kernel_decay, kernel_parts, resolvent_apply,
    resolvent_round_trip, richardson_ratio, SpinorField,
};
use dirac_shell::numerics::c64;
use dirac_shell::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gaussian_field(spacing: f64, half: f64, s: f64) -> SpinorField {
    let n = (2.0 * half / spacing).round() as usize + 1;
    SpinorField::from_fn([-half, -half], spacing, n, n, |x| {
        let g = (-(x[0] * x[0] + x[1] * x[1]) / (2.0 * s * s)).exp();
        [c64(g, 0.0), c64(0.5 * g, 0.0)]
    })
    .unwrap()
}

#[test]
fn kernel_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let x = [rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)];
        let z = c64(rng.gen_range(-0.5..0.5), rng.gen_range(-1.0..1.0));
        let p = kernel_parts(1.3, z, x).unwrap();
        let q = kernel_parts(1.3, z, [-x[0], -x[1]]).unwrap();
        assert!((p.a - q.a).norm() <= 1e-14 * p.a.norm());
        for j in 0..2 {
            assert!((p.b[j] + q.b[j]).norm() <= 1e-14 * p.b[j].norm().max(1e-300));
        }
    }
}

#[test]
fn kernel_far_field_bound() {
    for z in [c64(0.0, 0.0), c64(0.5, 0.0), c64(-0.3, 0.2)] {
        let k = kernel_decay(1.0, z).unwrap();
        for r in [20.0, 25.0, 30.0] {
            for dir in [[1.0, 0.0], [0.6, 0.8], [0.0, -1.0]] {
                let g = green_kernel(1.0, z, [r * dir[0], r * dir[1]]).unwrap();
                assert!(g.max_abs() <= (-0.9 * k.re * r).exp(), "z={z} r={r}");
            }
        }
    }
}

#[test]
fn pde_residual_second_order_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = 1.0;
    for _ in 0..20 {
        let r = rng.gen_range(0.5..5.0);
        let phi = rng.gen_range(0.0..2.0 * PI);
        let z = Complex64::from_polar(rng.gen_range(0.0..0.5 * m), rng.gen_range(0.0..2.0 * PI));
        let x = [r * phi.cos(), r * phi.sin()];
        let ratio = richardson_ratio(m, z, x, 1e-2).unwrap();
        assert!((3.5..=4.5).contains(&ratio), "x={x:?} z={z}: {ratio}");
    }
}

#[test]
fn fourier_pair_on_stated_ranges() {
    let grid: Vec<f64> = (0..=400).map(|i| -20.0 + 0.1 * i as f64).collect();
    for kappa in [0.5, 1.0, 2.0] {
        let err = fourier_pair_check(kappa, &grid).unwrap();
        assert!(err <= 1e-6, "kappa={kappa}: {err}");
    }
    for p in [0.0, 0.7, 3.0] {
        let a = k0_fourier_transform(2.0, p).unwrap();
        let b = k0_fourier_transform(1.0, p / 2.0).unwrap() / 2.0;
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn decay_rate_matches_fit() {
    for (m, z) in [(1.0, c64(0.0, 0.0)), (1.0, c64(0.5, 0.0)), (2.0, c64(0.3, 0.4)), (1.0, c64(0.0, 0.5))] {
        let fit = decay_fit(m, z, 5.0, 20.0).unwrap();
        assert!(fit.relative_error() < 0.05, "m={m} z={z}: {fit:?}");
    }
}

#[test]
fn resolvent_conjugate_symmetry() {
    let field = gaussian_field(0.1, 2.0, 0.5);
    let z = c64(0.3, 0.4);
    let pts = [[0.3, 0.2], [-0.7, 0.4], [1.03, -0.5]];
    let mirrored: Vec<[f64; 2]> = pts.iter().map(|x| [-x[0], x[1]]).collect();
    let u = resolvent_apply(1.0, z, &field, &pts).unwrap();
    let v = resolvent_apply(1.0, z.conj(), &field, &mirrored).unwrap();
    for (a, b) in u.iter().zip(&v) {
        for c in 0..2 {
            assert!((a[c].conj() - b[c]).norm() < 1e-12 * a[c].norm().max(1e-3), "{a:?} {b:?}");
        }
    }
}

#[test]
fn resolvent_round_trip_gaussian() {
    let start = Instant::now();
    let field = gaussian_field(0.02, 3.0, 0.5);
    let (nx, _) = field.shape();
    let c = nx / 2;
    let cells: Vec<(usize, usize)> = [(0i64, 0i64), (10, 0), (0, -15), (20, 20), (-25, 5), (35, -10)]
        .iter()
        .map(|&(di, dj)| ((c as i64 + di) as usize, (c as i64 + dj) as usize))
        .collect();
    let on_edge = resolvent_apply(1.0, c64(0.0, 0.5), &field, &[[0.01, 0.0], [0.01 + 1e-15, 0.0], [0.01 - 1e-15, 0.0]])
        .unwrap();
    for v in &on_edge[1..] {
        assert!((v[0] - on_edge[0][0]).norm() < 1e-6 * on_edge[0][0].norm());
    }
    let residual = resolvent_round_trip(1.0, c64(0.0, 0.5), &field, &cells).unwrap();
    assert!(residual < 0.02, "round-trip residual {residual}");
    assert!(start.elapsed().as_secs_f64() < 60.0);
}
