use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dirac_shell::fiber::fiber_eigenvalue;
use dirac_shell::numerics::c64;
use dirac_shell::spectrum::{dispersion_z, full_spectrum};
use dirac_shell::symbol::{det_theta, theta_inv, SymbolPoint};
use dirac_shell::ShellParams;

fn spectrum(c: &mut Criterion) {
    let pr = ShellParams::new(3.0, 1.0).unwrap();
    c.bench_function("full_spectrum", |b| b.iter(|| full_spectrum(black_box(&pr))));
    c.bench_function("dispersion_z", |b| b.iter(|| dispersion_z(black_box(&pr), black_box(1.7))));
    c.bench_function("fiber_eigenvalue", |b| b.iter(|| fiber_eigenvalue(black_box(&pr), black_box(1.7))));
}

fn symbol(c: &mut Criterion) {
    let pr = ShellParams::new(1.5, 1.0).unwrap();
    let pt = SymbolPoint::new(&pr, 2.0, c64(0.3, 0.2)).unwrap();
    c.bench_function("det_theta", |b| b.iter(|| det_theta(black_box(&pr), black_box(&pt))));
    c.bench_function("theta_inv", |b| b.iter(|| theta_inv(black_box(&pr), black_box(&pt))));
}

criterion_group!(benches, spectrum, symbol);
criterion_main!(benches);
