//! Verification suites: each property is measured, compared against a named
//! threshold and reported. Random samples come from a fixed seed and every
//! reduction is a max or min, so reports are reproducible byte for byte.

use std::collections::BTreeMap;

use dirac_shell::fiber::{
    fiber_eigenvalue, fiber_gap, kernel_at_zero_scan, matching_det, min_abs_matching_det_at_zero,
    quasimode_residual, FiberSolution,
};
use dirac_shell::greens::{
    decay_fit, fourier_pair_check, pde_residual, resolvent_round_trip, richardson_ratio, SpinorField,
};
use dirac_shell::spectrum::{dispersion_z, sign_condition};
use dirac_shell::symbol::{
    c_func, det_theta, det_theta_scale, limit_im_diag, limit_sup_diag, limit_weighted_diag, p_crit, theta_inv,
    theta_ref, theta_z, weyl_symbol, SymbolPoint,
};
use dirac_shell::{grid, Complex64, Error, Mat2C, ShellParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::Suite;
use crate::commands::SCHEMA;
use crate::error::{usage, CliError};
use crate::format::Num;

const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = ">")]
    Above,
}

impl Comparison {
    fn holds(self, measured: f64, threshold: f64) -> bool {
        match self {
            Comparison::AtMost => measured <= threshold,
            Comparison::Below => measured < threshold,
            Comparison::AtLeast => measured >= threshold,
            Comparison::Above => measured > threshold,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Property {
    pub suite: &'static str,
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub measured: Option<Num>,
    pub comparison: Comparison,
    pub threshold: Num,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: &'static str,
    pub eta: Num,
    pub m: Num,
    pub pass: bool,
    pub properties: Vec<Property>,
}

impl Report {
    pub fn failed(&self) -> impl Iterator<Item = &Property> {
        self.properties.iter().filter(|p| p.status == Status::Fail)
    }
}

const DEFAULTS: &[(&str, &str, Comparison, f64)] = &[
    ("symbol", "det-identity", Comparison::AtMost, 1e-12),
    ("symbol", "inverse-identity", Comparison::AtMost, 1e-12),
    ("symbol", "zeta-independence", Comparison::AtMost, 1e-12),
    ("symbol", "real-symmetry", Comparison::AtMost, 0.0),
    ("symbol", "zero-set-mismatches", Comparison::AtMost, 0.0),
    ("oracle", "dispersion-agreement", Comparison::AtMost, 1e-9),
    ("oracle", "eigenvector-residual", Comparison::AtMost, 1e-12),
    ("oracle", "absence-sign-changes", Comparison::AtMost, 0.0),
    ("oracle", "quasimode-decrease", Comparison::Below, 1.0),
    ("critical", "kernel-at-zero", Comparison::AtMost, 1e-9),
    ("critical", "min-matching-det-at-zero", Comparison::AtLeast, 1e-3),
    ("limits", "sup-decay-ratio", Comparison::Below, 0.05),
    ("limits", "weighted-decay-ratio", Comparison::Below, 0.05),
    ("limits", "im-limit", Comparison::Above, 1e-3),
    ("limits", "im-cauchy", Comparison::AtMost, 1e-6),
    ("greens", "pde-residual", Comparison::AtMost, 1e-4),
    ("greens", "richardson-min", Comparison::AtLeast, 3.5),
    ("greens", "richardson-max", Comparison::AtMost, 4.5),
    ("greens", "fourier-pair", Comparison::AtMost, 1e-6),
    ("greens", "decay-fit", Comparison::Below, 0.05),
    ("greens", "round-trip", Comparison::Below, 0.02),
];

/// Threshold table keyed by `suite.property`.
#[derive(Debug, Clone)]
pub struct Thresholds(BTreeMap<String, (Comparison, f64)>);

impl Thresholds {
    pub fn with_overrides(overrides: &[String]) -> Result<Self, CliError> {
        let mut map: BTreeMap<String, (Comparison, f64)> = DEFAULTS
            .iter()
            .map(|&(s, n, c, t)| (format!("{s}.{n}"), (c, t)))
            .collect();
        for o in overrides {
            let (key, val) = o
                .split_once('=')
                .ok_or_else(|| usage(format!("--tol-override `{o}` is not KEY=VAL")))?;
            let entry = map
                .get_mut(key.trim())
                .ok_or_else(|| usage(format!("--tol-override: unknown property `{key}`")))?;
            entry.1 = val
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| usage(format!("--tol-override: `{val}` is not a number")))?;
        }
        Ok(Thresholds(map))
    }

    fn get(&self, suite: &str, name: &str) -> (Comparison, f64) {
        self.0[&format!("{suite}.{name}")]
    }
}

struct Collector<'a> {
    thresholds: &'a Thresholds,
    out: Vec<Property>,
}

impl Collector<'_> {
    fn record(&mut self, suite: &'static str, name: &'static str, at: Option<String>, measured: f64, note: Option<String>) {
        let (comparison, threshold) = self.thresholds.get(suite, name);
        let status = if comparison.holds(measured, threshold) {
            Status::Pass
        } else {
            Status::Fail
        };
        self.out.push(Property {
            suite,
            name,
            at,
            measured: Some(Num(measured)),
            comparison,
            threshold: Num(threshold),
            status,
            note,
        });
    }

    fn skip(&mut self, suite: &'static str, name: &'static str, note: impl Into<String>) {
        let (comparison, threshold) = self.thresholds.get(suite, name);
        self.out.push(Property {
            suite,
            name,
            at: None,
            measured: None,
            comparison,
            threshold: Num(threshold),
            status: Status::NotApplicable,
            note: Some(note.into()),
        });
    }
}

pub fn run(params: &ShellParams, suite: Suite, thresholds: &Thresholds) -> Result<Report, CliError> {
    let mut c = Collector {
        thresholds,
        out: Vec::new(),
    };
    let all = suite == Suite::All;
    if all || suite == Suite::Symbol {
        symbol_suite(params, &mut c)?;
    }
    if all || suite == Suite::Oracle {
        oracle_suite(params, &mut c)?;
    }
    if all || suite == Suite::Critical {
        critical_suite(params, &mut c)?;
    }
    if all || suite == Suite::Limits {
        limits_suite(params, &mut c)?;
    }
    if all || suite == Suite::Greens {
        greens_suite(params, &mut c)?;
    }
    let pass = c.out.iter().all(|p| p.status != Status::Fail);
    Ok(Report {
        schema: SCHEMA,
        suite: match suite {
            Suite::Symbol => "symbol",
            Suite::Oracle => "oracle",
            Suite::Critical => "critical",
            Suite::Limits => "limits",
            Suite::Greens => "greens",
            Suite::All => "all",
        },
        eta: Num(params.eta()),
        m: Num(params.m()),
        pass,
        properties: c.out,
    })
}

fn random_z(rng: &mut ChaCha8Rng, m: f64) -> Complex64 {
    if m != 0.0 && rng.gen_bool(0.5) {
        Complex64::new(rng.gen_range(-0.999..0.999) * m.abs(), 0.0)
    } else {
        let im = rng.gen_range(0.01..3.0);
        Complex64::new(rng.gen_range(-3.0..3.0), if rng.gen_bool(0.5) { im } else { -im })
    }
}

fn symbol_suite(pr: &ShellParams, c: &mut Collector) -> Result<(), CliError> {
    const S: &str = "symbol";
    let names = [
        "det-identity",
        "inverse-identity",
        "zeta-independence",
        "real-symmetry",
        "zero-set-mismatches",
    ];
    if pr.is_free() {
        for n in names {
            c.skip(S, n, "eta = 0: the boundary symbols are undefined");
        }
        return Ok(());
    }
    const SAMPLES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let mut det_dev = 0.0f64;
    for _ in 0..SAMPLES {
        let pt = SymbolPoint::new(pr, rng.gen_range(-50.0..50.0), random_z(&mut rng, pr.m()))?;
        let direct = theta_z(pr, &pt)?.det();
        det_dev = det_dev.max((direct - det_theta(pr, &pt)?).norm() / det_theta_scale(pr, &pt));
    }
    c.record(S, "det-identity", None, det_dev, Some(format!("{SAMPLES} random samples, relative to term scale")));

    let mut inv_dev = 0.0f64;
    let mut used = 0;
    while used < SAMPLES {
        let pt = SymbolPoint::new(pr, rng.gen_range(-50.0..50.0), random_z(&mut rng, pr.m()))?;
        if c_func(pr, &pt)?.norm() < 1e-3 {
            continue;
        }
        let prod = theta_z(pr, &pt)? * theta_inv(pr, &pt)?;
        inv_dev = inv_dev.max((prod - Mat2C::identity()).max_abs());
        used += 1;
    }
    c.record(S, "inverse-identity", None, inv_dev, Some(format!("{SAMPLES} samples with |c| >= 1e-3")));

    let zetas = [
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 2.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(-3.0, 0.5),
    ];
    let mut zeta_dev = 0.0f64;
    for _ in 0..SAMPLES / zetas.len() {
        let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.01..3.0));
        let p = rng.gen_range(-50.0..50.0);
        let expected = theta_z(pr, &SymbolPoint::new(pr, p, z)?)?;
        for zeta in zetas {
            let diff = theta_ref(pr, zeta, p)? - weyl_symbol(pr, z, zeta, p)? - expected;
            zeta_dev = zeta_dev.max(diff.max_abs() / expected.max_abs().max(1.0));
        }
    }
    c.record(S, "zeta-independence", None, zeta_dev, Some("relative to the largest entry".into()));

    if pr.m() == 0.0 {
        c.skip(S, "real-symmetry", "m = 0: the gap is empty");
        c.skip(S, "zero-set-mismatches", "m = 0: the gap is empty");
        return Ok(());
    }
    let am = pr.abs_m();
    let mut asym = 0.0f64;
    for k in 0..40 {
        let p = -20.0 + k as f64;
        for j in 1..20 {
            let z = am * (-1.0 + 0.1 * j as f64);
            let pt = SymbolPoint::real(pr, p, z)?;
            let mut mats = vec![theta_z(pr, &pt)?];
            match theta_inv(pr, &pt) {
                Ok(inv) => mats.push(inv),
                Err(Error::Singular { .. }) => {}
                Err(e) => return Err(e.into()),
            }
            for a in mats {
                asym = asym.max(a.im().max_abs()).max((a.a12() - a.a21()).norm());
            }
        }
    }
    c.record(S, "real-symmetry", None, asym, Some("imaginary part and asymmetry for real z in the gap".into()));

    if pr.is_critical() {
        c.skip(S, "zero-set-mismatches", "critical coupling: det and c vanish only at z = 0");
        return Ok(());
    }
    let p_grid = grid::linear(-20.0, 20.0, 4001)?;
    let mut mismatches = 0usize;
    for j in 1..20 {
        let z = am * (-1.0 + 0.1 * j as f64);
        for &p in &p_grid {
            let pt = SymbolPoint::real(pr, p, z)?;
            if det_theta(pr, &pt)?.re.signum() != c_func(pr, &pt)?.re.signum() {
                mismatches += 1;
            }
        }
    }
    c.record(S, "zero-set-mismatches", None, mismatches as f64, Some("sign of det theta vs sign of c".into()));
    Ok(())
}

fn oracle_suite(pr: &ShellParams, c: &mut Collector) -> Result<(), CliError> {
    const S: &str = "oracle";
    let names = [
        "dispersion-agreement",
        "eigenvector-residual",
        "absence-sign-changes",
        "quasimode-decrease",
    ];
    if pr.is_free() || pr.is_critical() {
        for n in names {
            c.skip(S, n, "no dispersion curve for eta in {0, +-2}");
        }
        return Ok(());
    }

    let mut worst = 0.0f64;
    let mut residual = 0.0f64;
    for k in 0..=40 {
        let p = 0.25 * k as f64;
        let symbol = dispersion_z(pr, p)?;
        match fiber_eigenvalue(pr, p)? {
            Some(z) => {
                worst = worst.max((z - symbol).abs());
                let (a, b) = FiberSolution::new(pr, p, z)?.eigen_residuals(pr);
                residual = residual.max(a).max(b);
            }
            None if fiber_gap(pr, p) == 0.0 => {}
            None => worst = f64::INFINITY,
        }
    }
    c.record(S, "dispersion-agreement", None, worst, Some("p = 0, 0.25, ..., 10".into()));
    c.record(S, "eigenvector-residual", None, residual, None);

    let mut changes = 0usize;
    for p in [0.0, 0.5, 1.0, 3.0, -2.0] {
        let e = fiber_gap(pr, p) * (1.0 - 1e-3);
        if e == 0.0 {
            continue;
        }
        let mut prev: Option<f64> = None;
        for k in 0..2000 {
            let z = -e + 2.0 * e * k as f64 / 1999.0;
            if sign_condition(pr, z)? {
                continue;
            }
            let s = matching_det(pr, p, z)?.re.signum();
            if prev.is_some_and(|q| q != s) {
                changes += 1;
            }
            prev = Some(s);
        }
    }
    c.record(S, "absence-sign-changes", None, changes as f64, Some("scan restricted to z violating the sign condition".into()));

    let p0 = if pr.m() == 0.0 { 1.0 } else { 0.0 };
    let widths = [0.5, 0.25, 0.125];
    let r = widths
        .iter()
        .map(|&w| quasimode_residual(pr, p0, w))
        .collect::<Result<Vec<_>, Error>>()?;
    let ratio = r.windows(2).map(|w| w[1] / w[0]).fold(0.0f64, f64::max);
    c.record(
        S,
        "quasimode-decrease",
        Some(format!("p0={p0}")),
        ratio,
        Some(format!("largest R(w/2) / R(w) over w = 0.5, 0.25; R(0.125) = {:e}", r[2])),
    );
    Ok(())
}

fn critical_suite(pr: &ShellParams, c: &mut Collector) -> Result<(), CliError> {
    const S: &str = "critical";
    if pr.is_free() {
        c.skip(S, "kernel-at-zero", "eta = 0: no transmission condition");
        c.skip(S, "min-matching-det-at-zero", "eta = 0: no transmission condition");
        return Ok(());
    }
    let p_grid: Vec<f64> = grid::linear(-50.0, 50.0, 2001)?
        .into_iter()
        .filter(|&p| fiber_gap(pr, p) > 0.0)
        .collect();
    if pr.is_critical() {
        c.record(S, "kernel-at-zero", None, kernel_at_zero_scan(pr, &p_grid)?, Some("max |matching det| at z = 0, |p| <= 50".into()));
        c.skip(S, "min-matching-det-at-zero", "critical coupling");
    } else {
        c.skip(S, "kernel-at-zero", "coupling is not critical");
        c.record(
            S,
            "min-matching-det-at-zero",
            None,
            min_abs_matching_det_at_zero(pr, &p_grid)?,
            Some("min |matching det| at z = 0, |p| <= 50".into()),
        );
    }
    Ok(())
}

fn limits_suite(pr: &ShellParams, c: &mut Collector) -> Result<(), CliError> {
    const S: &str = "limits";
    if pr.is_free() || pr.m() == 0.0 {
        let why = if pr.is_free() {
            "eta = 0: the boundary symbols are undefined"
        } else {
            "m = 0: the diagnostic energies +-m, +-1.5m, +-2m degenerate"
        };
        for n in ["sup-decay-ratio", "weighted-decay-ratio", "im-limit", "im-cauchy"] {
            c.skip(S, n, why);
        }
        return Ok(());
    }
    let am = pr.abs_m();
    let ys = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];
    let p_grid = grid::default_diagnostic();
    for x in [am, -am, 1.5 * am, -1.5 * am] {
        let at = Some(format!("x={}", crate::format::g17(x)));
        match p_crit(pr, x)? {
            None => {
                let rows = limit_sup_diag(pr, x, &ys, &p_grid)?;
                c.record(S, "sup-decay-ratio", at, rows[4].value / rows[0].value, Some("y = 1e-5 vs y = 1e-1".into()));
            }
            Some((_, pp)) => {
                let rows = limit_weighted_diag(pr, x, &ys)?;
                c.record(
                    S,
                    "weighted-decay-ratio",
                    at,
                    rows[4].value / rows[0].value,
                    Some(format!(
                        "c vanishes at p = +-{}; the sup-norm stays O(1), so the action on a Gaussian is measured",
                        crate::format::g17(pp)
                    )),
                );
            }
        }
    }
    let im_ys = [1e-2, 1e-4, 1e-6, 1e-8];
    for x in [2.0 * am, -2.0 * am] {
        let rows = limit_im_diag(pr, x, (-am, am), &im_ys)?;
        let at = Some(format!("x={}", crate::format::g17(x)));
        c.record(S, "im-limit", at.clone(), rows[3].value, Some(format!("p in [-{am}, {am}], y = 1e-8")));
        c.record(S, "im-cauchy", at, (rows[3].value - rows[2].value).abs(), Some("y = 1e-6 vs y = 1e-8".into()));
    }
    Ok(())
}

fn greens_suite(pr: &ShellParams, c: &mut Collector) -> Result<(), CliError> {
    const S: &str = "greens";
    let m = pr.m();
    let z_ref = if m == 0.0 {
        Complex64::new(0.0, 0.5)
    } else {
        Complex64::new(0.0, 0.0)
    };
    let r = pde_residual(m, z_ref, [1.0, 0.0], 1e-3)?;
    c.record(S, "pde-residual", Some("x=(1,0), h=1e-3".into()), r.max_abs(), Some(format!("z = {z_ref}")));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for _ in 0..20 {
        let radius = rng.gen_range(0.5..5.0);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let z = if m == 0.0 {
            Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.25..1.0))
        } else {
            Complex64::from_polar(rng.gen_range(0.0..0.5 * m.abs()), rng.gen_range(0.0..std::f64::consts::TAU))
        };
        let ratio = richardson_ratio(m, z, [radius * phi.cos(), radius * phi.sin()], 1e-2)?;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    c.record(S, "richardson-min", None, lo, Some("20 random points, h = 1e-2 vs 5e-3".into()));
    c.record(S, "richardson-max", None, hi, Some("20 random points, h = 1e-2 vs 5e-3".into()));

    let p_grid = grid::linear(-20.0, 20.0, 401)?;
    let mut fourier = 0.0f64;
    for kappa in [0.5, 1.0, 2.0] {
        fourier = fourier.max(fourier_pair_check(kappa, &p_grid)?);
    }
    c.record(S, "fourier-pair", None, fourier, Some("kappa in {0.5, 1, 2}, p in [-20, 20]".into()));

    let fit = decay_fit(m, z_ref, 5.0, 20.0)?;
    c.record(
        S,
        "decay-fit",
        None,
        fit.relative_error(),
        Some(format!("fitted {:.6} vs Re k = {:.6}", fit.fitted, fit.expected)),
    );

    let field = SpinorField::from_fn([-3.0, -3.0], 0.02, 301, 301, |x| {
        let g = (-(x[0] * x[0] + x[1] * x[1]) / 0.5).exp();
        [Complex64::new(g, 0.0), Complex64::new(0.5 * g, 0.0)]
    })?;
    let cells = [(150, 150), (160, 150), (150, 135), (170, 170), (125, 155), (185, 140)];
    let z = Complex64::new(0.0, 0.5);
    let residual = resolvent_round_trip(m, z, &field, &cells)?;
    c.record(S, "round-trip", None, residual, Some("Gaussian source, spacing 0.02, z = i/2".into()));
    Ok(())
}
