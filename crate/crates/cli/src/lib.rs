//! Command-line surface of the toolkit. Everything here is I/O and formatting;
//! the numerics live in the `dirac-shell` crate.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;
pub mod verify;

use args::{Cli, Command, Format};
pub use error::CliError;

/// Rendered command output and whether every verified property passed.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Spectrum { coupling } => Ok(Output::ok(commands::spectrum(&commands::params(coupling)?, format)?)),
        Command::BandEdges { coupling } => Ok(Output::ok(commands::band_edges(&commands::params(coupling)?, format)?)),
        Command::Dispersion { coupling, grid } => {
            let p = commands::params(coupling)?;
            let grid = commands::momentum_grid(grid)?;
            Ok(Output::ok(commands::dispersion(&p, &grid, format)?))
        }
        Command::SymbolEval { coupling, grid, z, zeta } => {
            let p = commands::params(coupling)?;
            let grid = commands::momentum_grid(grid)?;
            let z = commands::parse_complex("z", z)?;
            let zeta = zeta.as_deref().map(|s| commands::parse_complex("zeta", s)).transpose()?;
            Ok(Output::ok(commands::symbol_eval(&p, &grid, z, zeta, format)?))
        }
        Command::GreensEval { m, z, point, h } => {
            let m = commands::parse_real("m", m)?;
            let z = commands::parse_complex("z", z)?;
            let (a, b) = point
                .split_once(',')
                .ok_or_else(|| error::usage(format!("--point `{point}` is not `x1,x2`")))?;
            let x = [commands::parse_real("point", a)?, commands::parse_real("point", b)?];
            Ok(Output::ok(commands::greens_eval(m, z, x, *h, format)?))
        }
        Command::Quasimode { coupling, p0, width } => {
            let p = commands::params(coupling)?;
            Ok(Output::ok(commands::quasimode(&p, *p0, width, format)?))
        }
        Command::Verify {
            coupling,
            suite,
            tol_override,
        } => {
            let p = commands::params(coupling)?;
            let thresholds = verify::Thresholds::with_overrides(tol_override)?;
            let report = verify::run(&p, *suite, &thresholds)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report)?;
                    s.push('\n');
                    s
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["suite", "name", "at", "measured", "comparison", "threshold", "status"])?;
                    for p in &report.properties {
                        let status = match p.status {
                            verify::Status::Pass => "pass",
                            verify::Status::Fail => "fail",
                            verify::Status::NotApplicable => "not-applicable",
                        };
                        let cmp = serde_json::to_value(p.comparison)?;
                        w.write_record([
                            p.suite,
                            p.name,
                            p.at.as_deref().unwrap_or(""),
                            &p.measured.map(|n| n.to_string()).unwrap_or_default(),
                            cmp.as_str().unwrap_or(""),
                            &p.threshold.to_string(),
                            status,
                        ])?;
                    }
                    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                    String::from_utf8(bytes).map_err(|e| error::usage(e.to_string()))?
                }
            };
            Ok(Output {
                text,
                success: report.pass,
            })
        }
    }
}
