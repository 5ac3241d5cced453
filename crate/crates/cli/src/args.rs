use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "dirac-shell", version, about = "Spectra of the 2D Dirac operator with a delta-shell interaction on a line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Coupling and mass as decimal strings; `2`, `2.0` and `-2` are critical.
#[derive(Debug, Clone, Args)]
pub struct Coupling {
    /// Shell coupling strength
    #[arg(long, allow_hyphen_values = true)]
    pub eta: String,
    /// Mass
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
}

#[derive(Debug, Clone, Args)]
pub struct MomentumGrid {
    /// Momentum grid, `--p-count` evenly spaced nodes on [p-min, p-max]
    #[arg(long, allow_hyphen_values = true, default_value_t = -5.0)]
    pub p_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 5.0)]
    pub p_max: f64,
    #[arg(long, default_value_t = 101)]
    pub p_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Symbol,
    Oracle,
    Critical,
    Limits,
    Greens,
    All,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// The spectrum as closed rays and points.
    Spectrum {
        #[command(flatten)]
        coupling: Coupling,
    },
    /// Inner band edge and the gaps of the spectrum.
    BandEdges {
        #[command(flatten)]
        coupling: Coupling,
    },
    /// Energies on the dispersion curve over a momentum grid.
    Dispersion {
        #[command(flatten)]
        coupling: Coupling,
        #[command(flatten)]
        grid: MomentumGrid,
    },
    /// Boundary symbols at a spectral parameter over a momentum grid.
    SymbolEval {
        #[command(flatten)]
        coupling: Coupling,
        #[command(flatten)]
        grid: MomentumGrid,
        /// Spectral parameter, e.g. `0.3`, `0.5+0.1i`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Reference point for the Weyl symbol.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
    },
    /// Free resolvent kernel and its finite-difference residual at one point.
    GreensEval {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Position `x1,x2`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Finite-difference step; defaults to 1e-3 when admissible.
        #[arg(long)]
        h: Option<f64>,
    },
    /// Relative residuals of Gaussian wave packets of fiber bound states.
    Quasimode {
        #[command(flatten)]
        coupling: Coupling,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        p0: f64,
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 0.25, 0.125])]
        width: Vec<f64>,
    },
    /// Run a verification suite and report each property.
    Verify {
        #[command(flatten)]
        coupling: Coupling,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Replace a threshold, `SUITE.PROPERTY=VALUE`.
        #[arg(long = "tol-override", value_name = "KEY=VAL")]
        tol_override: Vec<String>,
    },
}
