pub mod error;
pub mod fiber;
pub mod greens;
pub mod grid;
pub mod numerics;
pub mod params;
pub mod spectrum;
pub mod symbol;
pub mod tol;

pub use error::{Error, Result};
pub use fiber::FiberSolution;
pub use numerics::{Complex64, Mat2C};
pub use params::ShellParams;
pub use spectrum::{SpectralComponent, SpectrumDescription};
pub use symbol::SymbolPoint;
