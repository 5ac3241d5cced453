use std::str::FromStr;

use dirac_shell::fiber::{fiber_eigenvalue, quasimode_residual};
use dirac_shell::greens::{green_kernel, pde_residual};
use dirac_shell::spectrum::{
    band_edge, dispersion_z, full_spectrum, gap_side, GapSide, Multiplicity, SpectralComponent, SpectralType,
};
use dirac_shell::symbol::{c_func, det_theta, theta_inv, theta_z, weyl_symbol, SymbolPoint};
use dirac_shell::{grid, Complex64, Error, ShellParams, SpectrumDescription};
use serde::{Deserialize, Serialize};

use crate::args::{Coupling, Format, MomentumGrid};
use crate::error::{usage, CliError};
use crate::format::{complex, g17, matrix, Num};

pub const SCHEMA: &str = "dirac-shell/1";

pub fn params(c: &Coupling) -> Result<ShellParams, CliError> {
    Ok(ShellParams::parse(&c.eta, &c.m)?)
}

pub fn parse_real(name: &str, s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| usage(format!("--{name}: `{s}` is not a finite number")))
}

pub fn parse_complex(name: &str, s: &str) -> Result<Complex64, CliError> {
    Complex64::from_str(s.trim())
        .ok()
        .filter(|z| z.is_finite())
        .ok_or_else(|| usage(format!("--{name}: `{s}` is not a complex number (e.g. 0.5, 0.5+0.1i)")))
}

pub fn momentum_grid(g: &MomentumGrid) -> Result<Vec<f64>, CliError> {
    if g.p_count < 2 || !(g.p_min < g.p_max) {
        return Err(usage(format!(
            "momentum grid needs --p-count >= 2 and --p-min < --p-max, got {} nodes on [{}, {}]",
            g.p_count, g.p_min, g.p_max
        )));
    }
    Ok(grid::linear(g.p_min, g.p_max, g.p_count)?)
}

fn json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypeDoc {
    Continuous,
    Eigenvalue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentDoc {
    RayLeft {
        endpoint: Num,
        closed: bool,
        #[serde(rename = "type")]
        spectral_type: TypeDoc,
    },
    RayRight {
        endpoint: Num,
        closed: bool,
        #[serde(rename = "type")]
        spectral_type: TypeDoc,
    },
    FullLine {
        #[serde(rename = "type")]
        spectral_type: TypeDoc,
    },
    Point {
        value: Num,
        #[serde(rename = "type")]
        spectral_type: TypeDoc,
        /// `"infinite"` or a decimal count.
        multiplicity: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub schema: String,
    pub eta: Num,
    pub m: Num,
    pub components: Vec<ComponentDoc>,
}

fn type_doc(t: SpectralType) -> TypeDoc {
    match t {
        SpectralType::Continuous => TypeDoc::Continuous,
        SpectralType::Eigenvalue => TypeDoc::Eigenvalue,
    }
}

impl SpectrumDoc {
    pub fn new(s: &SpectrumDescription) -> Self {
        let components = s
            .components
            .iter()
            .map(|c| {
                let spectral_type = type_doc(c.spectral_type());
                match *c {
                    SpectralComponent::RayLeft { end } => ComponentDoc::RayLeft {
                        endpoint: Num(end),
                        closed: true,
                        spectral_type,
                    },
                    SpectralComponent::RayRight { start } => ComponentDoc::RayRight {
                        endpoint: Num(start),
                        closed: true,
                        spectral_type,
                    },
                    SpectralComponent::FullLine => ComponentDoc::FullLine { spectral_type },
                    SpectralComponent::Point { value, multiplicity } => ComponentDoc::Point {
                        value: Num(value),
                        spectral_type,
                        multiplicity: match multiplicity {
                            Multiplicity::Infinite => "infinite".to_string(),
                            Multiplicity::Finite(n) => n.to_string(),
                        },
                    },
                }
            })
            .collect();
        SpectrumDoc {
            schema: SCHEMA.to_string(),
            eta: Num(s.params.eta()),
            m: Num(s.params.m()),
            components,
        }
    }

    /// Inverse of [`SpectrumDoc::new`].
    pub fn to_description(&self) -> Result<SpectrumDescription, CliError> {
        if self.schema != SCHEMA {
            return Err(usage(format!("unsupported schema `{}`", self.schema)));
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(match c {
                    ComponentDoc::RayLeft { endpoint, .. } => SpectralComponent::RayLeft { end: endpoint.0 },
                    ComponentDoc::RayRight { endpoint, .. } => SpectralComponent::RayRight { start: endpoint.0 },
                    ComponentDoc::FullLine { .. } => SpectralComponent::FullLine,
                    ComponentDoc::Point { value, multiplicity, .. } => SpectralComponent::Point {
                        value: value.0,
                        multiplicity: if multiplicity == "infinite" {
                            Multiplicity::Infinite
                        } else {
                            Multiplicity::Finite(
                                multiplicity
                                    .parse()
                                    .map_err(|_| usage(format!("bad multiplicity `{multiplicity}`")))?,
                            )
                        },
                    },
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(SpectrumDescription {
            params: ShellParams::new(self.eta.0, self.m.0)?,
            components,
        })
    }
}

pub fn parse_spectrum(text: &str) -> Result<SpectrumDescription, CliError> {
    serde_json::from_str::<SpectrumDoc>(text)?.to_description()
}

pub fn spectrum(p: &ShellParams, format: Format) -> Result<String, CliError> {
    let doc = SpectrumDoc::new(&full_spectrum(p));
    match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let rows = full_spectrum(p).components.into_iter().map(|c| {
                let (kind, mult) = match c {
                    SpectralComponent::RayLeft { .. } => ("ray-left", String::new()),
                    SpectralComponent::RayRight { .. } => ("ray-right", String::new()),
                    SpectralComponent::FullLine => ("full-line", String::new()),
                    SpectralComponent::Point { multiplicity, .. } => (
                        "point",
                        match multiplicity {
                            Multiplicity::Infinite => "infinite".to_string(),
                            Multiplicity::Finite(n) => n.to_string(),
                        },
                    ),
                };
                let ty = match c.spectral_type() {
                    SpectralType::Continuous => "continuous",
                    SpectralType::Eigenvalue => "eigenvalue",
                };
                vec![kind.to_string(), g17(c.left()), g17(c.right()), ty.to_string(), mult]
            });
            csv_text(&["kind", "start", "end", "type", "multiplicity"], rows)
        }
    }
}

#[derive(Serialize)]
struct Gap {
    start: Num,
    end: Num,
}

#[derive(Serialize)]
struct BandEdgesDoc {
    schema: &'static str,
    eta: Num,
    m: Num,
    band_edge: Num,
    /// Half of the free gap that carries the interaction band.
    side: Option<&'static str>,
    /// Open intervals between consecutive spectral components.
    gaps: Vec<Gap>,
}

pub fn band_edges(p: &ShellParams, format: Format) -> Result<String, CliError> {
    let comps = full_spectrum(p).components;
    let gaps: Vec<Gap> = comps
        .windows(2)
        .filter(|w| w[0].right() < w[1].left())
        .map(|w| Gap {
            start: Num(w[0].right()),
            end: Num(w[1].left()),
        })
        .collect();
    match format {
        Format::Json => json(&BandEdgesDoc {
            schema: SCHEMA,
            eta: Num(p.eta()),
            m: Num(p.m()),
            band_edge: Num(band_edge(p)),
            side: gap_side(p).map(|s| match s {
                GapSide::Negative => "negative",
                GapSide::Positive => "positive",
            }),
            gaps,
        }),
        Format::Csv => csv_text(
            &["start", "end"],
            gaps.iter().map(|g| vec![g17(g.start.0), g17(g.end.0)]),
        ),
    }
}

#[derive(Serialize)]
struct PzRow {
    p: Num,
    z: Num,
}

#[derive(Serialize)]
struct DispersionDoc {
    schema: &'static str,
    eta: Num,
    m: Num,
    rows: Vec<PzRow>,
}

pub fn dispersion(p: &ShellParams, grid: &[f64], format: Format) -> Result<String, CliError> {
    let rows = grid
        .iter()
        .map(|&q| Ok((q, dispersion_z(p, q)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    match format {
        Format::Csv => csv_text(&["p", "z"], rows.iter().map(|&(q, z)| vec![g17(q), g17(z)])),
        Format::Json => json(&DispersionDoc {
            schema: SCHEMA,
            eta: Num(p.eta()),
            m: Num(p.m()),
            rows: rows.iter().map(|&(q, z)| PzRow { p: Num(q), z: Num(z) }).collect(),
        }),
    }
}

type MatDoc = [[[Num; 2]; 2]; 2];

#[derive(Serialize)]
struct SymbolRow {
    p: Num,
    kappa: [Num; 2],
    det_theta: [Num; 2],
    c: [Num; 2],
    theta_z: MatDoc,
    /// `null` where the symbol is singular.
    theta_inv: Option<MatDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weyl: Option<MatDoc>,
}

#[derive(Serialize)]
struct SymbolDoc {
    schema: &'static str,
    eta: Num,
    m: Num,
    z: [Num; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta: Option<[Num; 2]>,
    rows: Vec<SymbolRow>,
}

pub fn symbol_eval(
    p: &ShellParams,
    grid: &[f64],
    z: Complex64,
    zeta: Option<Complex64>,
    format: Format,
) -> Result<String, CliError> {
    let mut rows = Vec::with_capacity(grid.len());
    for &q in grid {
        let pt = SymbolPoint::new(p, q, z)?;
        let inv = match theta_inv(p, &pt) {
            Ok(inv) => Some(matrix(&inv)),
            Err(Error::Singular { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let weyl = zeta.map(|zeta| weyl_symbol(p, z, zeta, q)).transpose()?;
        rows.push(SymbolRow {
            p: Num(q),
            kappa: complex(pt.kappa),
            det_theta: complex(det_theta(p, &pt)?),
            c: complex(c_func(p, &pt)?),
            theta_z: matrix(&theta_z(p, &pt)?),
            theta_inv: inv,
            weyl: weyl.as_ref().map(matrix),
        });
    }
    match format {
        Format::Json => json(&SymbolDoc {
            schema: SCHEMA,
            eta: Num(p.eta()),
            m: Num(p.m()),
            z: complex(z),
            zeta: zeta.map(complex),
            rows,
        }),
        Format::Csv => csv_text(
            &["p", "det_re", "det_im", "c_re", "c_im"],
            rows.iter().map(|r| {
                vec![
                    g17(r.p.0),
                    g17(r.det_theta[0].0),
                    g17(r.det_theta[1].0),
                    g17(r.c[0].0),
                    g17(r.c[1].0),
                ]
            }),
        ),
    }
}

#[derive(Serialize)]
struct GreensDoc {
    schema: &'static str,
    m: Num,
    z: [Num; 2],
    point: [Num; 2],
    kernel: MatDoc,
    h: Option<Num>,
    pde_residual: Option<MatDoc>,
}

pub fn greens_eval(m: f64, z: Complex64, x: [f64; 2], h: Option<f64>, format: Format) -> Result<String, CliError> {
    let kernel = green_kernel(m, z, x)?;
    let residual = match h {
        Some(h) => Some((h, pde_residual(m, z, x, h)?)),
        None => match pde_residual(m, z, x, 1e-3) {
            Ok(r) => Some((1e-3, r)),
            Err(Error::Step { .. }) => None,
            Err(e) => return Err(e.into()),
        },
    };
    match format {
        Format::Json => json(&GreensDoc {
            schema: SCHEMA,
            m: Num(m),
            z: complex(z),
            point: [Num(x[0]), Num(x[1])],
            kernel: matrix(&kernel),
            h: residual.map(|r| Num(r.0)),
            pde_residual: residual.map(|r| matrix(&r.1)),
        }),
        Format::Csv => {
            let names = ["g11", "g12", "g21", "g22"];
            let mut rows: Vec<Vec<String>> = names
                .iter()
                .zip(kernel.entries())
                .map(|(n, v)| vec![n.to_string(), g17(v.re), g17(v.im)])
                .collect();
            if let Some((_, r)) = residual {
                let names = ["r11", "r12", "r21", "r22"];
                rows.extend(names.iter().zip(r.entries()).map(|(n, v)| vec![n.to_string(), g17(v.re), g17(v.im)]));
            }
            csv_text(&["entry", "re", "im"], rows)
        }
    }
}

#[derive(Serialize)]
struct QuasimodeRow {
    width: Num,
    residual: Num,
}

#[derive(Serialize)]
struct QuasimodeDoc {
    schema: &'static str,
    eta: Num,
    m: Num,
    p0: Num,
    z0: Num,
    rows: Vec<QuasimodeRow>,
}

pub fn quasimode(p: &ShellParams, p0: f64, widths: &[f64], format: Format) -> Result<String, CliError> {
    if widths.is_empty() {
        return Err(usage("--width needs at least one value"));
    }
    let z0 = fiber_eigenvalue(p, p0)?.ok_or_else(|| {
        Error::Precondition(format!("no fiber bound state at p0 = {p0} for eta = {}", p.eta()))
    })?;
    let rows = widths
        .iter()
        .map(|&w| Ok((w, quasimode_residual(p, p0, w)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    match format {
        Format::Csv => csv_text(&["width", "residual"], rows.iter().map(|&(w, r)| vec![g17(w), g17(r)])),
        Format::Json => json(&QuasimodeDoc {
            schema: SCHEMA,
            eta: Num(p.eta()),
            m: Num(p.m()),
            p0: Num(p0),
            z0: Num(z0),
            rows: rows
                .iter()
                .map(|&(w, r)| QuasimodeRow {
                    width: Num(w),
                    residual: Num(r),
                })
                .collect(),
        }),
    }
}
