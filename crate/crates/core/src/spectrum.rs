//! The spectrum of the shell operator as a union of closed rays and points.
//!
//! Inside the free gap `(-|m|, |m|)` the interaction creates a band
//! `|z| >= |m| |eta^2 - 4| / (eta^2 + 4)` on the side selected by the sign of
//! `eta (eta^2 - 4)`. At `eta = +-2` that band collapses to the single point
//! `0`, an eigenvalue of infinite multiplicity. Everything outside the gap is
//! continuous spectrum for every coupling, and for `m = 0` the spectrum is the
//! whole real line.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::params::ShellParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralType {
    Continuous,
    Eigenvalue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

/// One closed piece of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralComponent {
    /// `(-inf, end]`
    RayLeft { end: f64 },
    /// `[start, +inf)`
    RayRight { start: f64 },
    FullLine,
    /// An isolated eigenvalue.
    Point { value: f64, multiplicity: Multiplicity },
}

impl SpectralComponent {
    pub fn spectral_type(&self) -> SpectralType {
        match self {
            SpectralComponent::Point { .. } => SpectralType::Eigenvalue,
            _ => SpectralType::Continuous,
        }
    }

    /// Closed-set membership.
    pub fn contains(&self, z: f64) -> bool {
        match *self {
            SpectralComponent::RayLeft { end } => z <= end,
            SpectralComponent::RayRight { start } => z >= start,
            SpectralComponent::FullLine => true,
            SpectralComponent::Point { value, .. } => z == value,
        }
    }

    /// Left end of the component (`-inf` for left rays and the full line).
    pub fn left(&self) -> f64 {
        match *self {
            SpectralComponent::RayLeft { .. } | SpectralComponent::FullLine => f64::NEG_INFINITY,
            SpectralComponent::RayRight { start } => start,
            SpectralComponent::Point { value, .. } => value,
        }
    }

    pub fn right(&self) -> f64 {
        match *self {
            SpectralComponent::RayRight { .. } | SpectralComponent::FullLine => f64::INFINITY,
            SpectralComponent::RayLeft { end } => end,
            SpectralComponent::Point { value, .. } => value,
        }
    }
}

/// Ordered, pairwise disjoint components together with the parameters they describe.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumDescription {
    pub params: ShellParams,
    pub components: Vec<SpectralComponent>,
}

impl SpectrumDescription {
    /// Same set with the same spectral types, regardless of parameters.
    pub fn same_spectrum(&self, other: &SpectrumDescription) -> bool {
        self.components == other.components
    }

    pub fn point_components(&self) -> impl Iterator<Item = &SpectralComponent> {
        self.components
            .iter()
            .filter(|c| matches!(c, SpectralComponent::Point { .. }))
    }

    /// Sorted by left end and pairwise disjoint.
    pub fn is_well_formed(&self) -> bool {
        self.components.windows(2).all(|w| {
            w[0].left().partial_cmp(&w[1].left()) == Some(Ordering::Less) && w[0].right() < w[1].left()
        })
    }
}

/// Which half of the gap the interaction band attaches to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapSide {
    Negative,
    Positive,
}

/// Classification of a real energy against the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Resolvent,
    Continuous,
    EigenvalueInfinite,
}

/// `|eta^2 - 4| / (eta^2 + 4)`, written as `|u - 1/u| / (u + 1/u)` with
/// `u = |eta| / 2`. This form is symmetric under `u -> 1/u`, so the
/// couplings `eta` and `-4/eta` produce bit-identical edges whenever
/// `1/u` round-trips.
fn edge_ratio(eta: f64) -> f64 {
    let u = 0.5 * eta.abs();
    let v = 1.0 / u;
    (u - v).abs() / (u + v)
}

/// Side of the in-gap band, `None` for `eta` in {0, +-2} or `m = 0`.
pub fn gap_side(params: &ShellParams) -> Option<GapSide> {
    if params.is_free() || params.is_critical() || params.m() == 0.0 {
        return None;
    }
    // sign of eta (eta^2 - 4) without rounding in eta^2 - 4
    let s = params.eta().signum() * (params.eta().abs() - 2.0).signum();
    Some(if s < 0.0 {
        GapSide::Negative
    } else {
        GapSide::Positive
    })
}

/// Inner band edge `|m| |eta^2 - 4| / (eta^2 + 4)`; `|m|` for the free operator.
pub fn band_edge(params: &ShellParams) -> f64 {
    if params.is_free() {
        return params.abs_m();
    }
    if params.is_critical() {
        return 0.0;
    }
    params.abs_m() * edge_ratio(params.eta())
}

/// `z eta / (eta^2 - 4) > 0`.
pub fn sign_condition(params: &ShellParams, z: f64) -> Result<bool> {
    params.require_noncritical("sign_condition")?;
    let s = z.signum() * params.eta().signum() * (params.eta().abs() - 2.0).signum();
    Ok(z != 0.0 && s > 0.0)
}

/// Energy `z(p)` on the dispersion curve `det theta_z(p) = 0`.
pub fn dispersion_z(params: &ShellParams, p: f64) -> Result<f64> {
    params.require_noncritical("dispersion_z")?;
    let s = params.eta().signum() * (params.eta().abs() - 2.0).signum();
    Ok(s * edge_ratio(params.eta()) * p.hypot(params.m()))
}

/// Momenta `(-p, p)` on the dispersion curve at energy `z`, if `|z|` is at or
/// beyond the band edge.
pub fn dispersion_p(params: &ShellParams, z: f64) -> Result<Option<(f64, f64)>> {
    if !sign_condition(params, z)? {
        return Err(Error::precondition(format!(
            "dispersion_p: z = {z} violates z eta / (eta^2 - 4) > 0 for eta = {}",
            params.eta()
        )));
    }
    let a = z.abs() / edge_ratio(params.eta());
    let am = params.abs_m();
    let mut radicand = (a - am) * (a + am);
    if radicand < 0.0 {
        // edge points computed in floating point may land a few ulps inside
        if radicand >= -8.0 * f64::EPSILON * a * a {
            radicand = 0.0;
        } else {
            return Ok(None);
        }
    }
    let p = radicand.sqrt();
    Ok(Some((-p, p)))
}

/// The spectrum for all couplings and masses.
pub fn full_spectrum(params: &ShellParams) -> SpectrumDescription {
    use SpectralComponent::*;
    let am = params.abs_m();
    let components = if params.m() == 0.0 {
        vec![FullLine]
    } else if params.is_free() {
        vec![RayLeft { end: -am }, RayRight { start: am }]
    } else if params.is_critical() {
        vec![
            RayLeft { end: -am },
            Point {
                value: 0.0,
                multiplicity: Multiplicity::Infinite,
            },
            RayRight { start: am },
        ]
    } else {
        let edge = band_edge(params);
        match gap_side(params) {
            Some(GapSide::Negative) => vec![RayLeft { end: -edge }, RayRight { start: am }],
            _ => vec![RayLeft { end: -am }, RayRight { start: edge }],
        }
    };
    SpectrumDescription {
        params: *params,
        components,
    }
}

/// Parameters with the coupling `-4/eta`, which produce the same spectrum.
pub fn symmetry_partner(params: &ShellParams) -> Result<ShellParams> {
    if params.is_free() {
        return Err(Error::precondition("symmetry_partner: eta = 0 has no partner"));
    }
    ShellParams::new(-4.0 / params.eta(), params.m())
}

pub fn classify_point(params: &ShellParams, z: f64) -> PointClass {
    let spectrum = full_spectrum(params);
    let mut class = PointClass::Resolvent;
    for c in &spectrum.components {
        if c.contains(z) {
            match c.spectral_type() {
                SpectralType::Eigenvalue => return PointClass::EigenvalueInfinite,
                SpectralType::Continuous => class = PointClass::Continuous,
            }
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpectralComponent::*;

    fn params(eta: f64, m: f64) -> ShellParams {
        ShellParams::new(eta, m).unwrap()
    }

    #[test]
    fn band_edge_examples() {
        assert_eq!(band_edge(&params(2.0, 1.0)), 0.0);
        assert!((band_edge(&params(1.0, 1.0)) - 0.6).abs() < 1e-16);
        assert!((band_edge(&params(3.0, 1.0)) - 5.0 / 13.0).abs() < 1e-16);
        assert_eq!(band_edge(&params(0.0, 1.5)), 1.5);
        assert_eq!(band_edge(&params(1.0, 0.0)), 0.0);
        assert!((band_edge(&params(1.0, -2.0)) - 1.2).abs() < 1e-15);
    }

    #[test]
    fn sign_condition_examples() {
        assert!(sign_condition(&params(1.0, 1.0), -0.5).unwrap());
        assert!(sign_condition(&params(3.0, 1.0), 0.5).unwrap());
        assert!(!sign_condition(&params(3.0, 1.0), -0.5).unwrap());
        for eta in [-3.0, -1.0, 1.0, 3.0] {
            assert!(!sign_condition(&params(eta, 1.0), 0.0).unwrap());
        }
        for eta in [0.0, 2.0, -2.0] {
            assert!(sign_condition(&params(eta, 1.0), 0.1).is_err());
        }
    }

    #[test]
    fn dispersion_examples() {
        let p1 = params(1.0, 1.0);
        assert!((dispersion_z(&p1, 0.0).unwrap() + 0.6).abs() < 1e-16);
        assert!((dispersion_z(&params(3.0, 1.0), 0.0).unwrap() - 5.0 / 13.0).abs() < 1e-16);
        let z1 = dispersion_z(&p1, 1.0).unwrap();
        assert!((z1 + 0.6 * 2f64.sqrt()).abs() < 1e-15);
        assert!((z1 + 0.848_528_1).abs() < 1e-7);

        assert_eq!(dispersion_p(&p1, -0.6).unwrap(), Some((-0.0, 0.0)));
        let (pm, pp) = dispersion_p(&p1, -0.848_528_1).unwrap().unwrap();
        assert!((pp - 1.0).abs() < 1e-6 && pm == -pp);
        assert_eq!(dispersion_p(&p1, -0.5).unwrap(), None);
        assert!(dispersion_p(&p1, 0.5).is_err());
        assert!(dispersion_z(&params(2.0, 1.0), 0.0).is_err());
    }

    #[test]
    fn dispersion_round_trip() {
        for eta in [-5.0, -1.5, -0.5, 0.5, 1.0, 2.5, 7.0] {
            let pr = params(eta, 1.3);
            for p in [0.0, 0.1, 1.0, 3.7, 25.0] {
                let z = dispersion_z(&pr, p).unwrap();
                let (_, back) = dispersion_p(&pr, z).unwrap().unwrap();
                assert!((back - p).abs() < 1e-10, "eta={eta} p={p} back={back}");
            }
        }
    }

    #[test]
    fn spectrum_cases() {
        assert_eq!(
            full_spectrum(&params(0.0, 1.0)).components,
            vec![RayLeft { end: -1.0 }, RayRight { start: 1.0 }]
        );
        let crit = full_spectrum(&params(2.0, 1.0));
        assert_eq!(crit.components.len(), 3);
        assert_eq!(
            crit.components[1],
            Point {
                value: 0.0,
                multiplicity: Multiplicity::Infinite
            }
        );
        let s = full_spectrum(&params(-3.0, 2.0));
        assert_eq!(s.components[1], RayRight { start: 2.0 });
        match s.components[0] {
            RayLeft { end } => assert!((end + 10.0 / 13.0).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        for eta in [-3.0, -2.0, 0.0, 1.0, 2.0, 10.0] {
            assert_eq!(full_spectrum(&params(eta, 0.0)).components, vec![FullLine]);
        }
    }

    #[test]
    fn classify_examples() {
        let crit = params(2.0, 1.0);
        assert_eq!(classify_point(&crit, 0.0), PointClass::EigenvalueInfinite);
        assert_eq!(classify_point(&crit, 0.5), PointClass::Resolvent);
        assert_eq!(classify_point(&crit, -1.0), PointClass::Continuous);
        let p1 = params(1.0, 1.0);
        assert_eq!(classify_point(&p1, -0.6), PointClass::Continuous);
        assert_eq!(classify_point(&p1, -0.59), PointClass::Resolvent);
        assert_eq!(classify_point(&p1, 0.9), PointClass::Resolvent);
        assert_eq!(classify_point(&params(1.0, 0.0), 0.0), PointClass::Continuous);
    }

    #[test]
    fn symmetry_partner_examples() {
        let p = symmetry_partner(&params(2.0, 1.0)).unwrap();
        assert_eq!(p.eta(), -2.0);
        assert!(p.is_critical());
        let q = symmetry_partner(&params(1.0, 1.0)).unwrap();
        assert_eq!(q.eta(), -4.0);
        assert!(full_spectrum(&q).same_spectrum(&full_spectrum(&params(1.0, 1.0))));
        assert!(symmetry_partner(&params(0.0, 1.0)).is_err());
    }
}
