use dirac_shell::spectrum::{
    band_edge, classify_point, dispersion_p, dispersion_z, full_spectrum, gap_side, symmetry_partner, GapSide,
    PointClass, SpectralComponent,
};
use dirac_shell::ShellParams;
use proptest::prelude::*;

fn params(eta: f64, m: f64) -> ShellParams {
    ShellParams::new(eta, m).unwrap()
}

const SIDE_ETAS: [f64; 12] = [0.5, -0.5, 1.0, -1.0, 1.9, -1.9, 2.1, -2.1, 3.0, -3.0, 10.0, -10.0];

#[test]
fn edge_consistency() {
    for eta in SIDE_ETAS {
        for m in [0.5, 1.0, -2.0] {
            let pr = params(eta, m);
            let exact = m.abs() * (eta * eta - 4.0f64).abs() / (eta * eta + 4.0);
            assert!((band_edge(&pr) - exact).abs() <= 1e-15 * m.abs());
            assert!((dispersion_z(&pr, 0.0).unwrap().abs() - band_edge(&pr)).abs() <= 1e-13);
        }
    }
}

#[test]
fn gap_side_rule() {
    for eta in SIDE_ETAS {
        let pr = params(eta, 1.0);
        let negative = eta * (eta * eta - 4.0) < 0.0;
        let side = gap_side(&pr).unwrap();
        assert_eq!(side == GapSide::Negative, negative, "eta={eta}");
        let comps = full_spectrum(&pr).components;
        match (side, comps[0], comps[1]) {
            (GapSide::Negative, SpectralComponent::RayLeft { end }, SpectralComponent::RayRight { start }) => {
                assert!(end > -1.0 && start == 1.0)
            }
            (GapSide::Positive, SpectralComponent::RayLeft { end }, SpectralComponent::RayRight { start }) => {
                assert!(end == -1.0 && start < 1.0)
            }
            other => panic!("eta={eta}: {other:?}"),
        }
    }
}

#[test]
fn symmetry_under_coupling_inversion() {
    for eta in [1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 0.5, -0.5, -1.5] {
        for m in [1.0, 2.0, 0.0] {
            let pr = params(eta, m);
            let partner = symmetry_partner(&pr).unwrap();
            assert!(
                full_spectrum(&pr).same_spectrum(&full_spectrum(&partner)),
                "eta={eta} m={m}: {:?} vs {:?}",
                full_spectrum(&pr),
                full_spectrum(&partner)
            );
        }
    }
}

#[test]
fn free_limit_continuity() {
    for eta in [1e-3, -1e-3] {
        let pr = params(eta, 1.5);
        let edge = band_edge(&pr);
        assert!(edge <= 1.5 && edge >= 1.5 * (1.0 - eta * eta / 2.0));
    }
}

#[test]
fn spectra_are_well_formed() {
    for eta in [-10.0, -3.0, -2.0, -1.0, 0.0, 0.5, 2.0, 2.1, 7.0] {
        for m in [0.0, 1.0, -2.5] {
            let s = full_spectrum(&params(eta, m));
            assert!(s.is_well_formed(), "{s:?}");
        }
    }
}

#[test]
fn classification_matches_components() {
    let pr = params(3.0, 1.0);
    let edge = 5.0 / 13.0;
    assert_eq!(classify_point(&pr, edge), PointClass::Continuous);
    assert_eq!(classify_point(&pr, edge - 1e-9), PointClass::Resolvent);
    assert_eq!(classify_point(&pr, -1.0), PointClass::Continuous);
    assert_eq!(classify_point(&pr, -0.999), PointClass::Resolvent);
    assert_eq!(classify_point(&params(-2.0, 1.0), 0.0), PointClass::EigenvalueInfinite);
}

proptest! {
    #[test]
    fn dispersion_monotone_in_momentum(
        eta in prop_oneof![-20.0f64..-2.05, -1.95f64..-0.05, 0.05f64..1.95, 2.05f64..20.0],
        m in -3.0f64..3.0,
        p in 0.0f64..50.0,
        dp in 1e-6f64..5.0,
    ) {
        prop_assume!(m.abs() > 1e-3);
        let pr = params(eta, m);
        let a = dispersion_z(&pr, p).unwrap().abs();
        let b = dispersion_z(&pr, p + dp).unwrap().abs();
        let c = dispersion_z(&pr, -(p + dp)).unwrap().abs();
        prop_assert!(b > a);
        prop_assert_eq!(b, c);
    }

    #[test]
    fn dispersion_inverts(
        eta in prop_oneof![-20.0f64..-2.05, -1.95f64..-0.05, 0.05f64..1.95, 2.05f64..20.0],
        m in 0.1f64..3.0,
        p in 0.0f64..30.0,
    ) {
        let pr = params(eta, m);
        let z = dispersion_z(&pr, p).unwrap();
        prop_assert_eq!(classify_point(&pr, z), PointClass::Continuous);
        let (lo, hi) = dispersion_p(&pr, z).unwrap().unwrap();
        prop_assert!((hi - p).abs() <= 1e-9 * (1.0 + p));
        prop_assert_eq!(lo, -hi);
    }
}
