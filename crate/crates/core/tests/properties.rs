//! Property tests for the physical and numerical invariants.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use gravent::clocks::{self, ClockSpec, StateVector16, TwoQubitInitial};
use gravent::entanglement::{
    reduced_rho_hom, reduced_rho_hom_large_bandwidth, reduced_rho_hom_quadrature, reduced_rho_mz,
    reduced_rho_mz_large_bandwidth, reduced_rho_mz_quadrature, SpatialDensityMatrix,
};
use gravent::feasibility::{self, EntanglingKind};
use gravent::gravity::{doppler_profile, redshift_pair, BodyParams, RedshiftPair, Scenario, ScenarioCatalog, StationaryObserver};
use gravent::interferometer::{pattern, pc_delay_full, pc_qmem_full, pc_via_quadrature, DelayConfig, QMemConfig, Storage};
use gravent::quadrature::Quadrature;
use gravent::spectra::{overlap, GaussianPeak, TwoPeakSpectrum};
use gravent::{output, sweep, units};
use proptest::prelude::*;

const EARTH: BodyParams = BodyParams::EARTH;

fn moderate_pair() -> RedshiftPair {
    RedshiftPair::from_shifts(5e-2, 0.0).unwrap()
}

fn geo() -> RedshiftPair {
    redshift_pair(ScenarioCatalog::builtin(&EARTH).get("geo-vs-ground").unwrap(), &EARTH).unwrap()
}

fn telecom_spectrum(phi: f64) -> TwoPeakSpectrum {
    TwoPeakSpectrum::new(TAU * 377.1e12, TAU * 377.101e12, TAU * 10e6, phi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn swap_negates_couplings_exactly(zu in -1e-9f64..1e-9, zl in -1e-9f64..1e-9) {
        let p = RedshiftPair::from_shifts(zu, zl).unwrap();
        let s = p.swapped();
        prop_assert_eq!(s.delta_theta(), -p.delta_theta());
        prop_assert_eq!(s.delta_theta_inv(), -p.delta_theta_inv());
    }

    #[test]
    fn scenario_swap_negates_couplings(h in 1.0f64..1e7, r in 6.4e6f64..5e7) {
        let upper = StationaryObserver::co_rotating(&EARTH, h, 0.0);
        let lower = StationaryObserver::circular_orbit(&EARTH, r);
        let reference = StationaryObserver::co_rotating(&EARTH, 0.0, 0.0);
        let a = redshift_pair(&Scenario::new("a", upper, lower).with_reference(reference), &EARTH).unwrap();
        let b = redshift_pair(&Scenario::new("b", lower, upper).with_reference(reference), &EARTH).unwrap();
        prop_assert_eq!(a.delta_theta_inv(), -b.delta_theta_inv());
        prop_assert_eq!(a.delta_theta(), -b.delta_theta());
    }

    #[test]
    fn static_potential_rises_with_radius(r1 in 6.4e6f64..1e8, dr in 1.0f64..1e7) {
        let reference = StationaryObserver::new(6.4e6, 0.0).unwrap();
        let lo = StationaryObserver::new(r1, 0.0).unwrap();
        let hi = StationaryObserver::new(r1 + dr, 0.0).unwrap();
        let p = redshift_pair(&Scenario::new("s", hi, lo).with_reference(reference), &EARTH).unwrap();
        prop_assert!(p.theta_u() > p.theta_l());
        prop_assert!(p.delta_theta_inv() > 0.0);
    }

    #[test]
    fn doppler_is_periodic(t in 0.0f64..3e4, k in 1u32..4) {
        let (r1, r2) = (1.6371e7, EARTH.synchronous_radius());
        let w = |r: f64| (EARTH.gm / (r * r * r)).sqrt();
        let period = TAU / (w(r1) - w(r2)).abs();
        let a = doppler_profile(r1, r2, t, &EARTH).unwrap();
        let b = doppler_profile(r1, r2, t + f64::from(k) * period, &EARTH).unwrap();
        prop_assert!((a.separation - b.separation).abs() <= 1e-7 * a.separation.max(1.0));
        prop_assert!((a.radial_velocity - b.radial_velocity).abs() <= 1e-5);
    }

    #[test]
    fn single_clock_state_is_valid(tau in 0.0f64..1.0, mu in 1e9f64..1e11) {
        let clock = ClockSpec::new(mu, 0.0).unwrap();
        let rho = clocks::single_qubit_reduced_state(&clock, &geo(), tau);
        let checked = SpatialDensityMatrix::new(*rho.entries()).unwrap();
        prop_assert!((checked.purity() + checked.linear_entropy() - 1.0).abs() < 1e-15);
        let formula = clocks::single_qubit_purity(&clock, geo().delta_theta(), tau);
        prop_assert!((checked.purity() - formula).abs() < 1e-9);
    }

    #[test]
    fn two_clock_states_are_valid(tau in 0.0f64..1.0, which in 0usize..3) {
        let clock = ClockSpec::new(TAU * 10e9, 0.0).unwrap();
        let initial = TwoQubitInitial::ALL[which];
        let state: StateVector16 = clocks::two_qubit_evolve(initial, &clock, &geo(), tau);
        prop_assert!((state.norm() - 1.0).abs() < 1e-12);
        let rho = state.reduced_spatial();
        let checked = SpatialDensityMatrix::new(*rho.entries()).unwrap();
        prop_assert!(checked.eigenvalues().iter().all(|&e| e >= -1e-12));
        prop_assert!((checked.purity() + checked.linear_entropy() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn robust_states_keep_half_negativity(tau in 0.0f64..10.0) {
        let clock = ClockSpec::new(TAU * 10e9, 0.0).unwrap();
        for initial in [TwoQubitInitial::RobustSpatialAligned, TwoQubitInitial::RobustInternalAligned] {
            prop_assert!((clocks::two_qubit_negativity(initial, &clock, &geo(), tau) - 0.5).abs() < 1e-12);
            prop_assert!((clocks::two_qubit_spatial_purity(initial, &clock, &geo(), tau) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn anti_aligned_negativity_period(tau in 0.0f64..0.2) {
        let clock = ClockSpec::new(TAU * 10e9, 0.0).unwrap();
        let pair = geo();
        let period = PI / (pair.delta_theta().abs() * clock.mu_minus());
        let n = |t: f64| clocks::two_qubit_negativity(TwoQubitInitial::EntangledAntiAligned, &clock, &pair, t);
        prop_assert!((n(tau) - n(tau + period)).abs() < 1e-6);
        let single = clocks::single_qubit_entangling_time(&clock, pair.delta_theta()).unwrap();
        prop_assert_eq!(2.0 * clocks::two_qubit_entangling_time(&clock, pair.delta_theta()).unwrap(), single);
    }

    #[test]
    fn common_shift_leaves_clock_measures(tau in 0.0f64..0.3, shift in -1e-9f64..1e-9) {
        let clock = ClockSpec::new(TAU * 10e9, 0.0).unwrap();
        let base = RedshiftPair::from_shifts(5.4e-10, 0.0).unwrap();
        let moved = RedshiftPair::from_shifts(5.4e-10 + shift, shift).unwrap();
        let init = TwoQubitInitial::EntangledAntiAligned;
        let dn = clocks::two_qubit_negativity(init, &clock, &base, tau) - clocks::two_qubit_negativity(init, &clock, &moved, tau);
        let dp = clocks::two_qubit_spatial_purity(init, &clock, &base, tau) - clocks::two_qubit_spatial_purity(init, &clock, &moved, tau);
        prop_assert!(dn.abs() < 1e-9 && dp.abs() < 1e-9);
    }

    #[test]
    fn only_level_difference_matters(tau in 0.0f64..0.3, offset in -1e11f64..1e11) {
        let a = ClockSpec::new(TAU * 10e9, 0.0).unwrap();
        let b = ClockSpec::new(TAU * 10e9 + offset, offset).unwrap();
        let init = TwoQubitInitial::EntangledAntiAligned;
        let pair = geo();
        let dn = clocks::two_qubit_negativity(init, &a, &pair, tau) - clocks::two_qubit_negativity(init, &b, &pair, tau);
        let dp = clocks::single_qubit_reduced_state(&a, &pair, tau).purity() - clocks::single_qubit_reduced_state(&b, &pair, tau).purity();
        prop_assert!(dn.abs() < 1e-6 && dp.abs() < 1e-6);
    }

    #[test]
    fn overlap_is_symmetric(c1 in 1.0f64..20.0, c2 in 1.0f64..20.0, w in 0.1f64..5.0) {
        let a = GaussianPeak::new(c1, w).unwrap();
        let b = GaussianPeak::new(c2, w).unwrap();
        let ab = overlap(&a, &b).unwrap();
        prop_assert_eq!(ab, overlap(&b, &a).unwrap());
        prop_assert!((0.0..=1.0).contains(&ab));
    }

    #[test]
    fn hom_wavefunction_exchange_symmetry(
        ratio in 0.0f64..30.0, phi in 0.0f64..TAU, x1 in -5.0f64..35.0, x2 in -5.0f64..35.0, s1 in 0usize..2, s2 in 0usize..2,
    ) {
        prop_assume!(!(ratio < 1e-3 && (phi - PI).abs() < 1e-3));
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let a = s.psi_hom_ports(s1, s2, 100.0 + x1, 100.0 + x2).unwrap();
        let b = s.psi_hom_ports(s2, s1, 100.0 + x2, 100.0 + x1).unwrap();
        prop_assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn delay_pattern_bounds(ratio in 0.0f64..60.0, phi in 0.0f64..TAU, shift in 0.0f64..20.0) {
        prop_assume!(!(ratio < 1e-3 && (phi - PI).abs() < 1e-2));
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let pair = moderate_pair();
        let p = pc_delay_full(&s, &DelayConfig::new(shift / pair.delta_theta_inv()).unwrap(), &pair).unwrap();
        prop_assert!(p.p_c_mz.abs() <= 1.0 + 1e-12 && p.p_c_hom.abs() <= 1.0 + 1e-12);
        prop_assert!(p.mz_ports.iter().chain(&p.hom_ports).all(|&v| (-1e-12..=1.0 + 1e-12).contains(&v)));
        prop_assert!((p.mz_ports.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!((p.hom_ports.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn memory_pattern_bounds(ratio in 20.0f64..60.0, phi in 0.0f64..TAU, tau in 0.0f64..100.0) {
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let p = pc_qmem_full(&s, &QMemConfig::local_equal(tau), &moderate_pair()).unwrap();
        prop_assert!(p.p_c_mz.abs() <= 1.0 + 1e-12 && p.p_c_hom.abs() <= 1.0 + 1e-12);
        prop_assert!((p.mz_ports.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!((p.hom_ports.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn arm_swap_symmetry(ratio in 0.5f64..50.0, phi in 0.0f64..TAU, shift in 0.0f64..10.0) {
        let pair = moderate_pair();
        let tau = shift / pair.delta_theta_inv();
        let d = DelayConfig::new(tau).unwrap();
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let s_neg = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, -phi).unwrap();
        let a = pc_delay_full(&s, &d, &pair).unwrap();
        let b = pc_delay_full(&s, &d, &pair.swapped()).unwrap();
        let c = pc_delay_full(&s_neg, &d, &pair).unwrap();
        prop_assert!((a.p_c_mz - b.p_c_mz).abs() < 1e-12);
        prop_assert!((b.p_c_hom - c.p_c_hom).abs() < 1e-12);
    }

    #[test]
    fn memory_matches_delay_in_regime(k in 0.0f64..4.0, phi in 0.0f64..TAU) {
        let s = TwoPeakSpectrum::new(1e7, 1.1e7, 1.0, phi).unwrap();
        let pair = moderate_pair();
        let tau = k * 250.0;
        let q = pc_qmem_full(&s, &QMemConfig::local_equal(tau), &pair).unwrap();
        let d = pc_delay_full(&s, &DelayConfig::new(tau).unwrap(), &pair).unwrap();
        let envelope = (pair.delta_theta_inv() * tau * s.xi).powi(2);
        prop_assert!((q.p_c_hom - d.p_c_hom).abs() <= 1e-10 + envelope);
    }

    #[test]
    fn global_sync_is_flat(tau in 0.0f64..10.0, phi in 0.0f64..TAU) {
        let s = telecom_spectrum(phi);
        let pair = geo();
        let p = pattern(&s, &QMemConfig::global_frame(tau, &pair).into(), &pair).unwrap();
        prop_assert!((p.p_c_hom - phi.cos()).abs() < 1e-12);
    }

    #[test]
    fn hom_zero_precedes_mz_envelope_zero(phi_idx in 0usize..1) {
        let _ = phi_idx;
        let s = telecom_spectrum(0.0);
        let pair = geo();
        let t_hom = FRAC_PI_2 / (pair.delta_theta_inv() * s.omega_minus());
        let t_mz = PI / (pair.delta_theta_inv() * s.omega_minus());
        let hom = pattern(&s, &QMemConfig::local_equal(t_hom).into(), &pair).unwrap();
        let mz = reduced_rho_mz(&s, &QMemConfig::local_equal(t_mz).into(), &pair).unwrap();
        prop_assert!(hom.p_c_hom.abs() < 1e-12);
        prop_assert!(mz.visibility() < 1e-12);
    }

    #[test]
    fn density_identities(tau in 0.0f64..2.0, phi in 0.0f64..TAU) {
        let s = telecom_spectrum(phi);
        let pair = geo();
        let storage: Storage = QMemConfig::local_equal(tau).into();
        let hom = reduced_rho_hom_large_bandwidth(&s, &storage, &pair).unwrap();
        let mz = reduced_rho_mz_large_bandwidth(&s, &storage, &pair).unwrap();
        let p = hom.p_c();
        let n = hom.negativity();
        prop_assert!((n - 0.5 * p.abs()).abs() < 1e-10);
        prop_assert!((hom.linear_entropy() - (0.5 - 2.0 * n * n)).abs() < 1e-10);
        prop_assert!((mz.purity() - 0.5 * (1.0 + mz.visibility().powi(2))).abs() < 1e-10);
        let mut want = [0.5, 0.5, 0.5 * p, -0.5 * p];
        want.sort_by(f64::total_cmp);
        for (a, b) in hom.partial_transpose_eigenvalues().iter().zip(want) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        let full = reduced_rho_hom(&s, &storage, &pair).unwrap();
        prop_assert!((full.p_c() - p).abs() < 1e-10);
    }

    #[test]
    fn resolution_limit_round_trip(w in 1e3f64..1e16) {
        let back = feasibility::max_omega_minus(feasibility::resolution_limit(w).unwrap()).unwrap();
        prop_assert!(((back - w) / w).abs() < 1e-15);
    }

    #[test]
    fn relative_accuracy_is_half_the_coupling(w in 1e6f64..1e16, d in 1e-15f64..1e-8) {
        let lim = feasibility::resolution_limit(w).unwrap();
        let ent = feasibility::entangling_time(EntanglingKind::Hom, w, d).unwrap();
        prop_assert!((lim / ent / (0.5 * d) - 1.0).abs() < 1e-15);
        let mz = feasibility::entangling_time(EntanglingKind::Mz, w, d).unwrap();
        prop_assert_eq!(mz, 2.0 * ent);
    }

    #[test]
    fn frequency_units_agree(v in 1e-3f64..1e3) {
        let ghz = units::parse_frequency(&format!("{v}GHz")).unwrap();
        let mhz = units::parse_frequency(&format!("{}MHz", v * 1e3)).unwrap();
        prop_assert!(((ghz - mhz) / ghz).abs() < 1e-14);
        prop_assert!(((ghz - TAU * v * 1e9) / ghz).abs() < 1e-15);
    }

    #[test]
    fn csv_round_trips_floats(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
        let mut t = output::Table::new(["v"]);
        t.push(vec![v.into()]);
        let csv = t.to_csv();
        let parsed: f64 = csv.lines().nth(1).unwrap().parse().unwrap();
        prop_assert_eq!(parsed.to_bits(), v.to_bits());
    }

    #[test]
    fn linspace_shape(a in -1e3f64..1e3, span in 0.0f64..1e3, n in 2usize..500) {
        let g = sweep::linspace(a, a + span, n).unwrap();
        prop_assert_eq!(g.len(), n);
        prop_assert_eq!(g[0], a);
        prop_assert_eq!(g[n - 1], a + span);
        prop_assert!(g.windows(2).all(|w| w[1] >= w[0]));
        prop_assert_eq!(sweep::par_map(&g, |x| x * 2.0), g.iter().map(|x| x * 2.0).collect::<Vec<_>>());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn closed_forms_match_quadrature(ratio in 1.0f64..50.0, phi in 0.0f64..TAU, frac in 0.0f64..1.0) {
        let pair = moderate_pair();
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let tau = frac * 3.0 * PI / (s.omega_minus() * pair.delta_theta_inv());
        let storage: Storage = DelayConfig::new(tau).unwrap().into();
        let q = pc_via_quadrature(&s, &storage, &pair, &Quadrature::default()).unwrap();
        let c = pattern(&s, &storage, &pair).unwrap();
        prop_assert!((q.p_c_mz - c.p_c_mz).abs() < 1e-8);
        prop_assert!((q.p_c_hom - c.p_c_hom).abs() < 1e-8);
        for (a, b) in q.hom_ports.iter().zip(&c.hom_ports) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn assembled_states_match_closed_forms(ratio in 20.0f64..40.0, phi in 0.0f64..TAU, frac in 0.0f64..1.0) {
        let pair = moderate_pair();
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
        let tau = frac * 2.0 * PI / (s.omega_minus() * pair.delta_theta_inv());
        for storage in [Storage::from(DelayConfig::new(tau).unwrap()), Storage::from(QMemConfig::local_equal(tau))] {
            let quad = Quadrature::default();
            let mz_q = reduced_rho_mz_quadrature(&s, &storage, &pair, &quad).unwrap();
            let mz_c = reduced_rho_mz(&s, &storage, &pair).unwrap();
            let hom_q = reduced_rho_hom_quadrature(&s, &storage, &pair, &quad).unwrap();
            let hom_c = reduced_rho_hom(&s, &storage, &pair).unwrap();
            for (a, b) in mz_q.entries().iter().flatten().zip(mz_c.entries().iter().flatten()) {
                prop_assert!((a - b).norm() < 1e-8, "{:?} {:?}", mz_q, mz_c);
            }
            for (a, b) in hom_q.entries().iter().flatten().zip(hom_c.entries().iter().flatten()) {
                prop_assert!((a - b).norm() < 1e-8, "{:?} {:?}", hom_q, hom_c);
            }
        }
    }
}

#[test]
fn normalization_by_quadrature() {
    let quad = Quadrature::default();
    for ratio in [0.0, 1.0, 5.0, 20.0] {
        for phi in [0.0, FRAC_PI_2, PI] {
            if ratio == 0.0 && phi == PI {
                assert!(TwoPeakSpectrum::new(100.0, 100.0, 1.0, phi).unwrap().norm_mz().is_err());
                continue;
            }
            let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi).unwrap();
            let (a, b) = s.window();
            let one = quad.integrate(|w| s.psi_mz(w).unwrap().norm_sqr(), a, b).unwrap().value;
            let two = quad.integrate_2d(|x, y| s.psi_hom(x, y).unwrap().norm_sqr(), (a, b), (a, b)).unwrap().value;
            assert!((one - 1.0).abs() < 1e-8, "{ratio} {phi} {one}");
            assert!((two - 1.0).abs() < 1e-8, "{ratio} {phi} {two}");
        }
    }
}

#[test]
fn reference_choice_is_second_order() {
    let catalog = ScenarioCatalog::builtin(&EARTH);
    for s in catalog.iter() {
        let base = redshift_pair(s, &EARTH).unwrap().delta_theta_inv();
        for reference in [s.upper, StationaryObserver::geostationary(&EARTH), StationaryObserver::co_rotating(&EARTH, 0.0, 0.0)] {
            let moved = redshift_pair(&s.clone().with_reference(reference), &EARTH).unwrap().delta_theta_inv();
            assert!(((moved - base) / base).abs() <= 1e-6, "{} {base} {moved}", s.name);
        }
    }
}

#[test]
fn storage_time_lines_have_unit_slope() {
    let catalog = ScenarioCatalog::builtin(&EARTH);
    let scenarios: Vec<(String, RedshiftPair)> =
        catalog.iter().map(|s| (s.name.clone(), redshift_pair(s, &EARTH).unwrap())).collect();
    let rows = feasibility::figure3_grid(&scenarios, feasibility::GRID_RANGE, 25).unwrap();
    for (name, _) in &scenarios {
        let pts: Vec<(f64, f64)> =
            rows.iter().filter(|r| &r.scenario == name).map(|r| (r.omega_minus.ln(), r.tau_ent.ln())).collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let slope = sxy / sxx;
        let residual = pts.iter().map(|p| (p.1 - (my + slope * (p.0 - mx))).abs()).fold(0.0, f64::max);
        assert!((slope + 1.0).abs() < 1e-12, "{name} slope {slope}");
        assert!(residual < 1e-12, "{name} residual {residual}");
    }
}
