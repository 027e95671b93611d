//! Property tests for the cross-module invariants.

use proptest::prelude::*;
use std::f64::consts::PI;

use unruh_core::*;

fn arb_worldline() -> impl Strategy<Value = Worldline> {
    prop_oneof![
        (0.0..0.99_f64).prop_map(|v| Worldline::inertial(v).unwrap()),
        (0.05..4.0_f64).prop_map(|a| Worldline::uniform_acceleration(a).unwrap()),
        ((0.05..4.0_f64), (0.05..0.99_f64)).prop_map(|(r, v)| Worldline::circular(r, v).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn four_velocity_stays_normalized(w in arb_worldline(), tau in -3.0..3.0_f64) {
        // keep the hyperbola inside the range where cosh²−sinh² is resolvable
        let tau = match w {
            Worldline::UniformAcceleration { accel } => tau.clamp(-4.0 / accel, 4.0 / accel),
            _ => tau,
        };
        let n = w.four_velocity(tau).norm_sq();
        prop_assert!((n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interval_is_stationary(w in arb_worldline(), tau in -2.0..2.0_f64, tau_p in -2.0..2.0_f64) {
        prop_assume!((tau - tau_p).abs() > 0.1);
        // keep |aτ| ≤ 2.5 on the hyperbola: the raw-event route computes
        // Δt² − |Δx⃗|² by cancellation of ~e^{2aτ}-sized terms, and beyond
        // that the comparison tests f64, not the kinematics
        let scale_tau = match w {
            Worldline::UniformAcceleration { accel } => (2.5 / accel).min(1.0),
            _ => 1.0,
        };
        let (tau, tau_p) = (tau * scale_tau, tau_p * scale_tau);
        let raw = w.event_at(tau).interval_sq_to(&w.event_at(tau_p));
        let stat = w.geodesic_interval_sq(tau - tau_p);
        let scale = raw.abs().max(stat.abs()).max(1e-12);
        prop_assert!((raw - stat).abs() / scale < 1e-10);
    }

    #[test]
    fn geodesics_maximize_proper_time(w in arb_worldline(), u in -50.0..50.0_f64) {
        let sigma_sq = w.geodesic_interval_sq(u);
        prop_assert!(sigma_sq >= u * u);
        if w.is_accelerated() && u.abs() > 1e-3 {
            prop_assert!(sigma_sq > u * u);
        }
    }

    #[test]
    fn correlation_symmetries(w in arb_worldline(), u in -20.0..20.0_f64, e in 1e-6..1e-2_f64) {
        let eps = Epsilon::new(e).unwrap();
        prop_assert_eq!(fieldstats::cf_field(&w, u, eps), fieldstats::cf_field(&w, -u, eps));
        prop_assert_eq!(fieldstats::cf_inertial(u, eps), fieldstats::cf_inertial(-u, eps));
        // subtracted kernel is non-negative and bounded by the inertial magnitude
        let sub = fieldstats::cf_subtracted(&w, u);
        prop_assert!(sub >= 0.0);
        if u.abs() > 1e-6 {
            prop_assert!(sub <= 1.0 / (4.0 * PI * PI * u * u) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn atom_statistics_parity(omega0 in 0.1..5.0_f64, mu in 0.1..2.0_f64, u in -10.0..10.0_f64) {
        let m = AtomModel::new(omega0, mu).unwrap();
        prop_assert_eq!(atom::ca_atom(&m, Level::Plus, u), atom::ca_atom(&m, Level::Plus, -u));
        prop_assert_eq!(atom::chia_atom(&m, Level::Plus, u), -atom::chia_atom(&m, Level::Plus, -u));
        prop_assert_eq!(atom::chia_atom(&m, Level::Minus, u), -atom::chia_atom(&m, Level::Plus, u));
        prop_assert!(atom::ca_atom(&m, Level::Plus, u).abs() <= 0.25);
    }

    #[test]
    fn rate_parity_and_additivity(
        omega in 0.05..5.0_f64,
        accel in 0.1..3.0_f64,
        mu in 0.1..2.0_f64,
    ) {
        let m = AtomModel::new(1.0, mu).unwrap();
        let s = SpectralFunction::closed_form(
            Worldline::uniform_acceleration(accel).unwrap(),
        ).unwrap();
        let vf = spectral::gamma_vf(&m, &s, omega).unwrap();
        let vf_neg = spectral::gamma_vf(&m, &s, -omega).unwrap();
        prop_assert_eq!(vf, -vf_neg);
        prop_assert_eq!(spectral::gamma_rr(&m, omega), spectral::gamma_rr(&m, -omega));
        let r = spectral::total_rate(&m, &s, Level::Plus).unwrap();
        prop_assert_eq!(r.gamma_total, r.gamma_vf + r.gamma_rr);
    }

    #[test]
    fn einstein_difference_is_universal(
        accel in 0.1..5.0_f64,
        speed in 0.86..0.99_f64,
        omega0 in 0.2..3.0_f64,
        mu in 0.1..2.0_f64,
    ) {
        let m = AtomModel::new(omega0, mu).unwrap();
        let expected = m.mu_sq() * m.omega0() / (8.0 * PI);
        for s in [
            SpectralFunction::closed_form(Worldline::circular_with_accel(accel, speed).unwrap()).unwrap(),
            SpectralFunction::closed_form(Worldline::uniform_acceleration(accel).unwrap()).unwrap(),
            SpectralFunction::closed_form(Worldline::inertial(0.4).unwrap()).unwrap(),
        ] {
            let c = dynamics::einstein_coefficients(&m, &s).unwrap();
            prop_assert!((c.a_down - c.a_up - expected).abs() <= 1e-12 * expected);
            prop_assert!(c.a_down > c.a_up);
            prop_assert!(c.a_up >= 0.0);
        }
    }

    #[test]
    fn detailed_balance_identity(
        accel in 0.2..5.0_f64,
        omega0 in 0.2..3.0_f64,
    ) {
        let m = AtomModel::new(omega0, 1.0).unwrap();
        let s = SpectralFunction::closed_form(
            Worldline::uniform_acceleration(accel).unwrap(),
        ).unwrap();
        let c = dynamics::einstein_coefficients(&m, &s).unwrap();
        let t = dynamics::effective_temperature(&m, &s).unwrap();
        let lhs = c.a_up / c.a_down;
        let rhs = (-m.omega0() / t).exp();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs);
        // the uniform-acceleration closed form is exactly thermal at a/2π
        prop_assert!((t - accel / (2.0 * PI)).abs() <= 1e-10 * t);
    }

    #[test]
    fn equilibrium_is_curve_limit(
        accel in 0.3..3.0_f64,
        h0_frac in -1.0..1.0_f64,
    ) {
        let m = AtomModel::new(1.0, 1.0).unwrap();
        let w = Worldline::circular_with_accel(accel, 0.93).unwrap();
        let s = SpectralFunction::closed_form(w).unwrap();
        let h_eq = dynamics::equilibrium_energy(&m, &s).unwrap();
        prop_assert!((-0.5..0.0).contains(&h_eq));
        let gamma = dynamics::decay_rate(&m, &s).unwrap();
        let curve = dynamics::relaxation_curve(&m, &s, 0.5 * h0_frac, 60.0 / gamma, 16).unwrap();
        prop_assert!((curve.samples.last().unwrap().1 - h_eq).abs() < 1e-10);
    }
}
