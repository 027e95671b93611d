//! Population relaxation: Einstein coefficients, the mean-energy ODE and its
//! analytic solution, equilibrium excitation, and effective temperature.
//!
//! Both coefficients come from the same spectral function,
//!
//!   A↓ = (μ²/2)[F(ω₀) + ω₀/8π],    A↑ = (μ²/2)[F(ω₀) − ω₀/8π],
//!
//! so every worldline shares one code path and the circular closed form is a
//! consistency check rather than a second implementation.  Their difference
//! A↓ − A↑ = μ²ω₀/8π is worldline-independent (the radiation-reaction part),
//! while A↑ > 0 on any accelerated trajectory is the generalized Unruh
//! effect.  The mean energy relaxes as
//!
//!   d⟨H⟩/dτ = −Γ(⟨H⟩ − H_eq),   Γ = A↓ + A↑ = μ²F(ω₀),
//!   H_eq = −(ω₀/2)(A↓ − A↑)/(A↓ + A↑),
//!
//! and the detailed-balance temperature is T_eff = ω₀ / ln(A↓/A↑).

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::atom::AtomModel;
use crate::error::{CoreError, Result};
use crate::spectral::SpectralFunction;

/// Spontaneous de-excitation and excitation rates.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EinsteinCoefficients {
    pub a_down: f64,
    pub a_up: f64,
}

impl EinsteinCoefficients {
    /// Total relaxation rate Γ = A↓ + A↑.
    pub fn decay_rate(&self) -> f64 {
        self.a_down + self.a_up
    }
}

pub fn einstein_coefficients(
    atom: &AtomModel,
    s: &SpectralFunction,
) -> Result<EinsteinCoefficients> {
    let excess = s.excess(atom.omega0())?;
    let a_up = 0.5 * atom.mu_sq() * excess;
    // building A↓ as A↑ + μ²ω₀/8π keeps the universal difference exact
    let a_down = a_up + atom.mu_sq() * atom.omega0() / (8.0 * PI);
    Ok(EinsteinCoefficients { a_down, a_up })
}

/// Γ = A↓ + A↑ = μ²F(ω₀).
pub fn decay_rate(atom: &AtomModel, s: &SpectralFunction) -> Result<f64> {
    Ok(einstein_coefficients(atom, s)?.decay_rate())
}

/// Equilibrium mean energy H_eq = −(ω₀/2)(A↓ − A↑)/(A↓ + A↑) ∈ [−ω₀/2, 0).
pub fn equilibrium_energy(atom: &AtomModel, s: &SpectralFunction) -> Result<f64> {
    let c = einstein_coefficients(atom, s)?;
    Ok(-(0.5 * atom.omega0()) * (c.a_down - c.a_up) / (c.a_down + c.a_up))
}

/// Detailed-balance temperature T_eff = ω₀ / ln(A↓/A↑); undefined (error)
/// when A↑ = 0, i.e. for inertial motion.
pub fn effective_temperature(atom: &AtomModel, s: &SpectralFunction) -> Result<f64> {
    let c = einstein_coefficients(atom, s)?;
    if c.a_up <= 0.0 {
        return Err(CoreError::InertialNoTemperature);
    }
    Ok(atom.omega0() / (c.a_down / c.a_up).ln())
}

/// Relaxation of the mean atomic energy towards equilibrium.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelaxationCurve {
    /// Decay rate Γ.
    pub decay_rate: f64,
    /// Equilibrium mean energy H_eq.
    pub equilibrium: f64,
    /// Initial mean energy H₀.
    pub initial: f64,
    /// (τ, ⟨H⟩) samples of the analytic solution H_eq + (H₀−H_eq)e^{−Γτ}.
    pub samples: Vec<(f64, f64)>,
    /// Independent fixed-step RK4 integration of the rate ODE on the same grid.
    pub rk4_samples: Vec<(f64, f64)>,
    /// max |analytic − RK4| over the grid.
    pub max_rk4_deviation: f64,
}

/// Solves the relaxation ODE analytically and cross-integrates it with
/// fixed-step RK4 (10⁴ total steps).  H₀ must lie in the physical band
/// [−ω₀/2, +ω₀/2].
pub fn relaxation_curve(
    atom: &AtomModel,
    s: &SpectralFunction,
    h0: f64,
    tau_max: f64,
    n_samples: usize,
) -> Result<RelaxationCurve> {
    let half_gap = 0.5 * atom.omega0();
    if !(-half_gap..=half_gap).contains(&h0) {
        return Err(CoreError::Domain(format!(
            "initial mean energy {h0} outside physical band [{}, {}]",
            -half_gap, half_gap
        )));
    }
    if !(tau_max > 0.0 && tau_max.is_finite()) {
        return Err(CoreError::Domain(format!(
            "tau_max must be positive and finite, got {tau_max}"
        )));
    }
    if n_samples < 2 {
        return Err(CoreError::Domain("need at least two samples".into()));
    }

    let gamma = decay_rate(atom, s)?;
    let h_eq = equilibrium_energy(atom, s)?;

    let samples: Vec<(f64, f64)> = (0..n_samples)
        .map(|k| {
            let tau = tau_max * k as f64 / (n_samples - 1) as f64;
            (tau, h_eq + (h0 - h_eq) * (-gamma * tau).exp())
        })
        .collect();

    // the ODE in its raw-constant form, independent of (Γ, H_eq) pairing
    let drive = atom.mu_sq() * atom.omega0() * atom.omega0() / (16.0 * PI);
    let relax = atom.mu_sq() * s.evaluate(atom.omega0())?;
    let rhs = |h: f64| -(drive + relax * h);

    let total_steps = 10_000usize;
    let substeps = (total_steps / (n_samples - 1)).max(1);
    let dt = tau_max / ((n_samples - 1) * substeps) as f64;

    let mut rk4_samples = Vec::with_capacity(n_samples);
    let mut h = h0;
    rk4_samples.push((0.0, h));
    for k in 1..n_samples {
        for _ in 0..substeps {
            let k1 = rhs(h);
            let k2 = rhs(h + 0.5 * dt * k1);
            let k3 = rhs(h + 0.5 * dt * k2);
            let k4 = rhs(h + dt * k3);
            h += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        let tau = tau_max * k as f64 / (n_samples - 1) as f64;
        rk4_samples.push((tau, h));
    }

    let max_rk4_deviation = samples
        .iter()
        .zip(&rk4_samples)
        .map(|(a, b)| (a.1 - b.1).abs())
        .fold(0.0, f64::max);

    Ok(RelaxationCurve {
        decay_rate: gamma,
        equilibrium: h_eq,
        initial: h0,
        samples,
        rk4_samples,
        max_rk4_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{SpectralFunction, SpectralMethod};
    use crate::worldline::Worldline;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn atom() -> AtomModel {
        AtomModel::new(1.0, 1.0).unwrap()
    }

    fn circular_unit_accel() -> SpectralFunction {
        let w = Worldline::circular_with_accel(1.0, 0.9).unwrap();
        SpectralFunction::new(w, SpectralMethod::ClosedFormCircularHighV)
            .unwrap()
            .with_ultrarelativistic_limit()
    }

    #[test]
    fn inertial_coefficients() {
        let m = atom();
        let s = SpectralFunction::closed_form(Worldline::inertial(0.0).unwrap()).unwrap();
        let c = einstein_coefficients(&m, &s).unwrap();
        assert_relative_eq!(c.a_down, 1.0 / (8.0 * PI), max_relative = 1e-15);
        assert_eq!(c.a_up, 0.0);
        assert!(matches!(
            effective_temperature(&m, &s),
            Err(CoreError::InertialNoTemperature)
        ));
        assert_eq!(equilibrium_energy(&m, &s).unwrap(), -0.5);
    }

    #[test]
    fn circular_closed_form_coefficients() {
        // a = ω₀, A = B = 1, μ = 1:
        // A↑ = (1/8π)(1/4√3) e^{−2√3},  Γ = (1/8π)(1 + (1/2√3) e^{−2√3})
        let m = atom();
        let s = circular_unit_accel();
        let c = einstein_coefficients(&m, &s).unwrap();
        let e = (-2.0 * 3.0_f64.sqrt()).exp();
        assert_relative_eq!(
            c.a_up,
            1.0 / (8.0 * PI) / (4.0 * 3.0_f64.sqrt()) * e,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            decay_rate(&m, &s).unwrap(),
            1.0 / (8.0 * PI) * (1.0 + 1.0 / (2.0 * 3.0_f64.sqrt()) * e),
            max_relative = 1e-13
        );
        assert_eq!(decay_rate(&m, &s).unwrap(), c.a_down + c.a_up);
        // universal difference, exact
        assert_eq!(c.a_down - c.a_up, 1.0 / (8.0 * PI));
    }

    #[test]
    fn equilibrium_two_routes_agree() {
        let m = atom();
        let s = circular_unit_accel();
        let c = einstein_coefficients(&m, &s).unwrap();
        let via_ratio = -(0.5) * (1.0 - c.a_up / c.a_down) / (1.0 + c.a_up / c.a_down);
        assert_relative_eq!(
            equilibrium_energy(&m, &s).unwrap(),
            via_ratio,
            max_relative = 1e-12
        );
        assert!(equilibrium_energy(&m, &s).unwrap() > -0.5);
        assert!(equilibrium_energy(&m, &s).unwrap() < 0.0);
    }

    #[test]
    fn equilibrium_saturates_at_large_acceleration() {
        // F dominated by the acceleration term: H_eq → 0 from below
        let m = atom();
        let w = Worldline::circular_with_accel(1e6, 0.99).unwrap();
        let s = SpectralFunction::new(w, SpectralMethod::ClosedFormCircularHighV).unwrap();
        let h_eq = equilibrium_energy(&m, &s).unwrap();
        assert!(h_eq < 0.0 && h_eq > -1e-4);
    }

    #[test]
    fn uniform_acceleration_temperature_from_numeric_f() {
        let m = atom();
        let s = SpectralFunction::numeric(Worldline::uniform_acceleration(1.0).unwrap());
        let t = effective_temperature(&m, &s).unwrap();
        assert_relative_eq!(t, 1.0 / (2.0 * PI), max_relative = 1e-3);
    }

    #[test]
    fn detailed_balance_round_trip() {
        let m = atom();
        let s = circular_unit_accel();
        let c = einstein_coefficients(&m, &s).unwrap();
        let t = effective_temperature(&m, &s).unwrap();
        assert_relative_eq!(
            c.a_up / c.a_down,
            (-m.omega0() / t).exp(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn a_up_increases_with_acceleration() {
        let m = atom();
        let mut prev = 0.0;
        for k in 1..=20 {
            let a = 0.2 * k as f64;
            let w = Worldline::circular_with_accel(a, 0.9).unwrap();
            let s = SpectralFunction::new(w, SpectralMethod::ClosedFormCircularHighV).unwrap();
            let c = einstein_coefficients(&m, &s).unwrap();
            assert!(c.a_up > prev, "A_up must increase with a, a={a}");
            prev = c.a_up;
        }
    }

    #[test]
    fn relaxation_fixed_point_and_limit() {
        let m = atom();
        let s = circular_unit_accel();
        let h_eq = equilibrium_energy(&m, &s).unwrap();
        let curve = relaxation_curve(&m, &s, h_eq, 10.0, 50).unwrap();
        for (_, h) in &curve.samples {
            assert_abs_diff_eq!(*h, h_eq, epsilon = 1e-14);
        }
        // long-time limit from a different start
        let gamma = curve.decay_rate;
        let far = relaxation_curve(&m, &s, 0.5, 40.0 / gamma, 64).unwrap();
        let last = far.samples.last().unwrap().1;
        assert_abs_diff_eq!(last, h_eq, epsilon = 1e-10);
    }

    #[test]
    fn rk4_tracks_analytic() {
        let m = atom();
        let s = circular_unit_accel();
        let gamma = decay_rate(&m, &s).unwrap();
        let curve = relaxation_curve(&m, &s, -0.5, 20.0 / gamma, 101).unwrap();
        assert!(
            curve.max_rk4_deviation <= 1e-8 * m.omega0(),
            "rk4 deviation {}",
            curve.max_rk4_deviation
        );
    }

    #[test]
    fn relaxation_domain_checks() {
        let m = atom();
        let s = circular_unit_accel();
        assert!(relaxation_curve(&m, &s, 0.6, 10.0, 10).is_err());
        assert!(relaxation_curve(&m, &s, 0.0, -1.0, 10).is_err());
        assert!(relaxation_curve(&m, &s, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn monotone_between_initial_and_equilibrium() {
        let m = atom();
        let s = circular_unit_accel();
        let curve = relaxation_curve(&m, &s, 0.5, 30.0, 200).unwrap();
        for w in curve.samples.windows(2) {
            assert!(
                w[1].1 <= w[0].1 + 1e-15,
                "curve must decrease monotonically"
            );
        }
    }
}
