//! Numerical verification suite: runs the structural identities of the
//! model as pass/fail checks, shared by the CLI `verify` subcommand and the
//! test suites.
//!
//! The checks mirror the analytic structure: universality of the
//! susceptibility as a distribution (hence of radiation reaction), strict
//! positivity of the spectral excess on accelerated worldlines together
//! with its exact inertial cancellation, thermality of the uniformly
//! accelerated excess, exactness and worldline-independence of the
//! radiation-reaction shift, finiteness and nonvanishing of the
//! acceleration shift correction with closed-form/quadrature duality, and
//! RK4/analytic agreement of the relaxation dynamics.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::atom::{AtomModel, Level};
use crate::dynamics;
use crate::error::Result;
use crate::fieldstats::{chif_distributional_check, Epsilon, GaussianTest};
use crate::lambshift::{self, SweepMode};
use crate::spectral::{total_rate, SpectralFunction};
use crate::worldline::Worldline;

/// Grid density of the verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerifyLevel {
    /// Coarse grids, seconds of runtime.
    Fast,
    /// Dense grids.
    Full,
}

/// Options for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub level: VerifyLevel,
    /// Fractional bias injected into every spectral evaluation; the suite
    /// must detect any appreciable nonzero value.  Zero for physics.
    pub spectral_bias: f64,
}

impl VerifyConfig {
    pub fn new(level: VerifyLevel) -> Self {
        VerifyConfig {
            level,
            spectral_bias: 0.0,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Worst measured deviation, in the units of `tolerance`.
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
}

/// Full verification report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<28} measured {:>12.4e}  tolerance {:>9.1e}  {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.measured,
                c.tolerance,
                c.detail
            ));
        }
        out
    }
}

pub fn run(level: VerifyLevel) -> Result<VerifyReport> {
    run_with(&VerifyConfig::new(level))
}

pub fn run_with(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let checks = vec![
        rr_universality_distributional(cfg)?,
        vacuum_excess_positivity(cfg)?,
        thermality(cfg)?,
        rr_shift_level_identity(cfg)?,
        shift_tail_convergence(cfg)?,
        shift_nonzero_when_accelerated(cfg)?,
        shift_duality(cfg)?,
        relaxation_consistency(cfg)?,
    ];
    Ok(VerifyReport { checks })
}

fn numeric_spectral(cfg: &VerifyConfig, w: Worldline) -> SpectralFunction {
    SpectralFunction::numeric(w).with_diagnostic_bias(cfg.spectral_bias)
}

/// χ^F acts as (i/4π)δ′ on every worldline: smeared against a Gaussian the
/// result must equal (1/4π)f′(τ) and be identical across trajectories.
fn rr_universality_distributional(cfg: &VerifyConfig) -> Result<CheckResult> {
    let tol = 1e-3;
    let f = GaussianTest::new(0.7, 1.0)?;
    let tau = 0.0;
    let n_eps = match cfg.level {
        VerifyLevel::Fast => 3,
        VerifyLevel::Full => 4,
    };
    let eps_seq = Epsilon::new(0.016)?.halving_sequence(n_eps);
    let worldlines = [
        Worldline::inertial(0.0)?,
        Worldline::uniform_acceleration(1.0)?,
        Worldline::circular_with_accel(1.0, 0.9)?,
    ];
    let mut lhs = Vec::new();
    let mut worst = 0.0_f64;
    for w in &worldlines {
        let check = chif_distributional_check(w, &f, tau, &eps_seq, 10.0 * tol)?;
        worst = worst.max(check.relative_deviation());
        lhs.push(check.lhs);
    }
    let rhs = f.derivative(tau) / (4.0 * PI);
    for i in 0..lhs.len() {
        for j in i + 1..lhs.len() {
            worst = worst.max((lhs[i] - lhs[j]).abs() / rhs.abs());
        }
    }
    Ok(CheckResult {
        name: "rr-universality".into(),
        passed: worst < tol,
        measured: worst,
        tolerance: tol,
        detail: "chi^F smeared vs (1/4pi) f'(tau), three worldlines".into(),
    })
}

/// Strict positivity of the numeric spectral excess on accelerated
/// worldlines, and its exact vanishing (detailed balance) on inertial ones.
/// The inertial part is the sharp boundary case and is what catches an
/// overall bias in F.
fn vacuum_excess_positivity(cfg: &VerifyConfig) -> Result<CheckResult> {
    let omega0 = 1.0;
    let atom = AtomModel::new(omega0, 1.0)?;
    let floor = omega0 / (8.0 * PI);

    // inertial balance: ground-state total rate must vanish
    let inert = numeric_spectral(cfg, Worldline::inertial(0.0)?);
    let ground = total_rate(&atom, &inert, Level::Minus)?;
    let balance_dev = ground.gamma_total.abs() / (atom.mu_sq() * omega0 * omega0);
    let balance_tol = 1e-6;

    let speeds: &[f64] = match cfg.level {
        VerifyLevel::Fast => &[0.5, 0.9],
        VerifyLevel::Full => &[0.5, 0.9, 0.99],
    };
    let accels: &[f64] = match cfg.level {
        VerifyLevel::Fast => &[1.0, 3.0],
        VerifyLevel::Full => &[0.3, 1.0, 3.0],
    };
    let mut min_excess = f64::INFINITY;
    for &v in speeds {
        let s = numeric_spectral(cfg, Worldline::circular_with_accel(omega0, v)?);
        min_excess = min_excess.min(s.excess(omega0)?);
    }
    for &a in accels {
        let s = numeric_spectral(cfg, Worldline::uniform_acceleration(a * omega0)?);
        min_excess = min_excess.min(s.excess(omega0)?);
    }

    let positive = min_excess > 0.0;
    let passed = positive && balance_dev < balance_tol;
    Ok(CheckResult {
        name: "vacuum-excess-positivity".into(),
        passed,
        measured: balance_dev,
        tolerance: balance_tol,
        detail: format!(
            "inertial balance dev (shown); min excess/(w0/8pi) = {:.3e}, strictly positive: {positive}",
            min_excess / floor
        ),
    })
}

/// Uniformly accelerated detailed balance: A↑/A↓ = e^{−2πω₀/a} from the
/// numeric spectral function.
fn thermality(cfg: &VerifyConfig) -> Result<CheckResult> {
    let tol = 1e-3;
    let ratios: Vec<f64> = match cfg.level {
        VerifyLevel::Fast => vec![0.2, 1.0, 3.0],
        VerifyLevel::Full => (0..10)
            .map(|k| 0.2 * (15.0_f64).powf(k as f64 / 9.0))
            .collect(),
    };
    let mut worst = 0.0_f64;
    for r in ratios {
        let atom = AtomModel::new(r, 1.0)?; // ω₀ = r·a with a = 1
        let s = numeric_spectral(cfg, Worldline::uniform_acceleration(1.0)?);
        let c = dynamics::einstein_coefficients(&atom, &s)?;
        let boltzmann = (-2.0 * PI * atom.omega0()).exp();
        worst = worst.max((c.a_up / c.a_down - boltzmann).abs() / boltzmann);
    }
    Ok(CheckResult {
        name: "thermality-unruh".into(),
        passed: worst < tol,
        measured: worst,
        tolerance: tol,
        detail: "A_up/A_down vs exp(-2 pi w0/a), numeric F".into(),
    })
}

/// The radiation-reaction shift is identical for both levels (bit-for-bit)
/// and carries no worldline dependence at any cutoff.
fn rr_shift_level_identity(_cfg: &VerifyConfig) -> Result<CheckResult> {
    let atom = AtomModel::new(1.0, 1.0)?;
    let mut worst = 0.0_f64;
    for lambda in [10.0, 100.0, 1000.0] {
        let plus = lambshift::shift_rr_per_level(&atom, Level::Plus, lambda)?;
        let minus = lambshift::shift_rr_per_level(&atom, Level::Minus, lambda)?;
        worst = worst.max((plus - minus).abs() / plus.abs());
    }
    Ok(CheckResult {
        name: "rr-shift-level-identity".into(),
        passed: worst == 0.0,
        measured: worst,
        tolerance: 1e-12,
        detail: "level difference of the rr shift, three cutoffs".into(),
    })
}

/// The subtracted shift integrand converges: octave contributions beyond the
/// pole window pass a Cauchy criterion.
fn shift_tail_convergence(_cfg: &VerifyConfig) -> Result<CheckResult> {
    let atom = AtomModel::new(1.0, 1.0)?;
    let tol = 1e-8;
    let mut worst_tail = 0.0_f64;
    for (accel, speed) in [(0.5, 0.9), (2.0, 0.95)] {
        let w = Worldline::circular_with_accel(accel, speed)?;
        let s = SpectralFunction::closed_form(w)?;
        let shift = lambshift::relative_shift_vf(&atom, &s, 100.0, 1e-9)?;
        // ignore the first octaves (they carry the physics); the tail must
        // decay below tolerance and keep shrinking
        let n = shift.pv_tail_octaves.len();
        if n >= 2 {
            worst_tail = worst_tail.max(shift.pv_tail_octaves[n - 2].abs());
            worst_tail = worst_tail.max(shift.pv_tail_octaves[n - 1].abs());
        }
    }
    Ok(CheckResult {
        name: "shift-tail-convergence".into(),
        passed: worst_tail < tol,
        measured: worst_tail,
        tolerance: tol,
        detail: "trailing octave contributions of the shift integrand".into(),
    })
}

/// 𝒟 ≠ 0 for every accelerated sample, bounded below on the test grid, and
/// 𝒟(a) → 0 linearly-or-faster as a → 0.
fn shift_nonzero_when_accelerated(cfg: &VerifyConfig) -> Result<CheckResult> {
    let atom = AtomModel::new(1.0, 1.0)?;
    let tol = 1e-12 * atom.mu_sq() * atom.omega0();
    let grid: Vec<f64> = match cfg.level {
        VerifyLevel::Fast => vec![0.1, 1.0, 10.0],
        VerifyLevel::Full => (0..9)
            .map(|k| 0.1 * (100.0_f64).powf(k as f64 / 8.0))
            .collect(),
    };
    let sweep = lambshift::sweep_fig1(&atom, &grid, SweepMode::UltraRelativistic)?;
    let gamma_inert = atom.mu_sq() * atom.omega0() / (8.0 * PI);
    let min_d = sweep
        .iter()
        .map(|p| (p.d_over_gamma_inert * gamma_inert).abs())
        .fold(f64::INFINITY, f64::min);

    // small-a bound |𝒟(a)| ≤ C·a with finite positive C
    let mut c_fit = 0.0_f64;
    for k in 1..=10 {
        let a = 0.01 * k as f64; // a/ω₀ ∈ [0.01, 0.1]
        let d = lambshift::d_closed_form(&atom, a, 1.0, 1.0)?;
        c_fit = c_fit.max(d.abs() / a);
    }
    let passed = min_d > tol && c_fit > 0.0 && c_fit.is_finite();
    Ok(CheckResult {
        name: "shift-nonzero-accelerated".into(),
        passed,
        measured: min_d,
        tolerance: tol,
        detail: format!("min |D| on grid; small-a linear bound C = {c_fit:.3e}"),
    })
}

/// Closed-form Ēi evaluation against principal-value quadrature of the same
/// shift, across the a/ω₀ grid.
fn shift_duality(cfg: &VerifyConfig) -> Result<CheckResult> {
    let atom = AtomModel::new(1.0, 1.0)?;
    let tol = 1e-6;
    let grid: Vec<f64> = match cfg.level {
        VerifyLevel::Fast => vec![0.5, 1.0, 2.0],
        VerifyLevel::Full => (0..9)
            .map(|k| 0.1 * (100.0_f64).powf(k as f64 / 8.0))
            .collect(),
    };
    let mut worst = 0.0_f64;
    for r in grid {
        let w = Worldline::circular_with_accel(r * atom.omega0(), 0.95)?;
        let s = SpectralFunction::closed_form(w)?;
        let hv = *s.high_velocity().expect("circular closed form");
        let shift = lambshift::relative_shift_vf(&atom, &s, 100.0, 1e-10)?;
        let closed = lambshift::d_closed_form(&atom, r * atom.omega0(), hv.a_factor, hv.b_factor)?;
        worst = worst.max((shift.d_correction - closed).abs() / closed.abs());
    }
    Ok(CheckResult {
        name: "shift-duality-pv-vs-ei".into(),
        passed: worst < tol,
        measured: worst,
        tolerance: tol,
        detail: "PV quadrature vs closed-form D across a/w0 grid".into(),
    })
}

/// RK4 integration of the relaxation ODE against the analytic exponential
/// solution, and the equilibrium limit.
fn relaxation_consistency(_cfg: &VerifyConfig) -> Result<CheckResult> {
    let atom = AtomModel::new(1.0, 1.0)?;
    let w = Worldline::circular_with_accel(1.0, 0.9)?;
    let s = SpectralFunction::closed_form(w)?;
    let gamma = dynamics::decay_rate(&atom, &s)?;
    let curve = dynamics::relaxation_curve(&atom, &s, -0.5, 20.0 / gamma, 101)?;
    let tol = 1e-8 * atom.omega0();
    let eq_dev = (curve.samples.last().unwrap().1 - curve.equilibrium).abs();
    let passed = curve.max_rk4_deviation < tol && eq_dev < 1e-8;
    Ok(CheckResult {
        name: "relaxation-rk4".into(),
        passed,
        measured: curve.max_rk4_deviation,
        tolerance: tol,
        detail: format!("max |analytic - RK4|; equilibrium dev {eq_dev:.2e}"),
    })
}
