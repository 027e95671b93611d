//! Minkowski-vacuum two-point statistical functions along a worldline.
//!
//! The symmetric correlation function and the linear susceptibility of a
//! massless scalar field, evaluated at two points of a trajectory, are
//!
//!   C^F = −(1/8π²) [ 1/((Δt+iε)² − |Δx⃗|²) + 1/((Δt−iε)² − |Δx⃗|²) ],
//!   χ^F = +(1/8π²) [ 1/((Δt+iε)² − |Δx⃗|²) − 1/((Δt−iε)² − |Δx⃗|²) ],
//!
//! with the iε prescription regulating the light-cone singularity.  C^F is
//! real and even in u = τ − τ′; χ^F is purely imaginary and odd, and is
//! represented here by the real coefficient of i.
//!
//! Away from u = 0 the ε → 0 limit of C^F is −1/(4π²σ²(u)), so the main
//! computational path works with the inertial-subtracted combination
//! C^F − C^F_inert, which is bounded everywhere and carried by the
//! cancellation-free interval excess σ²(u) − u².  Explicit ε appears only in
//! the distributional harness, which verifies that χ^F acts on test
//! functions as (i/4π)δ′(τ−τ′) on *every* timelike worldline — the
//! trajectory-independence that makes radiation reaction universal.

use std::f64::consts::PI;

use crate::error::{CoreError, Result};
use crate::quad::{self, QuadConfig};
use crate::worldline::Worldline;

/// Positive iε regulator, in units of proper time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Epsilon(f64);

impl Epsilon {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(CoreError::Domain(format!(
                "epsilon must be positive and finite, got {value}"
            )));
        }
        Ok(Epsilon(value))
    }

    /// Default regulator for a given atom/worldline scale:
    /// 1e−3 · min(1/ω₀, 1/a).
    pub fn default_for(omega0: f64, accel: f64) -> Result<Self> {
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(CoreError::Domain(format!(
                "omega0 must be positive, got {omega0}"
            )));
        }
        let mut bound = 1.0 / omega0;
        if accel > 0.0 {
            bound = bound.min(1.0 / accel);
        }
        Epsilon::new(1e-3 * bound)
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// Geometrically decreasing regulator sequence starting at `self`.
    pub fn halving_sequence(&self, n: usize) -> Vec<Epsilon> {
        (0..n).map(|k| Epsilon(self.0 / (1 << k) as f64)).collect()
    }
}

/// One regularized sample of a statistical function.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationSample {
    /// Proper-time difference u = τ − τ′.
    pub u: f64,
    /// C^F value, or the real coefficient of i for χ^F.
    pub value: f64,
    /// Regulator used.
    pub epsilon: f64,
}

/// One regularized C^F evaluation bundled with the regulator that produced
/// it.
pub fn sample_cf(w: &Worldline, u: f64, eps: Epsilon) -> CorrelationSample {
    CorrelationSample {
        u,
        value: cf_field(w, u, eps),
        epsilon: eps.value(),
    }
}

/// C^F(u; ε) on a worldline, from the stationary-gauge Δt(u) and |Δx⃗|(u):
/// −(1/4π²)(σ² − ε²)/[(σ² − ε²)² + 4Δt²ε²].
pub fn cf_field(w: &Worldline, u: f64, eps: Epsilon) -> f64 {
    let e = eps.value();
    let dt = w.time_separation(u);
    let sigma_sq = w.geodesic_interval_sq(u);
    cf_kernel(sigma_sq, dt, e)
}

/// Inertial reference kernel: C^F with σ² = u², Δt = u (rest frame).
pub fn cf_inertial(u: f64, eps: Epsilon) -> f64 {
    cf_kernel(u * u, u, eps.value())
}

fn cf_kernel(sigma_sq: f64, dt: f64, e: f64) -> f64 {
    if !sigma_sq.is_finite() {
        // σ² beyond f64 range: the kernel has already decayed to zero
        return 0.0;
    }
    let re = sigma_sq - e * e;
    let im = 2.0 * dt * e;
    let denom = re * re + im * im;
    if !denom.is_finite() {
        return -(1.0 / (4.0 * PI * PI)) / re;
    }
    -(1.0 / (4.0 * PI * PI)) * re / denom
}

/// ε → 0 limit of C^F − C^F_inert: (1/4π²)(1/u² − 1/σ²(u)), evaluated
/// without cancellation as the excess ratio (σ²−u²)/(u²σ²).  Regular at
/// u = 0 with limit a²/48π²; identically zero on inertial worldlines;
/// strictly positive otherwise.
pub fn cf_subtracted(w: &Worldline, u: f64) -> f64 {
    let a = w.proper_acceleration();
    if a == 0.0 {
        return 0.0;
    }
    // switch to the u→0 limit once the quartic lead term dominates to ~1e−10
    let phase = phase_rate(w) * u;
    if phase.abs() < 1e-5 {
        return a * a / (48.0 * PI * PI);
    }
    let excess = w.interval_excess(u);
    let u2 = u * u;
    if excess > u2 {
        // σ² dominated by the excess: the direct difference is
        // cancellation-free and immune to σ² overflow
        let sigma_sq = u2 + excess;
        let inv_sigma = if sigma_sq.is_finite() {
            1.0 / sigma_sq
        } else {
            0.0
        };
        return (1.0 / u2 - inv_sigma) / (4.0 * PI * PI);
    }
    excess / (u2 * (u2 + excess)) / (4.0 * PI * PI)
}

/// Frequency scale of the interval excess: the argument of the sinh/sin in
/// σ²(u) grows at this rate.
fn phase_rate(w: &Worldline) -> f64 {
    match *w {
        Worldline::Inertial { .. } => 0.0,
        Worldline::UniformAcceleration { accel } => 0.5 * accel,
        Worldline::Circular { radius, speed } => 0.5 * speed / radius * w.gamma(),
    }
}

/// Real coefficient of i in χ^F between two events at proper times τ and τ′
/// (event-level; valid for non-stationary gauges as well):
/// −(1/2π²) ε Δt / [(σ² − ε²)² + 4ε²Δt²].
pub fn chi_field_im(w: &Worldline, tau: f64, tau_prime: f64, eps: Epsilon) -> f64 {
    let e = eps.value();
    let p = w.event_at(tau);
    let q = w.event_at(tau_prime);
    let dt = p.dt_to(&q);
    let sigma_sq = p.interval_sq_to(&q);
    let re = sigma_sq - e * e;
    let im = 2.0 * dt * e;
    -(1.0 / (2.0 * PI * PI)) * e * dt / (re * re + im * im)
}

/// Analytic, exponentially decaying test function for the distributional
/// harness: exp(−(x−c)²/2w²).
#[derive(Debug, Clone, Copy)]
pub struct GaussianTest {
    pub center: f64,
    pub width: f64,
}

impl GaussianTest {
    pub fn new(center: f64, width: f64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(CoreError::Domain(format!(
                "test-function width must be positive, got {width}"
            )));
        }
        Ok(GaussianTest { center, width })
    }

    pub fn value(&self, x: f64) -> f64 {
        let z = (x - self.center) / self.width;
        (-0.5 * z * z).exp()
    }

    pub fn derivative(&self, x: f64) -> f64 {
        -(x - self.center) / (self.width * self.width) * self.value(x)
    }
}

/// Outcome of the distributional identity check.
#[derive(Debug, Clone)]
pub struct DistributionalCheck {
    /// ∫ f(τ′) χ^F dτ′ (coefficient of i), extrapolated ε → 0.
    pub lhs: f64,
    /// (1/4π) f′(τ) (coefficient of i).
    pub rhs: f64,
    /// Regulators used, largest first.
    pub epsilons: Vec<f64>,
    /// Stabilization indicator from the extrapolation tableau.
    pub extrapolation_change: f64,
}

impl DistributionalCheck {
    /// |lhs − rhs| relative to the larger magnitude.
    pub fn relative_deviation(&self) -> f64 {
        let scale = self.rhs.abs().max(self.lhs.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.lhs - self.rhs).abs() / scale
        }
    }
}

/// Tests χ^F as a distribution at observation time τ: smears it with a
/// Gaussian test function at each regulator in `eps_seq` (decreasing) and
/// extrapolates ε → 0, returning the pair (lhs, rhs).  The identity
/// lhs = (1/4π) f′(τ) holding for every timelike worldline is what removes
/// the trajectory dependence from radiation reaction.
pub fn chif_distributional_check(
    w: &Worldline,
    f: &GaussianTest,
    tau: f64,
    eps_seq: &[Epsilon],
    rel_tol: f64,
) -> Result<DistributionalCheck> {
    if eps_seq.len() < 2 {
        return Err(CoreError::Domain(
            "need at least two regulator values to extrapolate".into(),
        ));
    }
    for pair in eps_seq.windows(2) {
        if pair[1].value() >= pair[0].value() {
            return Err(CoreError::Domain(
                "regulator sequence must be strictly decreasing".into(),
            ));
        }
    }

    let rhs = f.derivative(tau) / (4.0 * PI);
    let scale = 1.0 / (4.0 * PI * f.width);

    let mut samples = Vec::with_capacity(eps_seq.len());
    for eps in eps_seq {
        let lhs = smear_chi(w, f, tau, *eps, scale)?;
        samples.push((eps.value(), lhs));
    }

    let (lhs, change) = quad::extrapolate_to_zero(&samples)?;
    if change > rel_tol * scale.max(lhs.abs()) {
        return Err(CoreError::NonConvergence(format!(
            "epsilon extrapolation changed by {change:.3e} in the last stage, \
             above {rel_tol:.1e} of scale"
        )));
    }

    Ok(DistributionalCheck {
        lhs,
        rhs,
        epsilons: eps_seq.iter().map(|e| e.value()).collect(),
        extrapolation_change: change,
    })
}

fn smear_chi(w: &Worldline, f: &GaussianTest, tau: f64, eps: Epsilon, scale: f64) -> Result<f64> {
    let e = eps.value();
    let reach = 12.0 * f.width;
    let lo = (f.center - reach).min(tau - reach);
    let hi = (f.center + reach).max(tau + reach);

    // seed panels around the kernel peak at τ′ = τ (structure at scale ε)
    let mut points = vec![lo, hi, f.center];
    for k in [1.0, 8.0, 64.0, 512.0] {
        points.push(tau - k * e);
        points.push(tau + k * e);
    }
    points.push(tau);
    points.retain(|x| *x > lo && *x < hi);
    points.push(lo);
    points.push(hi);
    points.sort_by(|a, b| a.total_cmp(b));
    points.dedup();

    let cfg = QuadConfig {
        rel_tol: 1e-10,
        abs_tol: 1e-10 * scale,
        max_intervals: 4000,
        ..QuadConfig::default()
    };
    let integrand = |tp: f64| f.value(tp) * chi_field_im(w, tau, tp, eps);
    Ok(quad::integrate_with_breakpoints(&integrand, &points, &cfg)?.value)
}
