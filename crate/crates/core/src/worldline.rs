//! Stationary trajectories in Minkowski space and their kinematic invariants.
//!
//! A trajectory is *stationary* when the geodesic interval between two of its
//! points depends only on the proper-time difference u = τ − τ′.  Three
//! families are provided:
//!
//! * inertial motion with speed v along the x-axis,
//! * uniform proper acceleration a on the standard hyperbola
//!   t = a⁻¹ sinh aτ, x = a⁻¹ cosh aτ,
//! * circular motion of radius R and speed v,
//!   t = γτ, x = R cos(ωγτ), y = R sin(ωγτ), with ω = v/R.
//!
//! Signature convention is (+,−,−,−) and natural units ħ = c = 1 throughout.
//! Every two-point quantity downstream (correlation functions, spectral
//! functions, rates, shifts) is driven by the two stationary kernels
//! exposed here: the squared geodesic interval σ²(u) and the spatial
//! separation |Δx⃗|(u).  A new stationary class only needs to supply those
//! two functions (plus the proper acceleration) in the match arms below to
//! inherit the whole pipeline.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// A spacetime point (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Event {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Event { t, x, y, z }
    }

    /// Minkowski interval squared to another event, Δt² − |Δx⃗|².
    pub fn interval_sq_to(&self, other: &Event) -> f64 {
        let dt = self.t - other.t;
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        dt * dt - (dx * dx + dy * dy + dz * dz)
    }

    /// Coordinate-time difference to another event.
    pub fn dt_to(&self, other: &Event) -> f64 {
        self.t - other.t
    }

    /// Spatial distance to another event.
    pub fn spatial_distance_to(&self, other: &Event) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Four-velocity components (dt/dτ, dx/dτ, dy/dτ, dz/dτ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVelocity {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVelocity {
    /// Minkowski norm u^μ u_μ with signature (+,−,−,−); equals 1 for a
    /// properly parametrized timelike worldline.
    pub fn norm_sq(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }
}

/// A stationary worldline, parametrized by proper time τ with the canonical
/// event at τ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Worldline {
    /// Uniform motion with speed v ∈ [0, 1) along the x-axis.
    Inertial { speed: f64 },
    /// Constant proper acceleration a > 0 along the x-axis (Rindler hyperbola).
    UniformAcceleration { accel: f64 },
    /// Circular orbit of radius R > 0 at speed v ∈ (0, 1) in the x-y plane.
    Circular { radius: f64, speed: f64 },
}

impl Worldline {
    pub fn inertial(speed: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&speed) {
            return Err(CoreError::Domain(format!(
                "inertial speed must satisfy 0 <= v < 1, got {speed}"
            )));
        }
        Ok(Worldline::Inertial { speed })
    }

    pub fn uniform_acceleration(accel: f64) -> Result<Self> {
        if !(accel > 0.0 && accel.is_finite()) {
            return Err(CoreError::Domain(format!(
                "proper acceleration must be positive and finite, got {accel}"
            )));
        }
        Ok(Worldline::UniformAcceleration { accel })
    }

    pub fn circular(radius: f64, speed: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(CoreError::Domain(format!(
                "orbit radius must be positive and finite, got {radius}"
            )));
        }
        if !(speed > 0.0 && speed < 1.0) {
            return Err(CoreError::Domain(format!(
                "orbital speed must satisfy 0 < v < 1, got {speed}"
            )));
        }
        Ok(Worldline::Circular { radius, speed })
    }

    /// Circular worldline with a prescribed proper acceleration instead of a
    /// radius: R = v²γ²/a.
    pub fn circular_with_accel(accel: f64, speed: f64) -> Result<Self> {
        if !(accel > 0.0 && accel.is_finite()) {
            return Err(CoreError::Domain(format!(
                "proper acceleration must be positive and finite, got {accel}"
            )));
        }
        if !(speed > 0.0 && speed < 1.0) {
            return Err(CoreError::Domain(format!(
                "orbital speed must satisfy 0 < v < 1, got {speed}"
            )));
        }
        let gamma_sq = 1.0 / (1.0 - speed * speed);
        Ok(Worldline::Circular {
            radius: speed * speed * gamma_sq / accel,
            speed,
        })
    }

    /// Lorentz factor γ = (1 − v²)^{−1/2}; the hyperbolic worldline has no
    /// fixed γ and reports 1 (its τ = 0 value).
    pub fn gamma(&self) -> f64 {
        match *self {
            Worldline::Inertial { speed } => 1.0 / (1.0 - speed * speed).sqrt(),
            Worldline::UniformAcceleration { .. } => 1.0,
            Worldline::Circular { speed, .. } => 1.0 / (1.0 - speed * speed).sqrt(),
        }
    }

    /// Orbital angular velocity ω = v/R (circular only).
    pub fn angular_velocity(&self) -> Option<f64> {
        match *self {
            Worldline::Circular { radius, speed } => Some(speed / radius),
            _ => None,
        }
    }

    /// Magnitude of the proper acceleration: 0, a, or v²γ²/R.
    pub fn proper_acceleration(&self) -> f64 {
        match *self {
            Worldline::Inertial { .. } => 0.0,
            Worldline::UniformAcceleration { accel } => accel,
            Worldline::Circular { radius, speed } => {
                let gamma_sq = 1.0 / (1.0 - speed * speed);
                speed * speed * gamma_sq / radius
            }
        }
    }

    pub fn is_accelerated(&self) -> bool {
        !matches!(self, Worldline::Inertial { .. })
    }

    /// Coordinates of the worldline at proper time τ.
    pub fn event_at(&self, tau: f64) -> Event {
        match *self {
            Worldline::Inertial { speed } => {
                let gamma = self.gamma();
                Event::new(gamma * tau, speed * gamma * tau, 0.0, 0.0)
            }
            Worldline::UniformAcceleration { accel } => Event::new(
                (accel * tau).sinh() / accel,
                (accel * tau).cosh() / accel,
                0.0,
                0.0,
            ),
            Worldline::Circular { radius, speed } => {
                let gamma = self.gamma();
                let phase = speed / radius * gamma * tau;
                Event::new(gamma * tau, radius * phase.cos(), radius * phase.sin(), 0.0)
            }
        }
    }

    /// Four-velocity at proper time τ; normalized to u·u = 1.
    pub fn four_velocity(&self, tau: f64) -> FourVelocity {
        match *self {
            Worldline::Inertial { speed } => {
                let gamma = self.gamma();
                FourVelocity {
                    t: gamma,
                    x: speed * gamma,
                    y: 0.0,
                    z: 0.0,
                }
            }
            Worldline::UniformAcceleration { accel } => FourVelocity {
                t: (accel * tau).cosh(),
                x: (accel * tau).sinh(),
                y: 0.0,
                z: 0.0,
            },
            Worldline::Circular { radius, speed } => {
                let gamma = self.gamma();
                let phase = speed / radius * gamma * tau;
                FourVelocity {
                    t: gamma,
                    x: -speed * gamma * phase.sin(),
                    y: speed * gamma * phase.cos(),
                    z: 0.0,
                }
            }
        }
    }

    /// Spatial separation |Δx⃗| between two points u apart in proper time, in
    /// the stationary gauge.  The hyperbolic worldline is reduced to its
    /// symmetric configuration τ = ±u/2, where both points share the same x
    /// and the separation vanishes (σ² is carried entirely by Δt).
    pub fn spatial_separation(&self, u: f64) -> f64 {
        match *self {
            Worldline::Inertial { speed } => speed * self.gamma() * u.abs(),
            Worldline::UniformAcceleration { .. } => 0.0,
            Worldline::Circular { radius, speed } => {
                let half_phase = 0.5 * speed / radius * self.gamma() * u;
                2.0 * radius * half_phase.sin().abs()
            }
        }
    }

    /// Coordinate-time separation Δt(u) in the same stationary gauge as
    /// [`Self::spatial_separation`].
    pub fn time_separation(&self, u: f64) -> f64 {
        match *self {
            Worldline::Inertial { .. } | Worldline::Circular { .. } => self.gamma() * u,
            Worldline::UniformAcceleration { accel } => 2.0 / accel * (0.5 * accel * u).sinh(),
        }
    }

    /// Squared geodesic interval σ²(u) = Δt² − |Δx⃗|².  Always ≥ u², with
    /// equality exactly on inertial worldlines (timelike geodesics maximize
    /// proper time).
    pub fn geodesic_interval_sq(&self, u: f64) -> f64 {
        u * u + self.interval_excess(u)
    }

    /// The excess σ²(u) − u² ≥ 0, evaluated without cancellation.  Its
    /// small-u behaviour is (a²/12)u⁴ + O(u⁶).
    pub fn interval_excess(&self, u: f64) -> f64 {
        match *self {
            Worldline::Inertial { .. } => 0.0,
            // (4/a²)(sinh²x − x²) with x = au/2
            Worldline::UniformAcceleration { accel } => {
                let x = 0.5 * accel * u;
                4.0 / (accel * accel) * sinh_minus_x(x) * (x.sinh() + x)
            }
            // 4R²(x² − sin²x) with x = ωγu/2
            Worldline::Circular { radius, speed } => {
                let x = 0.5 * speed / radius * self.gamma() * u;
                4.0 * radius * radius * x_minus_sin(x) * (x + x.sin())
            }
        }
    }
}

/// sinh(x) − x without cancellation for small |x|.
fn sinh_minus_x(x: f64) -> f64 {
    if x.abs() < 1.0 {
        // x³/3! + x⁵/5! + ...
        let x2 = x * x;
        let mut term = x * x2 / 6.0;
        let mut sum = term;
        let mut n = 1.0_f64;
        while term.abs() > f64::EPSILON * sum.abs() {
            term *= x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
            sum += term;
            n += 1.0;
        }
        sum
    } else {
        x.sinh() - x
    }
}

/// x − sin(x) without cancellation for small |x|.
fn x_minus_sin(x: f64) -> f64 {
    if x.abs() < 1.0 {
        // x³/3! − x⁵/5! + ...
        let x2 = x * x;
        let mut term = x * x2 / 6.0;
        let mut sum = term;
        let mut n = 1.0_f64;
        while term.abs() > f64::EPSILON * sum.abs() {
            term *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
            sum += term;
            n += 1.0;
        }
        sum
    } else {
        x - x.sin()
    }
}
