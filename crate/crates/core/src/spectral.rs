//! The spectral function F(ω) = ∫₀^∞ C^F(u) cos(ωu) du and the rate
//! contributions it feeds.
//!
//! F is the single object from which every downstream quantity derives:
//!
//!   Γ^vf(ω) = −(μ²/2) ω F(|ω|),       Γ^rr(ω) = −(μ²/16π) ω²,
//!
//! with the radiation-reaction part independent of the worldline.  For
//! inertial motion F(ω) = |ω|/8π exactly, so all acceleration effects live
//! in the excess F − |ω|/8π ≥ 0.  The numeric path never integrates the
//! raw C^F (u⁻² singular at coincidence): the inertial part is inserted
//! analytically and only the bounded subtracted kernel is transformed.
//!
//! Closed forms:
//! * inertial:              F = |ω|/8π
//! * circular, high v:      F = |ω|/8π + (aA/16√3π) e^{−2√3B|ω|/a}
//!   with A = 1 + (3/5)(vγ)⁻², B = 1 − (1/5)(vγ)⁻² (one-pole expansion of
//!   the orbital kernel, reliable for v ≳ 0.85)
//! * uniform acceleration:  F = (|ω|/8π) coth(π|ω|/a), the thermal form at
//!   temperature a/2π; the numeric subtracted transform is the oracle that
//!   validates it.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::atom::{AtomModel, Level};
use crate::error::{CoreError, Result};
use crate::fieldstats;
use crate::quad::{self, QuadConfig};
use crate::worldline::Worldline;

/// Evaluation strategy for F(ω).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralMethod {
    ClosedFormInertial,
    ClosedFormCircularHighV,
    ClosedFormUniformAccel,
    NumericSubtracted,
}

/// High-velocity expansion constants for circular motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HighVelocityConstants {
    /// A = 1 + (3/5)(vγ)⁻²
    pub a_factor: f64,
    /// B = 1 − (1/5)(vγ)⁻²
    pub b_factor: f64,
    /// The one-pole expansion is trusted for v ≳ 0.85.
    pub valid_high_velocity: bool,
}

/// Constants of the circular high-velocity expansion; both tend to 1 in the
/// ultrarelativistic limit.
pub fn high_velocity_constants(speed: f64) -> Result<HighVelocityConstants> {
    if !(speed > 0.0 && speed < 1.0) {
        return Err(CoreError::Domain(format!(
            "speed must satisfy 0 < v < 1, got {speed}"
        )));
    }
    let gamma_sq = 1.0 / (1.0 - speed * speed);
    let inv_vg_sq = 1.0 / (speed * speed * gamma_sq);
    Ok(HighVelocityConstants {
        a_factor: 1.0 + 0.6 * inv_vg_sq,
        b_factor: 1.0 - 0.2 * inv_vg_sq,
        valid_high_velocity: speed >= 0.85,
    })
}

/// The Fourier-cosine transform of C^F for one worldline, with a fixed
/// evaluation method.  Immutable after construction; evaluations at distinct
/// ω are independent.
#[derive(Debug, Clone)]
pub struct SpectralFunction {
    worldline: Worldline,
    method: SpectralMethod,
    hv: Option<HighVelocityConstants>,
    quad_cfg: QuadConfig,
    u_max: Option<f64>,
    bias: f64,
}

impl SpectralFunction {
    pub fn new(worldline: Worldline, method: SpectralMethod) -> Result<Self> {
        let hv = match (method, &worldline) {
            (SpectralMethod::ClosedFormInertial, Worldline::Inertial { .. }) => None,
            (SpectralMethod::ClosedFormCircularHighV, Worldline::Circular { speed, .. }) => {
                Some(high_velocity_constants(*speed)?)
            }
            (SpectralMethod::ClosedFormUniformAccel, Worldline::UniformAcceleration { .. }) => None,
            (SpectralMethod::NumericSubtracted, _) => None,
            (m, w) => {
                return Err(CoreError::Domain(format!(
                    "method {m:?} does not apply to worldline {w:?}"
                )))
            }
        };
        Ok(SpectralFunction {
            worldline,
            method,
            hv,
            quad_cfg: QuadConfig::default(),
            u_max: None,
            bias: 0.0,
        })
    }

    /// Numeric subtracted-kernel transform; works for every worldline.
    pub fn numeric(worldline: Worldline) -> Self {
        SpectralFunction {
            worldline,
            method: SpectralMethod::NumericSubtracted,
            hv: None,
            quad_cfg: QuadConfig::default(),
            u_max: None,
            bias: 0.0,
        }
    }

    /// The closed form matching the worldline variant.
    pub fn closed_form(worldline: Worldline) -> Result<Self> {
        let method = match worldline {
            Worldline::Inertial { .. } => SpectralMethod::ClosedFormInertial,
            Worldline::UniformAcceleration { .. } => SpectralMethod::ClosedFormUniformAccel,
            Worldline::Circular { .. } => SpectralMethod::ClosedFormCircularHighV,
        };
        SpectralFunction::new(worldline, method)
    }

    /// Forces A = B = 1 in the circular closed form (ultrarelativistic limit).
    pub fn with_ultrarelativistic_limit(mut self) -> Self {
        if let Some(hv) = self.hv.as_mut() {
            hv.a_factor = 1.0;
            hv.b_factor = 1.0;
        }
        self
    }

    pub fn with_quad_config(mut self, cfg: QuadConfig) -> Self {
        self.quad_cfg = cfg;
        self
    }

    /// Overrides the numeric truncation point (default 200/min(ω, a)).
    pub fn with_u_max(mut self, u_max: f64) -> Self {
        self.u_max = Some(u_max);
        self
    }

    /// Multiplies every evaluation by (1 + bias).  Diagnostic knob that lets
    /// the verification suite prove it detects a corrupted spectral function;
    /// leave at zero for physics.
    pub fn with_diagnostic_bias(mut self, bias: f64) -> Self {
        self.bias = bias;
        self
    }

    pub fn worldline(&self) -> &Worldline {
        &self.worldline
    }

    pub fn method(&self) -> SpectralMethod {
        self.method
    }

    pub fn high_velocity(&self) -> Option<&HighVelocityConstants> {
        self.hv.as_ref()
    }

    /// F(ω); even in ω, strictly positive for ω ≠ 0.
    pub fn evaluate(&self, omega: f64) -> Result<f64> {
        Ok((1.0 + self.bias) * (omega.abs() / (8.0 * PI) + self.excess_unbiased(omega)?))
    }

    /// F(ω) − |ω|/8π ≥ 0: the acceleration excess that drives spontaneous
    /// excitation.  Exactly zero on inertial worldlines.
    pub fn excess(&self, omega: f64) -> Result<f64> {
        let raw = self.excess_unbiased(omega)?;
        if self.bias == 0.0 {
            Ok(raw)
        } else {
            Ok(raw + self.bias * (omega.abs() / (8.0 * PI) + raw))
        }
    }

    fn excess_unbiased(&self, omega: f64) -> Result<f64> {
        if !omega.is_finite() {
            return Err(CoreError::Domain(format!("omega must be finite: {omega}")));
        }
        let w = omega.abs();
        match self.method {
            SpectralMethod::ClosedFormInertial => Ok(0.0),
            SpectralMethod::ClosedFormCircularHighV => {
                let a = self.worldline.proper_acceleration();
                let hv = self.hv.as_ref().expect("constants fixed at construction");
                Ok(a * hv.a_factor / (16.0 * 3.0_f64.sqrt() * PI)
                    * (-2.0 * 3.0_f64.sqrt() * hv.b_factor * w / a).exp())
            }
            SpectralMethod::ClosedFormUniformAccel => {
                let a = self.worldline.proper_acceleration();
                if w == 0.0 {
                    // ω coth(πω/a) → a/π as ω → 0
                    return Ok(a / (8.0 * PI * PI));
                }
                // (ω/8π)(coth(πω/a) − 1) = (ω/4π)/(e^{2πω/a} − 1)
                Ok(w / (4.0 * PI) / (2.0 * PI * w / a).exp_m1())
            }
            SpectralMethod::NumericSubtracted => {
                if !self.worldline.is_accelerated() {
                    return Ok(0.0);
                }
                if w == 0.0 {
                    return Err(CoreError::Domain(
                        "numeric spectral evaluation rejects omega = 0".into(),
                    ));
                }
                let a = self.worldline.proper_acceleration();
                let u_max = self.u_max.unwrap_or(200.0 / w.min(a));
                let cfg = QuadConfig {
                    abs_tol: if self.quad_cfg.abs_tol > 0.0 {
                        self.quad_cfg.abs_tol
                    } else {
                        1e-13 * w.max(a)
                    },
                    ..self.quad_cfg
                };
                let kernel = |u: f64| fieldstats::cf_subtracted(&self.worldline, u);
                let r = quad::cosine_transform_decaying(&kernel, w, u_max, &cfg)?;
                if r.abs_error > cfg.abs_tol.max(1e-7 * r.value.abs()) {
                    return Err(CoreError::Quadrature(format!(
                        "spectral tail estimate {:.3e} exceeds tolerance at omega={w}",
                        r.abs_error
                    )));
                }
                Ok(r.value)
            }
        }
    }
}

/// Radiation-reaction rate contribution, identical on every worldline:
/// Γ^rr(ω) = −(μ²/16π) ω².
pub fn gamma_rr(atom: &AtomModel, omega: f64) -> f64 {
    -atom.mu_sq() / (16.0 * PI) * omega * omega
}

/// Vacuum-fluctuation rate contribution Γ^vf(ω) = −(μ²/2) ω F(|ω|); odd in
/// ω, carrying the excitation/de-excitation asymmetry.
pub fn gamma_vf(atom: &AtomModel, s: &SpectralFunction, omega: f64) -> Result<f64> {
    Ok(-(atom.mu_sq() / 2.0) * omega * s.evaluate(omega)?)
}

/// Per-transition energy-rate breakdown for one initial level.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RateBreakdown {
    pub level: Level,
    pub gamma_vf: f64,
    pub gamma_rr: f64,
    pub gamma_total: f64,
}

/// Rate of change of the mean atomic energy for an atom prepared in `level`,
/// split into vacuum-fluctuation and radiation-reaction parts.  The ground
/// state total (μ²ω₀/2)[F(ω₀) − ω₀/8π] is non-negative and vanishes exactly
/// for inertial motion; the excited total is strictly negative.
pub fn total_rate(atom: &AtomModel, s: &SpectralFunction, level: Level) -> Result<RateBreakdown> {
    let omega_ab = level.transition_frequency(atom);
    let vf = gamma_vf(atom, s, omega_ab)?;
    let rr = gamma_rr(atom, omega_ab);
    Ok(RateBreakdown {
        level,
        gamma_vf: vf,
        gamma_rr: rr,
        gamma_total: vf + rr,
    })
}
