//! Transition rates, relaxation dynamics, and radiative level shifts for a
//! two-level atom on stationary relativistic worldlines.
//!
//! A pointlike two-level atom coupled to the massless scalar vacuum and
//! carried along a stationary trajectory (inertial, uniformly accelerated,
//! or circular) exchanges energy with the field through two distinct
//! channels: vacuum fluctuations and radiation reaction.  Radiation
//! reaction is universal — identical on every timelike worldline — while
//! the vacuum-fluctuation channel feels the acceleration through the
//! spectral function F(ω), the Fourier-cosine transform of the symmetric
//! field correlation along the path.  The excess F(ω₀) − ω₀/8π over the
//! inertial value drives spontaneous excitation from the ground state (a
//! generalized Unruh effect), fixes the Einstein coefficients and the
//! effective temperature, and produces a finite acceleration-induced
//! correction to the radiative level shift.
//!
//! Everything is expressed in natural units ħ = c = k_B = 1; frequencies,
//! accelerations, temperatures, and rates share one inverse-length family.
//!
//! Module map:
//! * [`worldline`] — stationary trajectories and interval kinematics
//! * [`atom`] — the two-level system and its statistical functions
//! * [`fieldstats`] — vacuum correlation functions with iε regularization
//! * [`spectral`] — F(ω) and the vf/rr rate contributions
//! * [`dynamics`] — Einstein coefficients, relaxation, effective temperature
//! * [`lambshift`] — principal-value shifts and the finite correction 𝒟
//! * [`quad`] — adaptive, oscillatory, and principal-value quadrature
//! * [`verify`] — the numerical verification suite

pub mod atom;
pub mod dynamics;
pub mod error;
pub mod fieldstats;
pub mod lambshift;
pub mod quad;
pub mod spectral;
pub mod verify;
pub mod worldline;

pub use atom::{AtomModel, Level};
pub use dynamics::{EinsteinCoefficients, RelaxationCurve};
pub use error::{CoreError, Result};
pub use fieldstats::{CorrelationSample, Epsilon, GaussianTest};
pub use lambshift::{ElectronScenario, ExpIntegralValue, ShiftResult, SweepMode, SweepPoint};
pub use spectral::{HighVelocityConstants, RateBreakdown, SpectralFunction, SpectralMethod};
pub use verify::{VerifyConfig, VerifyLevel, VerifyReport};
pub use worldline::{Event, FourVelocity, Worldline};
