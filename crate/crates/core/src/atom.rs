//! Two-level atom model and its statistical functions.
//!
//! The atom has stationary states |+⟩ and |−⟩ with energies ±ω₀/2 and a
//! single transition matrix element |⟨a|R₂(0)|b⟩|² = 1/4 for a ≠ b.  Its
//! symmetric correlation function and linear susceptibility reduce to
//!
//!   C^A(u) = (1/4) cos(ω₀u),    χ^A(u) = (i/4) s sin(ω₀u),
//!
//! with s = +1 for the upper level and −1 for the lower one.  Complex
//! χ-functions are represented throughout by the real coefficient of i, so
//! the numeric core stays in real arithmetic.  Multi-level generalizations
//! would replace the single transition by a sum over intermediate states
//! weighted by per-pair matrix elements; the public surface deliberately
//! keeps that seam narrow (everything enters through the transition
//! frequency ±ω₀ and the matrix element).

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Squared transition matrix element |⟨a|R₂(0)|b⟩|² for a ≠ b.
pub const MATRIX_ELEMENT_SQ: f64 = 0.25;

/// Two-level atom parameters: level gap ω₀ > 0 and coupling μ > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomModel {
    omega0: f64,
    mu: f64,
}

impl AtomModel {
    pub fn new(omega0: f64, mu: f64) -> Result<Self> {
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(CoreError::Domain(format!(
                "level gap omega0 must be positive and finite, got {omega0}"
            )));
        }
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(CoreError::Domain(format!(
                "coupling mu must be positive and finite, got {mu}"
            )));
        }
        Ok(AtomModel { omega0, mu })
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// μ² — the perturbative weight of every rate and shift.
    pub fn mu_sq(&self) -> f64 {
        self.mu * self.mu
    }
}

/// Atomic level tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Level {
    /// Upper level, energy +ω₀/2.
    Plus,
    /// Lower level, energy −ω₀/2.
    Minus,
}

impl Level {
    pub fn energy(&self, atom: &AtomModel) -> f64 {
        match self {
            Level::Plus => 0.5 * atom.omega0(),
            Level::Minus => -0.5 * atom.omega0(),
        }
    }

    pub fn other(&self) -> Level {
        match self {
            Level::Plus => Level::Minus,
            Level::Minus => Level::Plus,
        }
    }

    /// Transition frequency ω_ab = ω_a − ω_b to the other level: ±ω₀.
    pub fn transition_frequency(&self, atom: &AtomModel) -> f64 {
        match self {
            Level::Plus => atom.omega0(),
            Level::Minus => -atom.omega0(),
        }
    }
}

/// Symmetric correlation function of the atom, C^A(u) = (1/4) cos(ω₀u).
/// Identical for both levels.
pub fn ca_atom(atom: &AtomModel, _level: Level, u: f64) -> f64 {
    MATRIX_ELEMENT_SQ * (atom.omega0() * u).cos()
}

/// Linear susceptibility of the atom as the real coefficient of i:
/// χ^A(u) = (i/4) s sin(ω₀u) with s = ±1 for Plus/Minus.
pub fn chia_atom(atom: &AtomModel, level: Level, u: f64) -> f64 {
    let sign = match level {
        Level::Plus => 1.0,
        Level::Minus => -1.0,
    };
    sign * MATRIX_ELEMENT_SQ * (atom.omega0() * u).sin()
}
