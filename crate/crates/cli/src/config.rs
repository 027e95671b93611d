//! Scenario configuration: JSON config file plus flag overrides, resolved
//! into validated core types.  The resolved form is embedded in every output
//! so a run can be reproduced from its own artifact.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use unruh_core::{AtomModel, SpectralFunction, Worldline};

/// Worldline description as written in configs and resolved outputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorldlineSpec {
    /// "inertial", "uniform", or "circular".
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accel: Option<f64>,
}

impl WorldlineSpec {
    pub fn resolve(&self) -> Result<Worldline, String> {
        match self.kind.as_str() {
            "inertial" => Worldline::inertial(self.speed.unwrap_or(0.0)).map_err(|e| e.to_string()),
            "uniform" => {
                let accel = self
                    .accel
                    .ok_or("uniform worldline requires --accel (proper acceleration)")?;
                Worldline::uniform_acceleration(accel).map_err(|e| e.to_string())
            }
            "circular" => {
                let speed = self
                    .speed
                    .ok_or("circular worldline requires --speed (orbital speed)")?;
                match (self.radius, self.accel) {
                    (Some(r), None) => Worldline::circular(r, speed).map_err(|e| e.to_string()),
                    (None, Some(a)) => {
                        Worldline::circular_with_accel(a, speed).map_err(|e| e.to_string())
                    }
                    (None, None) => Err("circular worldline requires --radius or --accel".into()),
                    (Some(_), Some(_)) => {
                        Err("circular worldline takes --radius or --accel, not both".into())
                    }
                }
            }
            other => Err(format!(
                "unknown worldline kind '{other}' (expected inertial, uniform, or circular)"
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub omega0: f64,
    pub mu: f64,
}

impl Default for AtomSpec {
    fn default() -> Self {
        AtomSpec {
            omega0: 1.0,
            mu: 1.0,
        }
    }
}

/// JSON configuration file; every field optional, flags override.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub worldline: Option<WorldlineSpec>,
    pub atom: Option<AtomSpec>,
    pub method: Option<String>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

/// Flag-level overrides collected by the argument parser.
#[derive(Debug, Clone, Default)]
pub struct ScenarioOverrides {
    pub worldline: Option<String>,
    pub speed: Option<f64>,
    pub radius: Option<f64>,
    pub accel: Option<f64>,
    pub omega0: Option<f64>,
    pub mu: Option<f64>,
    pub method: Option<String>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

/// Fully resolved scenario, embedded verbatim in outputs.
#[derive(Debug, Clone, Serialize)]
pub struct ResolvedScenario {
    pub worldline: WorldlineSpec,
    pub atom: AtomSpec,
    pub method: String,
    pub tol: f64,
}

pub struct Scenario {
    pub resolved: ResolvedScenario,
    pub worldline: Worldline,
    pub atom: AtomModel,
    pub out: Option<PathBuf>,
    pub format: String,
}

impl Scenario {
    /// Merges config file and flags (flags win), validates everything.
    pub fn build(file: ConfigFile, flags: &ScenarioOverrides) -> Result<Scenario, String> {
        let mut spec = file.worldline.unwrap_or(WorldlineSpec {
            kind: "inertial".into(),
            speed: None,
            radius: None,
            accel: None,
        });
        if let Some(kind) = &flags.worldline {
            // a kind given on the command line starts from a clean slate so
            // stale file parameters cannot leak into a different variant
            if spec.kind != *kind {
                spec = WorldlineSpec {
                    kind: kind.clone(),
                    speed: None,
                    radius: None,
                    accel: None,
                };
            }
        }
        if let Some(v) = flags.speed {
            spec.speed = Some(v);
        }
        if let Some(r) = flags.radius {
            spec.radius = Some(r);
        }
        if let Some(a) = flags.accel {
            spec.accel = Some(a);
        }
        let worldline = spec.resolve()?;

        let mut atom_spec = file.atom.unwrap_or_default();
        if let Some(w0) = flags.omega0 {
            atom_spec.omega0 = w0;
        }
        if let Some(mu) = flags.mu {
            atom_spec.mu = mu;
        }
        let atom = AtomModel::new(atom_spec.omega0, atom_spec.mu).map_err(|e| e.to_string())?;

        let method = flags
            .method
            .clone()
            .or(file.method)
            .unwrap_or_else(|| "closed".into());
        if method != "closed" && method != "numeric" {
            return Err(format!(
                "unknown method '{method}' (expected closed or numeric)"
            ));
        }

        let format = flags
            .format
            .clone()
            .or(file.format)
            .unwrap_or_else(|| "csv".into());
        if format != "csv" && format != "json" {
            return Err(format!("unknown format '{format}' (expected csv or json)"));
        }

        let tol = flags.tol.or(file.tol).unwrap_or(1e-9);
        if !(tol > 0.0 && tol < 1.0) {
            return Err(format!("tolerance must lie in (0, 1), got {tol}"));
        }

        // canonical spec for reproduction: include derived parameters
        let canonical = WorldlineSpec {
            kind: spec.kind.clone(),
            speed: spec.speed,
            radius: spec.radius,
            accel: spec.accel,
        };

        Ok(Scenario {
            resolved: ResolvedScenario {
                worldline: canonical,
                atom: atom_spec,
                method,
                tol,
            },
            worldline,
            atom,
            out: flags.out.clone().or(file.out),
            format,
        })
    }

    pub fn spectral(&self) -> Result<SpectralFunction, String> {
        match self.resolved.method.as_str() {
            "closed" => SpectralFunction::closed_form(self.worldline).map_err(|e| e.to_string()),
            "numeric" => Ok(SpectralFunction::numeric(self.worldline)),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}
