//! Suite configuration: defaults, the `key = value` config file format, and
//! field-level validation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Serialize;

/// Everything a verification run depends on. Identical configs produce
/// byte-identical report bodies.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    /// Bargmann index used by the single-k checks (grids, orthonormality,
    /// kernel series). Multi-k sweeps required by specific checks use their
    /// own fixed values regardless.
    pub k: f64,
    /// Fock truncation N.
    pub n_fock: usize,
    /// Ladder truncation M.
    pub m_ladder: usize,
    /// Gauss-Hermite points per z half-axis.
    pub n_z: usize,
    /// Radial Gauss-Jacobi points.
    pub n_r: usize,
    /// Uniform angular points.
    pub n_theta: usize,
    /// Seed for every randomized check (each check derives its own stream).
    pub seed: u64,
    /// Optional override of per-check sample counts.
    pub samples: Option<usize>,
    /// Optional per-suite tolerance overrides (keys `tol_algebra`,
    /// `tol_special`, `tol_kernel`, `tol_measure`, `tol_group`,
    /// `tol_states`); replaces the default tolerance of every inexact check
    /// in that suite.
    pub tol_overrides: BTreeMap<String, f64>,
    /// Report output path.
    pub out: String,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            k: 1.0,
            n_fock: 60,
            m_ladder: 60,
            n_z: 12,
            n_r: 24,
            n_theta: 24,
            seed: 42,
            samples: None,
            tol_overrides: BTreeMap::new(),
            out: "jacobi-report.json".to_string(),
        }
    }
}

#[derive(Debug)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config field `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError {
        field: field.to_string(),
        message: message.into(),
    }
}

const TOL_KEYS: [&str; 6] = [
    "tol_algebra",
    "tol_special",
    "tol_kernel",
    "tol_measure",
    "tol_group",
    "tol_states",
];

impl SuiteConfig {
    /// Parse the `key = value` config format: one assignment per line,
    /// `#` starts a comment, every field optional.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(
                    &format!("line {}", lineno + 1),
                    format!("expected `key = value`, got `{line}`"),
                ));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |field: &str| -> Result<f64, ConfigError> {
                value
                    .parse::<f64>()
                    .map_err(|_| err(field, format!("`{value}` is not a number")))
            };
            let parse_usize = |field: &str| -> Result<usize, ConfigError> {
                value
                    .parse::<usize>()
                    .map_err(|_| err(field, format!("`{value}` is not a nonnegative integer")))
            };
            match key {
                "k" => cfg.k = parse_f64("k")?,
                "n_fock" => cfg.n_fock = parse_usize("n_fock")?,
                "m_ladder" => cfg.m_ladder = parse_usize("m_ladder")?,
                "n_z" => cfg.n_z = parse_usize("n_z")?,
                "n_r" => cfg.n_r = parse_usize("n_r")?,
                "n_theta" => cfg.n_theta = parse_usize("n_theta")?,
                "seed" => {
                    cfg.seed = value
                        .parse::<u64>()
                        .map_err(|_| err("seed", format!("`{value}` is not a u64")))?
                }
                "samples" => cfg.samples = Some(parse_usize("samples")?),
                "out" => cfg.out = value.to_string(),
                _ if TOL_KEYS.contains(&key) => {
                    let v = parse_f64(key)?;
                    cfg.tol_overrides.insert(key.to_string(), v);
                }
                _ => {
                    return Err(err(key, "unknown configuration key"));
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err("config", format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(err("k", "must be a positive finite number"));
        }
        if self.n_fock < 2 || self.m_ladder < 2 {
            return Err(err("n_fock/m_ladder", "truncations must be at least 2"));
        }
        if self.n_z < 2 || self.n_r < 2 || self.n_theta < 2 {
            return Err(err("n_z/n_r/n_theta", "quadrature orders must be at least 2"));
        }
        if let Some(s) = self.samples {
            if s == 0 {
                return Err(err("samples", "must be positive when given"));
            }
        }
        for (key, &v) in &self.tol_overrides {
            if !(v > 0.0 && v.is_finite()) {
                return Err(err(key, "tolerance overrides must be positive"));
            }
        }
        Ok(())
    }

    /// Per-check sample count: the override if present, otherwise the
    /// check's own default.
    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    /// Tolerance for a check in `suite` with default `default`; exact
    /// checks (default 0) are never overridden.
    pub fn tol(&self, suite: &str, default: f64) -> f64 {
        if default == 0.0 {
            return 0.0;
        }
        self.tol_overrides
            .get(&format!("tol_{suite}"))
            .copied()
            .unwrap_or(default)
    }
}
