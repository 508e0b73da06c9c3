//! Suite configuration: parameter grids, tolerances, seeds.

use std::collections::BTreeMap;

use crate::error::{Result, VqError};

/// Default operator-identity tolerance.
pub const TOL_OPERATOR: f64 = 1e-8;
/// Tolerance for the roots-of-unity residue identity.
pub const TOL_ROOTS: f64 = 1e-12;
/// Tolerance for the tower composition law.
pub const TOL_TOWER: f64 = 1e-12;
/// Monte Carlo acceptance band in standard errors.
pub const MC_SIGMA: f64 = 3.0;

pub const SUITES: &[&str] = &[
    "exact-arith",
    "combinatorics",
    "multiboson",
    "laughlin",
    "characters",
    "realizations",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl std::str::FromStr for OutputFormat {
    type Err = VqError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            other => Err(VqError::Config(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// One of [`SUITES`] or `all`.
    pub suite: String,
    /// Inclusive ladder/model order range.
    pub k_range: (u32, u32),
    /// Inclusive sweep for the floor-formula argument.
    pub n_range: (u64, u64),
    /// Coherent amplitudes for the codeword checks.
    pub beta: Vec<f64>,
    /// Series truncation depth beyond the leading exponent.
    pub order: u32,
    /// Monte Carlo sample count.
    pub samples: u64,
    /// Master seed; per-check seeds derive from it and the check name.
    pub seed: u64,
    /// Operator-identity tolerance.
    pub tol: f64,
    /// Mode window for the realization checks.
    pub mode_window: i64,
}

impl SuiteConfig {
    pub fn new(suite: &str) -> Self {
        SuiteConfig {
            suite: suite.to_string(),
            k_range: (2, 4),
            n_range: (0, 300),
            beta: vec![1.0],
            order: 60,
            samples: 100_000,
            seed: 42,
            tol: TOL_OPERATOR,
            mode_window: 12,
        }
    }

    /// Rejects grids outside the desk-scale bounds the modules declare.
    pub fn validate(&self) -> Result<()> {
        if self.suite != "all" && !SUITES.contains(&self.suite.as_str()) {
            return Err(VqError::Config(format!(
                "unknown suite '{}'; expected one of {} or all",
                self.suite,
                SUITES.join(", ")
            )));
        }
        let (klo, khi) = self.k_range;
        if klo < 2 || khi < klo || khi > 8 {
            return Err(VqError::Config(format!(
                "k range {klo}..{khi} outside 2..8"
            )));
        }
        if self.n_range.1 < self.n_range.0 || self.n_range.1 > 5000 {
            return Err(VqError::Config(format!(
                "n range {}..{} invalid",
                self.n_range.0, self.n_range.1
            )));
        }
        if self.order == 0 || self.order > 140 {
            return Err(VqError::Config(format!("order {} outside 1..140", self.order)));
        }
        if self.samples < 10_000 {
            return Err(VqError::Config(format!(
                "sample count {} below 10^4",
                self.samples
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(VqError::Config(format!("tolerance {} not positive", self.tol)));
        }
        if self.mode_window < 12 || self.mode_window > 64 {
            return Err(VqError::Config(format!(
                "mode window {} outside 12..64",
                self.mode_window
            )));
        }
        if self.beta.is_empty() || self.beta.iter().any(|b| !b.is_finite() || b.abs() > 4.0) {
            return Err(VqError::Config(
                "beta values must be finite with |beta| <= 4".into(),
            ));
        }
        Ok(())
    }

    /// The configuration echo embedded in every report.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("suite".into(), self.suite.clone());
        m.insert("k".into(), format!("{}..{}", self.k_range.0, self.k_range.1));
        m.insert("n-range".into(), format!("{}..{}", self.n_range.0, self.n_range.1));
        m.insert(
            "beta".into(),
            self.beta.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","),
        );
        m.insert("order".into(), self.order.to_string());
        m.insert("samples".into(), self.samples.to_string());
        m.insert("tol".into(), format!("{:e}", self.tol));
        m.insert("mode-window".into(), self.mode_window.to_string());
        m
    }

    /// Ladder orders this configuration sweeps, clamped to a module bound.
    pub fn ks(&self, max: u32) -> Vec<u32> {
        (self.k_range.0..=self.k_range.1.min(max)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for s in SUITES {
            SuiteConfig::new(s).validate().unwrap();
        }
        SuiteConfig::new("all").validate().unwrap();
    }

    #[test]
    fn bad_configs_rejected() {
        let mut c = SuiteConfig::new("nonesuch");
        assert!(c.validate().is_err());
        c = SuiteConfig::new("all");
        c.k_range = (1, 3);
        assert!(c.validate().is_err());
        c = SuiteConfig::new("all");
        c.samples = 10;
        assert!(c.validate().is_err());
        c = SuiteConfig::new("all");
        c.order = 0;
        assert!(c.validate().is_err());
    }
}
