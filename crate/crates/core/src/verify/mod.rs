//! Named verification suites with reproducible configuration and
//! machine-readable reports.
//!
//! Every suite is a pure function from a [`SuiteConfig`] to a list of check
//! records; `run_suite` dispatches by name, runs the member suites of `all`
//! on a worker pool, and returns the records sorted by name so the report
//! bytes depend only on `(config, seed)`.

pub mod config;
pub mod oracles;
pub mod report;
mod suites;

use rayon::prelude::*;

use crate::error::{Result, VqError};

pub use config::{OutputFormat, SuiteConfig, MC_SIGMA, SUITES, TOL_OPERATOR, TOL_ROOTS, TOL_TOWER};
pub use report::{derive_seed, CheckRecord, CheckStatus, VerificationReport};

fn suite_checks(name: &str, cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    match name {
        "exact-arith" => suites::exact_arith::checks(cfg),
        "combinatorics" => suites::combinatorics::checks(cfg),
        "multiboson" => suites::multiboson::checks(cfg),
        "laughlin" => suites::laughlin::checks(cfg),
        "characters" => suites::characters::checks(cfg),
        "realizations" => suites::realizations::checks(cfg),
        other => Err(VqError::Config(format!("unknown suite '{other}'"))),
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut report = VerificationReport::new(&cfg.suite, cfg.seed, cfg.echo());
    if cfg.suite == "all" {
        let results: Vec<Result<Vec<CheckRecord>>> = SUITES
            .par_iter()
            .map(|name| suite_checks(name, cfg))
            .collect();
        for r in results {
            report.checks.extend(r?);
        }
    } else {
        report.checks = suite_checks(&cfg.suite, cfg)?;
    }
    report.sort_checks();
    Ok(report)
}
