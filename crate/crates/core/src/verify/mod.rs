//! Seeded random generation and executable identity suites.
//!
//! Every trial derives its own seed from the suite seed and trial index,
//! so trials are independent, can run on any number of threads, and any
//! failure can be replayed in isolation with [`replay`].

mod gen;
mod suites;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::contact::{ContactError, DarbouxModel};

pub use gen::{derive_seed, GenConfig, Generator};
pub use suites::{find_suite, SuiteInfo, TrialError, SUITES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid generator config: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Contact(#[from] ContactError),
}

impl VerifyError {
    pub fn name(&self) -> &'static str {
        match self {
            VerifyError::UnknownSuite(_) => "UnknownSuite",
            VerifyError::InvalidConfig(_) => "InvalidConfig",
            VerifyError::Contact(e) => e.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrialStatus {
    Pass,
    Fail,
}

/// One line of the machine-readable trial log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub suite: String,
    pub trial: u64,
    pub status: TrialStatus,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub trials: u64,
    /// Records in trial order.
    pub records: Vec<TrialRecord>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records
            .iter()
            .filter(|r| r.status == TrialStatus::Fail)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }
}

/// How trials are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon thread pool when the `parallel` feature is enabled,
    /// otherwise falls back to sequential execution.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Runs one trial of `suite` with generator config `cfg` (whose seed is
/// the trial seed).
pub fn replay(suite: &str, cfg: &GenConfig) -> Result<Result<(), TrialError>, VerifyError> {
    let info = find_suite(suite).ok_or_else(|| VerifyError::UnknownSuite(suite.to_string()))?;
    cfg.validate()?;
    let model = DarbouxModel::new(cfg.n)?;
    Ok((info.check)(&model, &mut Generator::new(cfg.clone())))
}

pub fn run_suite(suite: &str, cfg: &GenConfig, trials: u64) -> Result<SuiteReport, VerifyError> {
    run_suite_with(suite, cfg, trials, Execution::default())
}

pub fn run_suite_with(
    suite: &str,
    cfg: &GenConfig,
    trials: u64,
    exec: Execution,
) -> Result<SuiteReport, VerifyError> {
    let info = find_suite(suite).ok_or_else(|| VerifyError::UnknownSuite(suite.to_string()))?;
    cfg.validate()?;
    let model = DarbouxModel::new(cfg.n)?;
    let start = Instant::now();

    let run_one = |trial: u64| {
        let seed = derive_seed(cfg.seed, trial);
        let mut gen = Generator::new(cfg.with_seed(seed));
        let outcome = (info.check)(&model, &mut gen);
        TrialRecord {
            suite: info.id.to_string(),
            trial,
            status: if outcome.is_ok() {
                TrialStatus::Pass
            } else {
                TrialStatus::Fail
            },
            seed,
            detail: outcome.err().map(|e| e.to_string()),
        }
    };

    let records: Vec<TrialRecord> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..trials).into_par_iter().map(run_one).collect()
        }
        _ => (0..trials).map(run_one).collect(),
    };

    Ok(SuiteReport {
        suite: info.id.to_string(),
        n: cfg.n,
        trials,
        records,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        let cfg = GenConfig::new(1, 1);
        assert_eq!(
            run_suite("nope", &cfg, 1).unwrap_err(),
            VerifyError::UnknownSuite("nope".into())
        );
    }

    #[test]
    fn invalid_config() {
        let cfg = GenConfig::new(1, 0);
        assert!(matches!(
            run_suite("jacobi", &cfg, 1),
            Err(VerifyError::InvalidConfig(_))
        ));
    }

    #[test]
    fn jacobi_seed7_n1() {
        let report = run_suite("jacobi", &GenConfig::new(7, 1), 50).unwrap();
        assert_eq!(report.trials, 50);
        assert_eq!(report.records.len(), 50);
        assert!(report.passed());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let cfg = GenConfig::new(3, 2);
        let a = run_suite_with("trace", &cfg, 12, Execution::Sequential).unwrap();
        let b = run_suite_with("trace", &cfg, 12, Execution::Parallel).unwrap();
        assert_eq!(a.records, b.records);
    }

    #[test]
    fn replay_reproduces_trial() {
        let cfg = GenConfig::new(5, 1);
        let report = run_suite("homomorphism", &cfg, 3).unwrap();
        for r in &report.records {
            assert_eq!(
                replay("homomorphism", &cfg.with_seed(r.seed)).unwrap(),
                Ok(())
            );
        }
    }

    #[test]
    fn pairing_gram_n2() {
        let report = run_suite("pairing-sympl", &GenConfig::new(1, 2), 5).unwrap();
        assert!(report.passed());
    }
}
