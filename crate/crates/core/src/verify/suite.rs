//! Suite runner: every registered identity at its smoke or full parameter
//! grid, with deterministic seeding and id-sorted reports.

use super::registry::{registry_entries, run_check_opts, CheckParams};
use super::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteLevel {
    /// Minimal parameters for every identity; quick sanity pass.
    Smoke,
    /// The full verification grid.
    Full,
}

impl SuiteLevel {
    pub fn parse(s: &str) -> Option<SuiteLevel> {
        match s {
            "smoke" => Some(SuiteLevel::Smoke),
            "full" => Some(SuiteLevel::Full),
            _ => None,
        }
    }
}

/// Run the whole registry. Individual failures are recorded and the suite
/// continues. Reports come back sorted by id and parameters, independent of
/// execution order; randomized checks derive their streams from `seed`.
pub fn run_suite(level: SuiteLevel, seed: u64) -> Vec<VerificationReport> {
    run_suite_with(level, seed, None)
}

/// As [`run_suite`], optionally running one check under its negative-control
/// mutation (verifier self-test).
pub fn run_suite_with(
    level: SuiteLevel,
    seed: u64,
    tamper: Option<&str>,
) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for entry in registry_entries() {
        let grid: Vec<CheckParams> = match level {
            SuiteLevel::Smoke => vec![entry.smoke_params()],
            SuiteLevel::Full => entry.full_params(),
        };
        for mut params in grid {
            if entry.uses_seed() {
                params.seed = Some(seed);
            }
            let negative = tamper == Some(entry.id);
            match run_check_opts(entry.id, &params, negative) {
                Ok(report) => reports.push(report),
                Err(e) => unreachable!(
                    "registry grids stay within their own bounds: {} failed with {e}",
                    entry.id
                ),
            }
        }
    }
    reports.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_levels_parse() {
        assert_eq!(SuiteLevel::parse("smoke"), Some(SuiteLevel::Smoke));
        assert_eq!(SuiteLevel::parse("full"), Some(SuiteLevel::Full));
        assert_eq!(SuiteLevel::parse("other"), None);
    }
}
