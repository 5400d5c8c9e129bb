//! The identity registry: one named, parameterized check per verified result,
//! with per-check parameter bounds and the smoke/full parameter grids.

use super::checks;
use super::report::{CheckOutcome, Engine, VerificationReport};
use super::VerifyError;
use std::collections::BTreeMap;
use std::time::Instant;

/// Parameters accepted by checks. Unset fields take per-check defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckParams {
    /// Identity index `n` (Pfaffians have dimension `2n`).
    pub n: Option<u32>,
    /// Column count `N` of the rectangular matrix in the minor summation.
    pub big_n: Option<u32>,
    /// Series cap / membership degree `D`.
    pub degree: Option<u32>,
    /// Number of evaluation points for the randomized engine.
    pub trials: Option<u32>,
    /// Randomized-engine seed.
    pub seed: Option<u64>,
    /// Bound on the partition size for per-shape checks.
    pub max_size: Option<u32>,
    /// Retained power of the parameter `q`.
    pub q_order: Option<u32>,
}

impl CheckParams {
    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_big_n(mut self, v: u32) -> Self {
        self.big_n = Some(v);
        self
    }

    pub fn with_degree(mut self, v: u32) -> Self {
        self.degree = Some(v);
        self
    }

    pub fn with_trials(mut self, v: u32) -> Self {
        self.trials = Some(v);
        self
    }

    pub fn with_seed(mut self, v: u64) -> Self {
        self.seed = Some(v);
        self
    }

    pub fn with_max_size(mut self, v: u32) -> Self {
        self.max_size = Some(v);
        self
    }

    pub fn with_q_order(mut self, v: u32) -> Self {
        self.q_order = Some(v);
        self
    }

    fn merge_defaults(&self, d: &CheckParams) -> CheckParams {
        CheckParams {
            n: self.n.or(d.n),
            big_n: self.big_n.or(d.big_n),
            degree: self.degree.or(d.degree),
            trials: self.trials.or(d.trials),
            seed: self.seed.or(d.seed),
            max_size: self.max_size.or(d.max_size),
            q_order: self.q_order.or(d.q_order),
        }
    }

    pub fn to_map(&self) -> BTreeMap<String, u64> {
        let mut m = BTreeMap::new();
        if let Some(v) = self.n {
            m.insert("n".into(), v as u64);
        }
        if let Some(v) = self.big_n {
            m.insert("N".into(), v as u64);
        }
        if let Some(v) = self.degree {
            m.insert("degree".into(), v as u64);
        }
        if let Some(v) = self.trials {
            m.insert("trials".into(), v as u64);
        }
        if let Some(v) = self.seed {
            m.insert("seed".into(), v);
        }
        if let Some(v) = self.max_size {
            m.insert("max_size".into(), v as u64);
        }
        if let Some(v) = self.q_order {
            m.insert("q_order".into(), v as u64);
        }
        m
    }
}

fn p() -> CheckParams {
    CheckParams::default()
}

type Runner = fn(&CheckParams, bool) -> Result<CheckOutcome, VerifyError>;
type Bounds = fn(&CheckParams) -> Result<(), String>;

pub struct RegistryEntry {
    pub id: &'static str,
    engine: fn(&CheckParams) -> Engine,
    defaults: CheckParams,
    bounds: Bounds,
    run: Runner,
    smoke: CheckParams,
    full: Vec<CheckParams>,
}

impl RegistryEntry {
    pub fn smoke_params(&self) -> CheckParams {
        self.smoke.clone()
    }

    pub fn full_params(&self) -> Vec<CheckParams> {
        self.full.clone()
    }

    /// Whether the check consumes a randomized-engine seed.
    pub fn uses_seed(&self) -> bool {
        self.defaults.seed.is_some()
    }
}

fn range(name: &str, v: Option<u32>, lo: u32, hi: u32) -> Result<(), String> {
    match v {
        Some(x) if x >= lo && x <= hi => Ok(()),
        Some(x) => Err(format!("{name} = {x} outside [{lo}, {hi}]")),
        None => Err(format!("{name} is required")),
    }
}

fn registry_table() -> Vec<RegistryEntry> {
    vec![
        RegistryEntry {
            id: "msf",
            engine: |_| Engine::Randomized,
            defaults: p().with_n(1).with_big_n(4).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 2)?;
                range("N", c.big_n, 2, 8)?;
                if c.big_n.unwrap() < 2 * c.n.unwrap() {
                    return Err("N must be at least 2n".into());
                }
                range("trials", c.trials, 1, 100)
            },
            run: checks::msf,
            smoke: p().with_n(1).with_big_n(4).with_trials(3),
            full: vec![
                p().with_n(1).with_big_n(4).with_trials(20),
                p().with_n(2).with_big_n(6).with_trials(20),
                p().with_n(2).with_big_n(8).with_trials(20),
            ],
        },
        RegistryEntry {
            id: "product-pfaffian",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(2),
            bounds: |c| range("n", c.n, 1, 4),
            run: checks::product_pfaffian,
            smoke: p().with_n(2),
            full: (1..=4).map(|n| p().with_n(n)).collect(),
        },
        RegistryEntry {
            id: "omega-pfaffian",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(2).with_max_size(4),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("max_size", c.max_size, 0, 6)
            },
            run: checks::omega_pfaffian,
            smoke: p().with_n(1).with_max_size(3),
            full: (1..=3).map(|n| p().with_n(n).with_max_size(6)).collect(),
        },
        RegistryEntry {
            id: "case-sums",
            engine: |_| Engine::Series,
            defaults: p().with_degree(6),
            bounds: |c| range("degree", c.degree, 1, 8),
            run: checks::case_sums,
            smoke: p().with_degree(3),
            full: vec![p().with_degree(6)],
        },
        RegistryEntry {
            id: "zn-pfaffian",
            engine: |_| Engine::Series,
            defaults: p().with_n(1).with_degree(4),
            bounds: |c| {
                range("n", c.n, 1, 2)?;
                range("degree", c.degree, 1, 8)
            },
            run: checks::zn_pfaffian,
            smoke: p().with_n(1).with_degree(3),
            full: vec![p().with_n(1).with_degree(8), p().with_n(2).with_degree(4)],
        },
        RegistryEntry {
            id: "fundamental",
            engine: |c| {
                if c.n.unwrap_or(1) <= 2 {
                    Engine::Symbolic
                } else {
                    Engine::Randomized
                }
            },
            defaults: p().with_n(1).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::fundamental,
            smoke: p().with_n(1).with_trials(5),
            full: vec![
                p().with_n(1).with_trials(5),
                p().with_n(2).with_trials(5),
                p().with_n(3).with_trials(25),
            ],
        },
        RegistryEntry {
            id: "subs",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(1),
            bounds: |c| range("n", c.n, 1, 3),
            run: checks::subs,
            smoke: p().with_n(2),
            full: (1..=3).map(|n| p().with_n(n)).collect(),
        },
        RegistryEntry {
            id: "cauchy",
            engine: |c| {
                if c.n.unwrap_or(1) <= 2 {
                    Engine::Symbolic
                } else {
                    Engine::Randomized
                }
            },
            defaults: p().with_n(1).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::cauchy,
            smoke: p().with_n(1).with_trials(5),
            full: vec![
                p().with_n(1).with_trials(5),
                p().with_n(2).with_trials(5),
                p().with_n(3).with_trials(25),
            ],
        },
        RegistryEntry {
            id: "det-exp",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(2),
            bounds: |c| range("n", c.n, 1, 3),
            run: checks::det_exp,
            smoke: p().with_n(2),
            full: (1..=3).map(|n| p().with_n(n)).collect(),
        },
        RegistryEntry {
            id: "laplace",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(2),
            bounds: |c| range("n", c.n, 1, 4),
            run: checks::laplace,
            smoke: p().with_n(2),
            full: (1..=3).map(|n| p().with_n(n)).collect(),
        },
        RegistryEntry {
            id: "sundquist-1",
            engine: |_| Engine::Randomized,
            defaults: p().with_n(2).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::sundquist_1,
            smoke: p().with_n(2).with_trials(5),
            full: (1..=3).map(|n| p().with_n(n).with_trials(25)).collect(),
        },
        RegistryEntry {
            id: "sundquist-2",
            engine: |_| Engine::Randomized,
            defaults: p().with_n(2).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::sundquist_2,
            smoke: p().with_n(2).with_trials(5),
            full: (1..=3).map(|n| p().with_n(n).with_trials(25)).collect(),
        },
        RegistryEntry {
            id: "substitution-lemma",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(2),
            bounds: |c| range("n", c.n, 2, 3),
            run: checks::substitution_lemma,
            smoke: p().with_n(2),
            full: vec![p().with_n(2), p().with_n(3)],
        },
        RegistryEntry {
            id: "recurrence-lemma",
            engine: |_| Engine::Randomized,
            defaults: p().with_n(2).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 2, 3)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::recurrence_lemma,
            smoke: p().with_n(2).with_trials(5),
            full: vec![p().with_n(2).with_trials(25)],
        },
        RegistryEntry {
            id: "det-zn",
            engine: |_| Engine::Randomized,
            defaults: p().with_n(1).with_trials(10).with_seed(0),
            bounds: |c| {
                range("n", c.n, 1, 2)?;
                range("trials", c.trials, 1, 100)
            },
            run: checks::det_zn,
            smoke: p().with_n(1).with_trials(5),
            full: vec![
                p().with_n(1).with_trials(25),
                p().with_n(2).with_trials(25),
            ],
        },
        RegistryEntry {
            id: "fn-recursion",
            engine: |_| Engine::Symbolic,
            defaults: p().with_n(1),
            bounds: |c| range("n", c.n, 1, 2),
            run: checks::fn_recursion,
            smoke: p().with_n(1),
            full: vec![p().with_n(1), p().with_n(2)],
        },
        RegistryEntry {
            id: "zn-specialization",
            engine: |_| Engine::Series,
            defaults: p().with_n(1).with_degree(6),
            bounds: |c| {
                range("n", c.n, 1, 1)?;
                range("degree", c.degree, 1, 6)
            },
            run: checks::zn_specialization,
            smoke: p().with_n(1).with_degree(3),
            full: vec![p().with_n(1).with_degree(6)],
        },
        RegistryEntry {
            id: "logz-step",
            engine: |_| Engine::Series,
            defaults: p().with_n(1).with_degree(6),
            bounds: |c| {
                range("n", c.n, 1, 1)?;
                range("degree", c.degree, 1, 6)
            },
            run: checks::logz_step,
            smoke: p().with_n(1).with_degree(3),
            full: vec![p().with_n(1).with_degree(6)],
        },
        RegistryEntry {
            id: "main-theorem",
            engine: |_| Engine::Series,
            defaults: p().with_n(2).with_degree(4),
            bounds: |c| {
                range("n", c.n, 1, 3)?;
                range("degree", c.degree, 2, 6)?;
                let d = c.degree.unwrap();
                if d % 2 != 0 {
                    return Err(format!("degree = {d} must be even"));
                }
                if 2 * c.n.unwrap() < d {
                    return Err("need 2n >= degree for the power-sum decomposition".into());
                }
                Ok(())
            },
            run: checks::main_theorem,
            smoke: p().with_n(1).with_degree(2),
            full: vec![p().with_n(2).with_degree(4), p().with_n(3).with_degree(6)],
        },
        RegistryEntry {
            id: "simple-corollary",
            engine: |_| Engine::Series,
            defaults: p().with_degree(4),
            bounds: |c| {
                range("degree", c.degree, 2, 6)?;
                if c.degree.unwrap() % 2 != 0 {
                    return Err("degree must be even".into());
                }
                Ok(())
            },
            run: checks::simple_corollary,
            // Degree 2 is vacuous (no qualifying shape), so smoke starts at 4.
            smoke: p().with_degree(4),
            full: vec![p().with_degree(4)],
        },
        RegistryEntry {
            id: "oddness-route",
            engine: |_| Engine::Series,
            defaults: p().with_n(1).with_degree(4),
            bounds: |c| {
                range("n", c.n, 1, 2)?;
                range("degree", c.degree, 1, 6)
            },
            run: checks::oddness_route,
            smoke: p().with_n(1).with_degree(2),
            full: vec![p().with_n(1).with_degree(4), p().with_n(2).with_degree(4)],
        },
        RegistryEntry {
            id: "corollary-bigschur",
            engine: |_| Engine::Series,
            defaults: p().with_degree(4),
            bounds: |c| range("degree", c.degree, 2, 4),
            run: checks::corollary_bigschur,
            smoke: p().with_degree(2),
            full: vec![p().with_degree(4)],
        },
        RegistryEntry {
            id: "corollary-macdonald",
            engine: |_| Engine::Series,
            defaults: p().with_degree(2).with_q_order(3),
            bounds: |c| {
                range("degree", c.degree, 2, 4)?;
                range("q_order", c.q_order, 1, 4)
            },
            run: checks::corollary_macdonald,
            smoke: p().with_degree(2).with_q_order(2),
            full: vec![p().with_degree(2).with_q_order(3)],
        },
    ]
}

fn registry() -> &'static [RegistryEntry] {
    use std::sync::OnceLock;
    static REGISTRY: OnceLock<Vec<RegistryEntry>> = OnceLock::new();
    REGISTRY.get_or_init(registry_table)
}

pub fn registry_ids() -> Vec<&'static str> {
    registry().iter().map(|e| e.id).collect()
}

pub(crate) fn registry_entries() -> &'static [RegistryEntry] {
    registry()
}

fn find(id: &str) -> Result<&'static RegistryEntry, VerifyError> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| VerifyError::UnknownId {
            id: id.to_string(),
            valid: registry_ids().join(", "),
        })
}

/// Run one registered check.
pub fn run_check(id: &str, params: &CheckParams) -> Result<VerificationReport, VerifyError> {
    run_check_opts(id, params, false)
}

/// As [`run_check`], with an optional mutation for verifier self-tests.
pub fn run_check_opts(
    id: &str,
    params: &CheckParams,
    negative: bool,
) -> Result<VerificationReport, VerifyError> {
    let entry = find(id)?;
    let resolved = params.merge_defaults(&entry.defaults);
    (entry.bounds)(&resolved).map_err(|detail| VerifyError::ParamOutOfBounds {
        id: id.to_string(),
        detail,
    })?;
    let start = Instant::now();
    let outcome = (entry.run)(&resolved, negative)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(VerificationReport {
        id: id.to_string(),
        engine: (entry.engine)(&resolved),
        params: resolved.to_map(),
        status: outcome.status,
        witness: outcome.witness,
        elapsed_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn unknown_id_lists_valid_ids() {
        match run_check("nosuch", &CheckParams::default()) {
            Err(VerifyError::UnknownId { valid, .. }) => {
                assert!(valid.contains("msf"));
                assert!(valid.contains("corollary-macdonald"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let out = run_check("subs", &CheckParams::default().with_n(9));
        assert!(matches!(out, Err(VerifyError::ParamOutOfBounds { .. })));
        let out = run_check("main-theorem", &CheckParams::default().with_n(1).with_degree(4));
        assert!(matches!(out, Err(VerifyError::ParamOutOfBounds { .. })));
    }

    #[test]
    fn registry_has_all_identities() {
        let ids = registry_ids();
        assert!(ids.len() >= 18, "{} ids", ids.len());
        for required in [
            "msf",
            "product-pfaffian",
            "omega-pfaffian",
            "case-sums",
            "zn-pfaffian",
            "fundamental",
            "subs",
            "cauchy",
            "det-exp",
            "laplace",
            "sundquist-1",
            "sundquist-2",
            "substitution-lemma",
            "recurrence-lemma",
            "det-zn",
            "fn-recursion",
            "zn-specialization",
            "logz-step",
        ] {
            assert!(ids.contains(&required), "missing {required}");
        }
    }

    #[test]
    fn smallest_subs_check_passes() {
        let r = run_check("subs", &CheckParams::default().with_n(1)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.params.get("n"), Some(&1));
    }
}
