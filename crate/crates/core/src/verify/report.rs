//! Machine-readable outcomes of identity checks.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Symbolic,
    Randomized,
    Series,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Engine::Symbolic => write!(f, "symbolic"),
            Engine::Randomized => write!(f, "randomized"),
            Engine::Series => write!(f, "series"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Skipped => write!(f, "skipped"),
        }
    }
}

/// Counterexample data carried by every failing report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A rational evaluation point where the two sides differ.
    Point {
        assignment: BTreeMap<String, String>,
        lhs: String,
        rhs: String,
    },
    /// First mismatching monomial of a symbolic or series comparison.
    Term {
        monomial: String,
        lhs_coefficient: String,
        rhs_coefficient: String,
    },
    /// A power-sum index with an even part whose coefficient failed to vanish.
    EvenCoefficient { mu: String, coefficient: String },
    /// Anything else worth reporting verbatim.
    Message { detail: String },
}

/// One record per executed check. Serialization is deterministic: parameters
/// are kept sorted, and callers serialize [`VerificationReport::normalized`]
/// (timing zeroed) when byte-stable output is required.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub engine: Engine,
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Copy with the timing field zeroed, for byte-stable serialized reports.
    pub fn normalized(&self) -> VerificationReport {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    /// One-line human rendering.
    pub fn human_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{:<22} [{}] {:<30} {}  ({} ms)",
            self.id,
            self.engine,
            params.join(" "),
            self.status,
            self.elapsed_ms
        );
        if let Some(w) = &self.witness {
            match w {
                Witness::Point { lhs, rhs, .. } => {
                    line.push_str(&format!("  witness: lhs={lhs} rhs={rhs}"))
                }
                Witness::Term {
                    monomial,
                    lhs_coefficient,
                    rhs_coefficient,
                } => line.push_str(&format!(
                    "  witness: [{monomial}] lhs={lhs_coefficient} rhs={rhs_coefficient}"
                )),
                Witness::EvenCoefficient { mu, coefficient } => {
                    line.push_str(&format!("  witness: p_({mu}) coefficient {coefficient}"))
                }
                Witness::Message { detail } => line.push_str(&format!("  witness: {detail}")),
            }
        }
        line
    }
}

/// Outcome of a check body before it is wrapped into a timed report.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome {
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckOutcome {
            status: Status::Fail,
            witness: Some(witness),
        }
    }
}
