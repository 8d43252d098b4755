//! The verification suite: one check per claim, each run over concrete
//! instances with recorded witnesses.
//!
//! A check never asserts anything it did not compute in this process; where
//! an instance is out of desk-scale reach it is recorded as a skip with the
//! reason, not silently dropped. Checks are independent and may run in
//! parallel; the report is assembled in registry order, so its content does
//! not depend on the thread count.

use crate::clique;
use crate::error::Result;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

pub mod conjecture;
pub mod corpus;
mod direct;
mod primitive;
mod toolbox;
mod wreath;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub input: String,
    pub status: Status,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Instance {
    pub fn pass(input: impl Into<String>, outcome: impl Into<String>) -> Instance {
        Instance {
            input: input.into(),
            status: Status::Pass,
            outcome: outcome.into(),
            witness: None,
        }
    }

    pub fn fail(input: impl Into<String>, outcome: impl Into<String>) -> Instance {
        Instance {
            input: input.into(),
            status: Status::Fail,
            outcome: outcome.into(),
            witness: None,
        }
    }

    pub fn skip(input: impl Into<String>, reason: impl Into<String>) -> Instance {
        Instance {
            input: input.into(),
            status: Status::Skip,
            outcome: reason.into(),
            witness: None,
        }
    }

    pub fn check(
        input: impl Into<String>,
        ok: bool,
        outcome: impl Into<String>,
    ) -> Instance {
        let status = if ok { Status::Pass } else { Status::Fail };
        Instance {
            input: input.into(),
            status,
            outcome: outcome.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Instance {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub statement_ref: String,
    pub status: Status,
    pub instances: Vec<Instance>,
    pub runtime_ms: u64,
}

/// Knobs shared by every check. The seed steers random sampling only; no
/// verdict may depend on it.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub element_cap: usize,
    pub graph_cap: usize,
    pub mis_cap: usize,
    pub solver_budget: u64,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            element_cap: crate::action::DEFAULT_ELEMENT_CAP,
            graph_cap: crate::graph::DEFAULT_GRAPH_CAP,
            mis_cap: clique::DEFAULT_MIS_CAP,
            solver_budget: clique::DEFAULT_SOLVER_BUDGET,
            seed: 7,
        }
    }
}

/// Probe budget for solver attempts on graphs of `ATTEMPT_VERTICES` or more.
/// Instances that structure makes easy still decide well inside it; the ones
/// beyond desk scale reach their budget skip without burning the full default
/// budget first.
pub(crate) const ATTEMPT_BUDGET: u64 = 2_000_000;
pub(crate) const ATTEMPT_VERTICES: usize = 200;

pub(crate) fn scaled_budget(vertices: usize, budget: u64) -> u64 {
    if vertices >= ATTEMPT_VERTICES {
        budget.min(ATTEMPT_BUDGET)
    } else {
        budget
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Verifies a claim of the underlying mathematics.
    Claim,
    /// Validates the harness itself (solver cross-checks and the like).
    Infrastructure,
}

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    run: fn(&Config) -> Result<Vec<Instance>>,
}

/// Every check in canonical report order.
pub fn registry() -> Vec<CheckDef> {
    let mut defs = Vec::new();
    toolbox::register(&mut defs);
    direct::register(&mut defs);
    primitive::register(&mut defs);
    wreath::register(&mut defs);
    defs
}

fn aggregate(instances: &[Instance]) -> Status {
    if instances.iter().any(|i| i.status == Status::Fail) {
        Status::Fail
    } else if !instances.is_empty() && instances.iter().all(|i| i.status == Status::Skip) {
        Status::Skip
    } else {
        Status::Pass
    }
}

pub fn run_check(def: &CheckDef, cfg: &Config) -> CheckResult {
    let start = Instant::now();
    let instances = match (def.run)(cfg) {
        Ok(instances) => instances,
        // An error inside a check is a harness failure, reported as such
        // rather than panicking the whole suite.
        Err(e) => vec![Instance::fail("harness", format!("check aborted: {e}"))],
    };
    CheckResult {
        check_id: def.id.to_string(),
        statement_ref: def.statement.to_string(),
        status: aggregate(&instances),
        instances,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<CheckResult>,
}

/// Runs the named checks (all of them when `ids` is empty) and assembles the
/// report in registry order regardless of execution interleaving.
pub fn run_suite(ids: &[String], cfg: &Config) -> Result<SuiteReport> {
    let defs = registry();
    if !ids.is_empty() {
        let known: Vec<&str> = defs.iter().map(|d| d.id).collect();
        for id in ids {
            if !known.contains(&id.as_str()) {
                return Err(crate::error::Error::Spec(format!(
                    "unknown check id \"{id}\"; known ids: {}",
                    known.join(", ")
                )));
            }
        }
    }
    let selected: Vec<&CheckDef> = defs
        .iter()
        .filter(|d| ids.is_empty() || ids.iter().any(|i| i == d.id))
        .collect();
    let checks: Vec<CheckResult> = selected
        .par_iter()
        .map(|def| run_check(def, cfg))
        .collect();
    Ok(SuiteReport {
        suite: selected.iter().map(|d| d.id.to_string()).collect(),
        passed: checks.iter().filter(|c| c.status == Status::Pass).count(),
        failed: checks.iter().filter(|c| c.status == Status::Fail).count(),
        skipped: checks.iter().filter(|c| c.status == Status::Skip).count(),
        checks,
    })
}

impl SuiteReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_id,status,instances,failed_instances,runtime_ms\n");
        for c in &self.checks {
            let failed = c
                .instances
                .iter()
                .filter(|i| i.status == Status::Fail)
                .count();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.check_id,
                match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skip => "skip",
                },
                c.instances.len(),
                failed,
                c.runtime_ms
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The claims the suite is contracted to cover, one check each.
    const EXPECTED_CLAIMS: &[&str] = &[
        "sec1-examples",
        "lem-2.1",
        "lem-2.3",
        "lem-2.4",
        "lem-2.5",
        "lem-2.6",
        "lem-2.7",
        "ext-action",
        "thm-3.1",
        "cor-3.2",
        "cor-3.3",
        "thm-3.4",
        "thm-3.6",
        "int-action",
        "lem-3.8",
        "is-primitive-regular",
        "lem-3.10",
        "lem-3.11",
        "wreath-formulas",
        "lem-4.1",
        "lem-4.2",
        "prop-4.3",
        "prop-4.4",
        "cor-4.5",
        "prop-4.8",
        "cor-4.9",
        "prop-4.10",
        "lem-4.11",
        "lem-4.12",
        "prop-4.13",
        "mrs21-background",
    ];

    #[test]
    fn suite_covers_every_claim_exactly_once() {
        let defs = registry();
        let claim_ids: Vec<&str> = defs
            .iter()
            .filter(|d| d.kind == Kind::Claim)
            .map(|d| d.id)
            .collect();
        for id in EXPECTED_CLAIMS {
            let count = claim_ids.iter().filter(|c| *c == id).count();
            assert_eq!(count, 1, "claim {id} should appear exactly once");
        }
        assert_eq!(
            claim_ids.len(),
            EXPECTED_CLAIMS.len(),
            "unexpected extra claim checks: {claim_ids:?}"
        );
        let mut all_ids: Vec<&str> = defs.iter().map(|d| d.id).collect();
        all_ids.sort_unstable();
        all_ids.dedup();
        assert_eq!(all_ids.len(), defs.len(), "duplicate check ids");
    }

    #[test]
    fn statuses_aggregate_with_fail_dominant() {
        let pass = Instance::pass("a", "ok");
        let fail = Instance::fail("b", "bad");
        let skip = Instance::skip("c", "too big");
        assert_eq!(aggregate(&[pass.clone(), skip.clone()]), Status::Pass);
        assert_eq!(aggregate(&[pass.clone(), fail.clone()]), Status::Fail);
        assert_eq!(aggregate(&[skip.clone(), skip.clone()]), Status::Skip);
        assert_eq!(aggregate(&[]), Status::Pass);
        assert_eq!(aggregate(&[fail, skip, pass]), Status::Fail);
    }

    #[test]
    fn unknown_check_id_is_rejected() {
        let err = run_suite(&["no-such-check".into()], &Config::default());
        assert!(err.is_err());
    }
}
