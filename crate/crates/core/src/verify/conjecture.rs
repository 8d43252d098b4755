//! Time-budgeted exploration of the open question whether the wreath density
//! always equals the inner density. This module reports what it measured and
//! flags disagreements; it never turns the question into an assertion.

use super::corpus;
use super::Config;
use crate::clique;
use crate::error::{Error, Result};
use crate::graph::derangement_graph;
use crate::product::wreath_product;
use crate::rational::Rational;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub inner: String,
    pub outer: String,
    pub order: usize,
    pub outer_has_ekr: bool,
    pub inner_density: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wreath_density: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub budget_secs: u64,
    pub elapsed_ms: u64,
    /// Pairs whose wreath product exceeds the graph cap and were never
    /// candidates at this scale.
    pub out_of_reach: usize,
    pub rows: Vec<Row>,
    /// Disagreements between the wreath density and the inner density. An
    /// entry here is a lead to examine, not a verdict.
    pub findings: Vec<String>,
}

/// Walks corpus pairs in order of wreath size until the time budget runs out,
/// measuring the wreath density exactly where the solver allows.
pub fn explore(budget_secs: u64, cfg: &Config) -> Result<Report> {
    let c = corpus::standard();
    let start = Instant::now();
    let mut candidates: Vec<(usize, &corpus::Entry, &corpus::Entry)> = Vec::new();
    let mut out_of_reach = 0usize;
    for g in &c.entries {
        for h in &c.entries {
            let mut order = Some(h.order());
            for _ in 0..h.degree() {
                order = order.and_then(|o| o.checked_mul(g.order()));
            }
            match order {
                Some(o) if o <= cfg.graph_cap => candidates.push((o, g, h)),
                _ => out_of_reach += 1,
            }
        }
    }
    candidates.sort_by_key(|(o, g, h)| (*o, g.key, h.key));

    let mut rows = Vec::new();
    let mut findings = Vec::new();
    for (order, g, h) in candidates {
        let mut row = Row {
            inner: g.key.to_string(),
            outer: h.key.to_string(),
            order,
            outer_has_ekr: h.ekr,
            inner_density: g.rho.to_string(),
            wreath_density: None,
            agrees: None,
            note: None,
        };
        if start.elapsed().as_secs() >= budget_secs {
            row.note = Some("time budget exhausted before this pair".to_string());
            rows.push(row);
            continue;
        }
        let w = wreath_product(&g.action, &h.action, cfg.element_cap)?;
        let graph = derangement_graph(&w, cfg.graph_cap)?;
        match clique::independence_number(&graph, cfg.solver_budget) {
            Ok(alpha) => {
                let rho = Rational::new((alpha * w.degree()) as i64, w.order() as i64);
                let agrees = rho == g.rho;
                row.wreath_density = Some(rho.to_string());
                row.agrees = Some(agrees);
                if !agrees {
                    findings.push(format!(
                        "{} wr {}: wreath density {rho} differs from inner density {}",
                        g.key, h.key, g.rho
                    ));
                }
            }
            Err(Error::Budget { budget, .. }) => {
                row.note = Some(format!(
                    "independence solve on {order} vertices exceeded the {budget}-node budget"
                ));
            }
            Err(e) => return Err(e),
        }
        rows.push(row);
    }
    Ok(Report {
        budget_secs,
        elapsed_ms: start.elapsed().as_millis() as u64,
        out_of_reach,
        rows,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget_attempts_nothing() {
        let report = explore(0, &Config::default()).unwrap();
        assert!(report.rows.iter().all(|r| r.wreath_density.is_none()));
        assert!(report.findings.is_empty());
    }
}
