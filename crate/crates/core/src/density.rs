//! Intersection density, EKR status, and the strict coset property.
//!
//! A set of group elements is intersecting when every two agree on some
//! domain point, equivalently when it is independent in the derangement
//! graph. For a transitive action the intersection density is the maximum
//! intersecting set size divided by the point stabilizer order. The strict
//! property asks that every maximum intersecting set be a coset
//! `{g : g(v) = w}`.

use crate::action::GroupAction;
use crate::clique::{self, MisEnumeration};
use crate::error::{Error, Result};
use crate::graph::{derangement_graph, Graph};
use crate::rational::Rational;
use serde::Serialize;
use std::time::Instant;

/// `alpha * degree / |G|` for a transitive action. Errors on intransitive
/// input, where stabilizer orders vary and the quotient loses its meaning.
pub fn intersection_density(
    action: &GroupAction,
    graph: &Graph,
    solver_budget: u64,
) -> Result<Rational> {
    if !action.is_transitive() {
        return Err(Error::NotTransitive {
            context: "intersection density".into(),
        });
    }
    let alpha = clique::independence_number(graph, solver_budget)?;
    Ok(Rational::new(
        (alpha * action.degree()) as i64,
        action.order() as i64,
    ))
}

/// Whether the largest intersecting set is no bigger than the largest point
/// stabilizer. The stabilizer itself is intersecting, so equality is the
/// only way this holds.
pub fn has_ekr(action: &GroupAction, graph: &Graph, solver_budget: u64) -> Result<bool> {
    let alpha = clique::independence_number(graph, solver_budget)?;
    debug_assert!(alpha >= action.max_stabilizer_order());
    Ok(alpha == action.max_stabilizer_order())
}

#[derive(Debug, Clone)]
pub struct StrictOutcome {
    /// `Some(true)`: complete enumeration, every maximum intersecting set is
    /// a coset. `Some(false)`: a non-coset one exists (sound even under
    /// truncation). `None`: enumeration truncated with only cosets seen.
    pub verdict: Option<bool>,
    pub non_coset_witness: Option<Vec<usize>>,
    pub enumeration: MisEnumeration,
}

/// Scans maximum independent sets of the derangement graph in lexicographic
/// order against the point cosets of the action.
pub fn strict_ekr(
    action: &GroupAction,
    graph: &Graph,
    mis_cap: usize,
    solver_budget: u64,
) -> Result<StrictOutcome> {
    let enumeration = clique::maximum_independent_sets(graph, mis_cap, solver_budget)?;
    let mut witness = None;
    for set in &enumeration.sets {
        if action.as_point_coset(set).is_none() {
            witness = Some(set.clone());
            break;
        }
    }
    let verdict = match (&witness, enumeration.truncated) {
        (Some(_), _) => Some(false),
        (None, false) => Some(true),
        (None, true) => None,
    };
    Ok(StrictOutcome {
        verdict,
        non_coset_witness: witness,
        enumeration,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub graph_cap: usize,
    pub mis_cap: usize,
    pub solver_budget: u64,
    pub strict: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            graph_cap: crate::graph::DEFAULT_GRAPH_CAP,
            mis_cap: clique::DEFAULT_MIS_CAP,
            solver_budget: clique::DEFAULT_SOLVER_BUDGET,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub descriptor: String,
    pub order: usize,
    pub degree: usize,
    pub transitive: bool,
    pub derangement_count: usize,
    pub alpha: usize,
    pub max_stabilizer_order: usize,
    /// Present only for transitive actions.
    pub intersection_density: Option<Rational>,
    pub ekr: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict: Option<StrictReport>,
    pub example_mis: Vec<String>,
    pub runtime_ms: u64,
}

/// Upper bound on how many maximum intersecting sets are spelled out in a
/// report; beyond it the report carries a notice instead of the list.
pub const REPORT_MIS_LIMIT: usize = 2000;

#[derive(Debug, Clone, Serialize)]
pub struct StrictReport {
    pub verdict: Option<bool>,
    pub mis_count: usize,
    pub mis_truncated: bool,
    /// Every maximum intersecting set, elements as cycle strings, when the
    /// enumeration is complete and fits under `REPORT_MIS_LIMIT`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mis_sets: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mis_notice: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_coset_witness: Option<Vec<String>>,
}

impl StrictReport {
    fn from_outcome(action: &GroupAction, outcome: &StrictOutcome) -> StrictReport {
        let e = &outcome.enumeration;
        let (mis_sets, mis_notice) = if e.truncated {
            (
                None,
                Some(format!(
                    "enumeration truncated at {} sets; the list is incomplete",
                    e.sets.len()
                )),
            )
        } else if e.sets.len() > REPORT_MIS_LIMIT {
            (
                None,
                Some(format!(
                    "{} sets enumerated in full; list elided beyond {} sets",
                    e.sets.len(),
                    REPORT_MIS_LIMIT
                )),
            )
        } else {
            (
                Some(
                    e.sets
                        .iter()
                        .map(|ids| element_labels(action, ids))
                        .collect(),
                ),
                None,
            )
        };
        StrictReport {
            verdict: outcome.verdict,
            mis_count: e.sets.len(),
            mis_truncated: e.truncated,
            mis_sets,
            mis_notice,
            non_coset_witness: outcome
                .non_coset_witness
                .as_ref()
                .map(|ids| element_labels(action, ids)),
        }
    }
}

/// Runs the full pipeline: derangement graph, independence number, density,
/// EKR, and (optionally) the strict coset scan.
pub fn analyze(
    action: &GroupAction,
    descriptor: &str,
    opts: &AnalysisOptions,
) -> Result<DensityReport> {
    let start = Instant::now();
    let graph = derangement_graph(action, opts.graph_cap)?;
    let transitive = action.is_transitive();
    let mis = clique::max_independent_set(&graph, opts.solver_budget)?;
    let alpha = mis.size;
    let max_stab = action.max_stabilizer_order();
    let rho = if transitive {
        Some(Rational::new(
            (alpha * action.degree()) as i64,
            action.order() as i64,
        ))
    } else {
        None
    };
    let strict = if opts.strict {
        let outcome = strict_ekr(action, &graph, opts.mis_cap, opts.solver_budget)?;
        Some(StrictReport::from_outcome(action, &outcome))
    } else {
        None
    };
    Ok(DensityReport {
        descriptor: descriptor.to_string(),
        order: action.order(),
        degree: action.degree(),
        transitive,
        derangement_count: action.derangement_ids().len(),
        alpha,
        max_stabilizer_order: max_stab,
        intersection_density: rho,
        ekr: alpha == max_stab,
        strict,
        example_mis: element_labels(action, &mis.witness),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn element_labels(action: &GroupAction, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| action.element(i).cycle_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP;
    use crate::builders::{alternating_natural, cyclic_regular, symmetric_natural};
    use crate::product::internal_product;

    const B: u64 = 20_000_000;

    fn graph_of(action: &GroupAction) -> Graph {
        derangement_graph(action, 5000).unwrap()
    }

    #[test]
    fn symmetric_groups_have_density_one_and_are_strict() {
        for n in 2..=4 {
            let g = symmetric_natural(n, DEFAULT_ELEMENT_CAP).unwrap();
            let gamma = graph_of(&g);
            assert_eq!(
                intersection_density(&g, &gamma, B).unwrap(),
                Rational::one(),
                "S{n}"
            );
            assert!(has_ekr(&g, &gamma, B).unwrap());
            let strict = strict_ekr(&g, &gamma, 1_000_000, B).unwrap();
            assert_eq!(strict.verdict, Some(true), "S{n}");
            // One coset per (point, image) pair, except that on two points
            // fixing one image determines the other.
            let expected = if n == 2 { 2 } else { n * n };
            assert_eq!(strict.enumeration.sets.len(), expected);
        }
    }

    #[test]
    fn alternating_four_is_ekr_but_not_strict() {
        // The derangements form the non-identity part of the normal
        // Klein subgroup, so the graph is three disjoint K4 blocks and
        // one-per-block choices give 64 maximum intersecting sets against
        // 16 cosets.
        let g = alternating_natural(4, DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = graph_of(&g);
        assert_eq!(intersection_density(&g, &gamma, B).unwrap(), Rational::one());
        let strict = strict_ekr(&g, &gamma, 1_000_000, B).unwrap();
        assert_eq!(strict.enumeration.sets.len(), 64);
        assert_eq!(strict.verdict, Some(false));
        assert!(strict.non_coset_witness.is_some());
    }

    #[test]
    fn regular_actions_have_complete_graphs_and_density_one() {
        for n in [2usize, 3, 4, 5, 6] {
            let g = cyclic_regular(n).unwrap();
            let gamma = graph_of(&g);
            assert_eq!(gamma.edge_count(), n * (n - 1) / 2);
            assert_eq!(intersection_density(&g, &gamma, B).unwrap(), Rational::one());
            let strict = strict_ekr(&g, &gamma, 1_000_000, B).unwrap();
            assert_eq!(strict.verdict, Some(true));
        }
    }

    #[test]
    fn intransitive_action_rejects_density() {
        let s2 = symmetric_natural(2, DEFAULT_ELEMENT_CAP).unwrap();
        let g = internal_product(&[&s2, &s2], DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = graph_of(&g);
        assert!(matches!(
            intersection_density(&g, &gamma, B),
            Err(Error::NotTransitive { .. })
        ));
        assert!(has_ekr(&g, &gamma, B).unwrap());
    }

    #[test]
    fn internal_square_of_s2_is_strict_but_cube_is_not() {
        let s2 = symmetric_natural(2, DEFAULT_ELEMENT_CAP).unwrap();
        let square = internal_product(&[&s2, &s2], DEFAULT_ELEMENT_CAP).unwrap();
        let strict2 = strict_ekr(&square, &graph_of(&square), 1_000_000, B).unwrap();
        assert_eq!(strict2.verdict, Some(true));
        assert_eq!(strict2.enumeration.sets.len(), 4);

        // In the cube, sets like {000, 001, 010, 100} in coordinate notation
        // are maximum intersecting without fixing any point's image.
        let cube = internal_product(&[&s2, &s2, &s2], DEFAULT_ELEMENT_CAP).unwrap();
        let strict3 = strict_ekr(&cube, &graph_of(&cube), 1_000_000, B).unwrap();
        assert_eq!(strict3.verdict, Some(false));
        assert_eq!(strict3.enumeration.alpha, 4);
    }

    #[test]
    fn truncated_all_coset_scan_is_inconclusive() {
        let g = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let strict = strict_ekr(&g, &graph_of(&g), 4, B).unwrap();
        assert!(strict.enumeration.truncated);
        assert_eq!(strict.verdict, None);
    }

    #[test]
    fn report_serializes_with_expected_fields() {
        let g = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let opts = AnalysisOptions {
            strict: true,
            ..AnalysisOptions::default()
        };
        let report = analyze(&g, "S3", &opts).unwrap();
        assert_eq!(report.alpha, 2);
        assert_eq!(report.derangement_count, 2);
        assert_eq!(report.intersection_density, Some(Rational::one()));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["descriptor"], "S3");
        assert_eq!(json["intersection_density"], "1");
        assert_eq!(json["strict"]["verdict"], true);
        assert_eq!(json["strict"]["mis_count"], 9);
        // Complete and small, so the full list is spelled out: nine cosets,
        // each of two elements.
        assert_eq!(json["strict"]["mis_sets"].as_array().unwrap().len(), 9);
        assert!(json["strict"]["mis_notice"].is_null());
        // The lex-least maximum intersecting set starts at the identity.
        assert_eq!(json["example_mis"][0], "()");
    }
}
