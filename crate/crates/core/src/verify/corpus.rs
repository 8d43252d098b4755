//! The shared instance corpus: small named actions with their derangement
//! graphs and exact invariants, computed once per process.
//!
//! Base entries are deliberately small, so they are always built with the
//! default caps; per-check budgets from the config apply to the products and
//! wreaths the checks assemble on top. The degree-6 multipartite witness
//! comes from the cached exhaustive search and is re-certified on load.

use crate::action::{GroupAction, DEFAULT_ELEMENT_CAP};
use crate::builders;
use crate::clique::{DEFAULT_MIS_CAP, DEFAULT_SOLVER_BUDGET};
use crate::density;
use crate::graph::{derangement_graph, Graph, DEFAULT_GRAPH_CAP};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::search::{
    default_cache_path, search_multipartite_cached, verify_witness, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};
use std::sync::OnceLock;

pub struct Entry {
    pub key: &'static str,
    pub action: GroupAction,
    pub graph: Graph,
    pub alpha: usize,
    pub max_stab: usize,
    pub rho: Rational,
    pub ekr: bool,
    /// Strict verdicts for base entries are always decided: enumeration at
    /// this scale never truncates under the default cap.
    pub strict: bool,
    pub strict_witness: Option<Vec<usize>>,
    pub mis_count: usize,
}

impl Entry {
    pub fn order(&self) -> usize {
        self.action.order()
    }

    pub fn degree(&self) -> usize {
        self.action.degree()
    }
}

pub struct Corpus {
    pub entries: Vec<Entry>,
    pub search6: SearchOutcome,
    pub search6_from_cache: bool,
}

/// Subgroup pairs (H, G) with H a transitive subgroup of G on the same
/// domain, used for density monotonicity.
pub const SUBGROUP_PAIRS: &[(&str, &str)] = &[
    ("C3", "S3"),
    ("C4", "D4"),
    ("C4", "S4"),
    ("D4", "S4"),
    ("A4", "S4"),
    ("C5", "D5"),
    ("C5", "S5"),
    ("D5", "S5"),
    ("A5", "S5"),
    ("C6", "D6"),
];

/// Keys of the entries whose action is regular.
pub const REGULAR_KEYS: &[&str] = &["C2", "C3", "C4", "C5", "C6", "reg(S3)"];

fn build_entry(key: &'static str, action: GroupAction) -> Entry {
    assert!(action.is_transitive(), "corpus entry {key} must be transitive");
    let graph = derangement_graph(&action, DEFAULT_GRAPH_CAP)
        .unwrap_or_else(|e| panic!("corpus graph {key}: {e}"));
    let strict = density::strict_ekr(&action, &graph, DEFAULT_MIS_CAP, DEFAULT_SOLVER_BUDGET)
        .unwrap_or_else(|e| panic!("corpus strict scan {key}: {e}"));
    assert!(
        !strict.enumeration.truncated,
        "corpus entry {key} unexpectedly truncated"
    );
    let alpha = strict.enumeration.alpha;
    let max_stab = action.max_stabilizer_order();
    let rho = Rational::new((alpha * action.degree()) as i64, action.order() as i64);
    Entry {
        key,
        alpha,
        max_stab,
        rho,
        ekr: alpha == max_stab,
        strict: strict.verdict.expect("complete enumeration always decides"),
        strict_witness: strict.non_coset_witness,
        mis_count: strict.enumeration.sets.len(),
        graph,
        action,
    }
}

fn build_corpus() -> Corpus {
    let cap = DEFAULT_ELEMENT_CAP;
    let mut entries = Vec::new();
    for n in 2..=5 {
        let key: &'static str = match n {
            2 => "S2",
            3 => "S3",
            4 => "S4",
            _ => "S5",
        };
        entries.push(build_entry(key, builders::symmetric_natural(n, cap).unwrap()));
    }
    entries.push(build_entry("A4", builders::alternating_natural(4, cap).unwrap()));
    entries.push(build_entry("A5", builders::alternating_natural(5, cap).unwrap()));
    let a5 = builders::alternating_natural(5, cap).unwrap();
    entries.push(build_entry(
        "A5 on 2-subsets",
        builders::on_k_subsets(&a5, 2).unwrap(),
    ));
    for n in 2..=6 {
        let key: &'static str = match n {
            2 => "C2",
            3 => "C3",
            4 => "C4",
            5 => "C5",
            _ => "C6",
        };
        entries.push(build_entry(key, builders::cyclic_regular(n).unwrap()));
    }
    for n in 4..=6 {
        let key: &'static str = match n {
            4 => "D4",
            5 => "D5",
            _ => "D6",
        };
        entries.push(build_entry(key, builders::dihedral_natural(n).unwrap()));
    }
    let s3 = builders::symmetric_natural(3, cap).unwrap();
    entries.push(build_entry(
        "reg(S3)",
        builders::left_regular(&s3, cap).unwrap(),
    ));

    let (search6, search6_from_cache) =
        search_multipartite_cached(6, 3, DEFAULT_SEARCH_BUDGET, &default_cache_path())
            .expect("degree-6 search");
    assert!(search6.complete, "degree-6 search must cover all pairs");
    assert!(
        !search6.witnesses.is_empty(),
        "degree-6 search must produce witnesses"
    );
    for w in &search6.witnesses {
        assert!(
            verify_witness(w, cap, DEFAULT_GRAPH_CAP).unwrap_or(false),
            "degree-6 witness failed certification"
        );
    }
    let first = &search6.witnesses[0];
    let gens = first
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(s, first.degree).unwrap())
        .collect();
    let k_action = GroupAction::from_generators(first.degree, gens, cap).unwrap();
    entries.push(build_entry("W6", k_action));

    Corpus {
        entries,
        search6,
        search6_from_cache,
    }
}

static CORPUS: OnceLock<Corpus> = OnceLock::new();

pub fn standard() -> &'static Corpus {
    CORPUS.get_or_init(build_corpus)
}

impl Corpus {
    pub fn entry(&self, key: &str) -> &Entry {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .unwrap_or_else(|| panic!("no corpus entry {key}"))
    }

    /// Unordered pairs (with repetition) whose product order stays under the
    /// cap, in corpus order.
    pub fn pairs_capped(&self, order_cap: usize) -> Vec<(&Entry, &Entry)> {
        let mut out = Vec::new();
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i..] {
                if a.order() * b.order() <= order_cap {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn regular_entries(&self) -> Vec<&Entry> {
        REGULAR_KEYS.iter().map(|k| self.entry(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_invariants_hold() {
        let c = standard();
        assert_eq!(c.entries.len(), 17);
        let s3 = c.entry("S3");
        assert_eq!(s3.alpha, 2);
        assert!(s3.strict);
        assert_eq!(s3.mis_count, 9);
        let a4 = c.entry("A4");
        assert_eq!(a4.alpha, 3);
        assert!(a4.ekr && !a4.strict);
        let a5p = c.entry("A5 on 2-subsets");
        assert_eq!(a5p.alpha, 12);
        assert_eq!(a5p.max_stab, 6);
        assert_eq!(a5p.rho, Rational::integer(2));
        let w6 = c.entry("W6");
        assert_eq!(w6.order(), 12);
        assert_eq!(w6.rho, Rational::integer(2));
        assert!(!w6.strict);
        // Regular entries: complete derangement graph, every singleton a
        // coset.
        for e in c.regular_entries() {
            assert_eq!(e.alpha, 1);
            assert!(e.strict);
            assert_eq!(e.mis_count, e.order());
        }
        for (sub, sup) in SUBGROUP_PAIRS {
            let (s, g) = (c.entry(sub), c.entry(sup));
            assert!(s.action.is_subgroup_of(&g.action), "{sub} <= {sup}");
        }
    }
}
