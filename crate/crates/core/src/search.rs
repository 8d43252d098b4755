//! Exhaustive search for transitive groups whose derangement graph is
//! complete multipartite.
//!
//! The derangement graph of `G` is complete multipartite exactly when the
//! non-derangement elements form a subgroup `N`; the parts are then the
//! cosets of `N` and the part count is its index. The search enumerates
//! generating pairs `(a, b)` of degree-`n` permutations in rank order
//! (`a <= b`, so one- and two-generated subgroups are all covered), closes
//! each transitive pair, and tests the subgroup predicate on the
//! non-derangement set. Groups needing three or more generators are outside
//! the search space.

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::graph::derangement_graph;
use crate::perm::Permutation;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

pub const MAX_SEARCH_DEGREE: usize = 8;
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Rank-indexed permutations of a fixed degree. Ranks follow lexicographic
/// image order, so the identity is rank 0. A full composition table is only
/// affordable through degree 7 (`5040^2` u16 entries); beyond that, or when
/// few pairs will be examined, composition ranks are recomputed on the fly.
struct Perms {
    n: usize,
    fact: usize,
    flat: Vec<u8>,
    has_fixed: Vec<bool>,
    table: Option<Vec<u16>>,
    factorials: [usize; 9],
}

impl Perms {
    fn new(n: usize, with_table: bool) -> Perms {
        let mut factorials = [1usize; 9];
        for i in 1..9 {
            factorials[i] = factorials[i - 1] * i;
        }
        let fact = factorials[n];
        let mut flat = Vec::with_capacity(fact * n);
        let mut has_fixed = Vec::with_capacity(fact);
        for p in (0..n as u8).permutations(n) {
            has_fixed.push(p.iter().enumerate().any(|(i, &x)| i as u8 == x));
            flat.extend_from_slice(&p);
        }
        let mut perms = Perms {
            n,
            fact,
            flat,
            has_fixed,
            table: None,
            factorials,
        };
        if with_table {
            let mut table = vec![0u16; fact * fact];
            let mut buf = [0u8; 8];
            for p in 0..fact {
                for q in 0..fact {
                    for x in 0..n {
                        buf[x] = perms.images(p)[perms.images(q)[x] as usize];
                    }
                    table[p * fact + q] = perms.rank(&buf[..n]) as u16;
                }
            }
            perms.table = Some(table);
        }
        perms
    }

    #[inline]
    fn images(&self, rank: usize) -> &[u8] {
        &self.flat[rank * self.n..rank * self.n + self.n]
    }

    fn rank(&self, images: &[u8]) -> usize {
        let n = images.len();
        let mut r = 0;
        for i in 0..n {
            let smaller_later =
                (i + 1..n).filter(|&j| images[j] < images[i]).count();
            r += smaller_later * self.factorials[n - 1 - i];
        }
        r
    }

    /// Rank of `p` after `q`, matching the crate-wide composition order.
    fn compose(&self, p: usize, q: usize) -> usize {
        if let Some(table) = &self.table {
            return table[p * self.fact + q] as usize;
        }
        let mut buf = [0u8; 8];
        for x in 0..self.n {
            buf[x] = self.images(p)[self.images(q)[x] as usize];
        }
        self.rank(&buf[..self.n])
    }
}

/// Orbit of point 0 under positive words in `a` and `b`; covers the whole
/// generated subgroup because both have finite order.
fn pair_transitive(a: &[u8], b: &[u8], n: usize) -> bool {
    let mut seen: u16 = 1;
    let mut stack = [0u8; 8];
    let mut top = 1;
    let mut reached = 1;
    while top > 0 {
        top -= 1;
        let x = stack[top] as usize;
        for y in [a[x], b[x]] {
            if seen & (1 << y) == 0 {
                seen |= 1 << y;
                reached += 1;
                stack[top] = y;
                top += 1;
            }
        }
    }
    reached == n
}

struct Scratch {
    visited: Vec<u64>,
    queue: Vec<u32>,
}

/// BFS closure of `<a, b>` by right multiplication from the identity.
/// Afterwards `scratch.queue` holds every element rank and `scratch.visited`
/// is its characteristic bitvector, which doubles as a dedup key.
fn closure(perms: &Perms, a: usize, b: usize, scratch: &mut Scratch) {
    scratch.visited.iter_mut().for_each(|w| *w = 0);
    scratch.queue.clear();
    scratch.visited[0] |= 1;
    scratch.queue.push(0);
    let mut head = 0;
    while head < scratch.queue.len() {
        let g = scratch.queue[head] as usize;
        head += 1;
        for s in [a, b] {
            let h = perms.compose(g, s);
            if scratch.visited[h / 64] & (1 << (h % 64)) == 0 {
                scratch.visited[h / 64] |= 1 << (h % 64);
                scratch.queue.push(h as u32);
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultipartiteWitness {
    pub degree: usize,
    pub parts: usize,
    pub order: usize,
    pub part_size: usize,
    /// Cycle strings of the generating pair that first produced the group.
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub degree: usize,
    pub parts: usize,
    pub pairs_examined: u64,
    pub distinct_groups: usize,
    /// Whether every generating pair was examined within budget.
    pub complete: bool,
    pub witnesses: Vec<MultipartiteWitness>,
}

pub fn search_multipartite(degree: usize, parts: usize, budget: u64) -> Result<SearchOutcome> {
    if degree == 0 || degree > MAX_SEARCH_DEGREE {
        return Err(Error::Spec(format!(
            "search degree must be between 1 and {MAX_SEARCH_DEGREE}, got {degree}"
        )));
    }
    if parts == 0 {
        return Err(Error::Spec("part count must be positive".into()));
    }
    // The table costs fact^2 entries to fill; skip it for tiny budgets and
    // for degree 8, where it would not fit.
    let with_table = degree <= 6 || (degree == 7 && budget >= 10_000);
    let perms = Perms::new(degree, with_table);
    let words = perms.fact.div_ceil(64);
    let mut scratch = Scratch {
        visited: vec![0u64; words],
        queue: Vec::with_capacity(perms.fact),
    };
    let mut seen_groups: HashSet<Vec<u64>> = HashSet::new();
    let mut witnesses = Vec::new();
    let mut pairs: u64 = 0;
    let mut complete = true;
    'outer: for a in 0..perms.fact {
        for b in a..perms.fact {
            if pairs == budget {
                complete = false;
                break 'outer;
            }
            pairs += 1;
            if !pair_transitive(perms.images(a), perms.images(b), degree) {
                continue;
            }
            closure(&perms, a, b, &mut scratch);
            if !seen_groups.insert(scratch.visited.clone()) {
                continue;
            }
            let order = scratch.queue.len();
            let nd: Vec<u32> = scratch
                .queue
                .iter()
                .copied()
                .filter(|&g| perms.has_fixed[g as usize])
                .collect();
            if order != parts * nd.len() {
                continue;
            }
            let closed = nd.iter().all(|&p| {
                nd.iter()
                    .all(|&q| perms.has_fixed[perms.compose(p as usize, q as usize)])
            });
            if !closed {
                continue;
            }
            let gen_strings = [a, b]
                .iter()
                .map(|&r| {
                    Permutation::from_images(
                        perms.images(r).iter().map(|&x| x as usize).collect(),
                    )
                    .expect("table rows are valid permutations")
                    .cycle_string()
                })
                .collect();
            witnesses.push(MultipartiteWitness {
                degree,
                parts,
                order,
                part_size: nd.len(),
                generators: gen_strings,
            });
        }
    }
    Ok(SearchOutcome {
        degree,
        parts,
        pairs_examined: pairs,
        distinct_groups: seen_groups.len(),
        complete,
        witnesses,
    })
}

/// Independent certification of a witness: rebuild the group from its
/// generator strings and recognize the part structure on the actual
/// derangement graph.
pub fn verify_witness(
    witness: &MultipartiteWitness,
    element_cap: usize,
    graph_cap: usize,
) -> Result<bool> {
    let gens = witness
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(s, witness.degree))
        .collect::<Result<Vec<_>>>()?;
    let action = GroupAction::from_generators(witness.degree, gens, element_cap)?;
    if !action.is_transitive() || action.order() != witness.order {
        return Ok(false);
    }
    let graph = derangement_graph(&action, graph_cap)?;
    Ok(match graph.complete_multipartite_parts() {
        Some(parts) => {
            parts.len() == witness.parts
                && parts.iter().all(|p| p.len() == witness.part_size)
        }
        None => false,
    })
}

/// Default location of the on-disk search cache.
pub fn default_cache_path() -> PathBuf {
    std::env::temp_dir().join("derange-search-cache.json")
}

fn cache_key(degree: usize, parts: usize, budget: u64) -> String {
    format!("{degree}:{parts}:{budget}")
}

fn read_cache(path: &Path) -> BTreeMap<String, SearchOutcome> {
    std::fs::read_to_string(path)
        .ok()
        .and_then(|text| serde_json::from_str(&text).ok())
        .unwrap_or_default()
}

fn write_cache(path: &Path, cache: &BTreeMap<String, SearchOutcome>) {
    // Atomic replace so concurrent processes never observe a torn file.
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    if let Ok(text) = serde_json::to_string_pretty(cache) {
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, path);
        }
    }
}

/// Search with an on-disk cache keyed by the full parameter triple. A cache
/// hit is only trusted after every stored witness re-certifies from its
/// generators; a stale or tampered entry falls back to a fresh search.
/// Returns the outcome and whether it came from the cache.
pub fn search_multipartite_cached(
    degree: usize,
    parts: usize,
    budget: u64,
    cache_path: &Path,
) -> Result<(SearchOutcome, bool)> {
    let key = cache_key(degree, parts, budget);
    let mut cache = read_cache(cache_path);
    if let Some(outcome) = cache.get(&key) {
        let sound = outcome.degree == degree
            && outcome.parts == parts
            && outcome.witnesses.iter().all(|w| {
                verify_witness(w, crate::action::DEFAULT_ELEMENT_CAP, crate::graph::DEFAULT_GRAPH_CAP)
                    .unwrap_or(false)
            });
        if sound {
            return Ok((outcome.clone(), true));
        }
    }
    let outcome = search_multipartite(degree, parts, budget)?;
    cache.insert(key, outcome.clone());
    write_cache(cache_path, &cache);
    Ok((outcome, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_verified(outcome: &SearchOutcome) -> bool {
        outcome
            .witnesses
            .iter()
            .all(|w| verify_witness(w, 250_000, 5000).unwrap())
    }

    #[test]
    fn degree_three_parts_three_finds_the_rotation_group() {
        let out = search_multipartite(3, 3, 1_000_000).unwrap();
        assert!(out.complete);
        assert_eq!(out.witnesses.len(), 1);
        assert_eq!(out.witnesses[0].order, 3);
        assert_eq!(out.witnesses[0].part_size, 1);
        assert!(all_verified(&out));
    }

    #[test]
    fn degree_four_parts_two_is_empty() {
        let out = search_multipartite(4, 2, 1_000_000).unwrap();
        assert!(out.complete);
        assert!(out.witnesses.is_empty());
    }

    #[test]
    fn degree_four_parts_four_finds_the_regular_groups() {
        // Three cyclic subgroups generated by 4-cycles plus the normal
        // Klein subgroup; for all of them every non-identity element is a
        // derangement, so the graph is complete.
        let out = search_multipartite(4, 4, 1_000_000).unwrap();
        assert!(out.complete);
        assert_eq!(out.witnesses.len(), 4);
        assert!(out.witnesses.iter().all(|w| w.order == 4));
        assert!(all_verified(&out));
    }

    #[test]
    fn degree_five_parts_five_finds_the_six_cyclic_groups() {
        let out = search_multipartite(5, 5, 1_000_000).unwrap();
        assert!(out.complete);
        assert_eq!(out.witnesses.len(), 6);
        assert!(out.witnesses.iter().all(|w| w.order == 5 && w.part_size == 1));
        assert!(all_verified(&out));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let out = search_multipartite(6, 3, 100).unwrap();
        assert!(!out.complete);
        assert_eq!(out.pairs_examined, 100);
    }

    #[test]
    fn degree_one_trivial_group_is_complete_unipartite() {
        let out = search_multipartite(1, 1, 10).unwrap();
        assert!(out.complete);
        assert_eq!(out.witnesses.len(), 1);
        assert_eq!(out.witnesses[0].order, 1);
    }

    #[test]
    fn degree_eight_runs_without_a_table() {
        let out = search_multipartite(8, 8, 50).unwrap();
        assert!(!out.complete);
        assert_eq!(out.pairs_examined, 50);
    }

    #[test]
    fn out_of_range_degrees_are_rejected() {
        assert!(search_multipartite(0, 2, 10).is_err());
        assert!(search_multipartite(9, 2, 10).is_err());
        assert!(search_multipartite(4, 0, 10).is_err());
    }

    #[test]
    fn cache_round_trips_and_revalidates() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let (first, hit1) = search_multipartite_cached(4, 4, 1_000_000, &path).unwrap();
        assert!(!hit1);
        let (second, hit2) = search_multipartite_cached(4, 4, 1_000_000, &path).unwrap();
        assert!(hit2);
        assert_eq!(first.witnesses.len(), second.witnesses.len());
        assert_eq!(first.pairs_examined, second.pairs_examined);

        // A corrupted entry is discarded and the search is redone.
        let mut cache = read_cache(&path);
        cache.get_mut("4:4:1000000").unwrap().witnesses[0].generators =
            vec!["(1 2)".into(), "(1 2)".into()];
        write_cache(&path, &cache);
        let (third, hit3) = search_multipartite_cached(4, 4, 1_000_000, &path).unwrap();
        assert!(!hit3);
        assert_eq!(third.witnesses.len(), first.witnesses.len());
    }
}
