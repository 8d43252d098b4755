//! Exact maximum-clique and maximum-independent-set computations.
//!
//! One solver serves both sides: independence numbers are clique numbers of
//! the complement. The fast search is branch-and-bound with a greedy coloring
//! bound over bit-parallel candidate sets; witnesses and enumerations come
//! from a lexicographic search so results never depend on vertex ordering
//! heuristics or thread counts. Everything is exact; exceeding a node budget
//! is an error, never an approximation.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling on search nodes for one solver call.
pub const DEFAULT_SOLVER_BUDGET: u64 = 20_000_000;
/// Default ceiling on enumerated maximum independent sets.
pub const DEFAULT_MIS_CAP: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct CliqueOutcome {
    pub size: usize,
    /// Lexicographically least optimum set, sorted increasing.
    pub witness: Vec<usize>,
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub target: usize,
    /// Sets in lexicographic order, each sorted increasing. Complete unless
    /// `truncated`.
    pub sets: Vec<Vec<usize>>,
    pub truncated: bool,
    pub nodes: u64,
}

// Bit-level helpers over word-array vertex sets.

#[inline]
fn first_set(words: &[u64]) -> Option<usize> {
    for (k, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some(k * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

#[inline]
fn clear_bit(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1 << (v % 64));
}


#[inline]
fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn rows_of(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let wpr = n.div_ceil(64);
    (0..n)
        .map(|v| {
            let mut row = g.row(v).to_vec();
            row.resize(wpr, 0);
            clear_bit(&mut row, v);
            row
        })
        .collect()
}

/// Greedy sequential coloring of the candidate set; returns the class count,
/// an upper bound on the largest clique inside it.
fn color_bound(rows: &[Vec<u64>], p: &[u64]) -> usize {
    let mut uncolored = p.to_vec();
    let mut classes = 0;
    let mut class_buf = vec![0u64; p.len()];
    while let Some(_) = first_set(&uncolored) {
        classes += 1;
        class_buf.copy_from_slice(&uncolored);
        while let Some(v) = first_set(&class_buf) {
            clear_bit(&mut class_buf, v);
            clear_bit(&mut uncolored, v);
            for (word, r) in class_buf.iter_mut().zip(&rows[v]) {
                *word &= !r;
            }
        }
    }
    classes
}

struct FastSearch<'a> {
    rows: &'a [Vec<u64>],
    budget: u64,
    nodes: u64,
    best: usize,
}

impl FastSearch<'_> {
    /// Tomita-style numbering: candidates listed in increasing color; the
    /// caller scans from the back and prunes once `size + color <= best`.
    fn expand(&mut self, depth: usize, p: &[u64]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { budget: self.budget, context: "max clique".into() });
        }
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(count(p));
        let mut uncolored = p.to_vec();
        let mut class_buf = vec![0u64; p.len()];
        let mut classes = 0;
        while first_set(&uncolored).is_some() {
            classes += 1;
            class_buf.copy_from_slice(&uncolored);
            while let Some(v) = first_set(&class_buf) {
                clear_bit(&mut class_buf, v);
                clear_bit(&mut uncolored, v);
                for (word, r) in class_buf.iter_mut().zip(&self.rows[v]) {
                    *word &= !r;
                }
                order.push((v, classes));
            }
        }
        let mut live = p.to_vec();
        for &(v, color) in order.iter().rev() {
            if depth + color <= self.best {
                return Ok(());
            }
            let mut newp = live.clone();
            clear_bit(&mut newp, v);
            for (word, r) in newp.iter_mut().zip(&self.rows[v]) {
                *word &= r;
            }
            if first_set(&newp).is_none() {
                if depth + 1 > self.best {
                    self.best = depth + 1;
                }
            } else {
                self.expand(depth + 1, &newp)?;
            }
            clear_bit(&mut live, v);
        }
        Ok(())
    }
}

/// Clique number only, via degree-ordered branch and bound.
fn clique_number(g: &Graph, budget: u64) -> Result<(usize, u64)> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, 0));
    }
    assert!(g.is_loop_free(), "clique solver expects a simple graph");
    // Descending degree, index as tie-break, then relabel.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let wpr = n.div_ceil(64);
    let mut rows = vec![vec![0u64; wpr]; n];
    for v in 0..n {
        for w in 0..n {
            if w != v && g.has_edge(v, w) {
                rows[position[v]][position[w] / 64] |= 1 << (position[w] % 64);
            }
        }
    }
    let mut all = vec![u64::MAX; wpr];
    for v in n..wpr * 64 {
        clear_bit(&mut all, v);
    }
    let mut search = FastSearch { rows: &rows, budget, nodes: 0, best: 0 };
    search.expand(0, &all)?;
    Ok((search.best, search.nodes))
}

struct LexSearch<'a> {
    rows: &'a [Vec<u64>],
    target: usize,
    cap: usize,
    budget: u64,
    nodes: u64,
    sets: Vec<Vec<usize>>,
    truncated: bool,
}

impl LexSearch<'_> {
    /// Depth-first in increasing vertex order, include branch first, so sets
    /// are produced in lexicographic order and each exactly once.
    fn run(&mut self, stack: &mut Vec<usize>, p: &mut Vec<u64>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { budget: self.budget, context: "clique enumeration".into() });
        }
        if stack.len() == self.target {
            if self.sets.len() == self.cap {
                self.truncated = true;
                return Ok(false);
            }
            self.sets.push(stack.clone());
            return Ok(true);
        }
        let needed = self.target - stack.len();
        if count(p) < needed || color_bound(self.rows, p) < needed {
            return Ok(true);
        }
        while let Some(v) = first_set(p) {
            clear_bit(p, v);
            let mut newp: Vec<u64> = p.iter().zip(&self.rows[v]).map(|(a, b)| a & b).collect();
            stack.push(v);
            let keep_going = self.run(stack, &mut newp)?;
            stack.pop();
            if !keep_going {
                return Ok(false);
            }
            if count(p) < needed {
                return Ok(true);
            }
        }
        Ok(true)
    }
}

/// All cliques of exactly `size`, lexicographic, capped.
pub fn enumerate_cliques_of_size(
    g: &Graph,
    size: usize,
    cap: usize,
    budget: u64,
) -> Result<Enumeration> {
    let n = g.vertex_count();
    assert!(g.is_loop_free(), "clique solver expects a simple graph");
    let rows = rows_of(g);
    let wpr = n.div_ceil(64).max(1);
    let mut all = vec![u64::MAX; wpr];
    for v in n..wpr * 64 {
        clear_bit(&mut all, v);
    }
    let mut search = LexSearch {
        rows: &rows,
        target: size,
        cap,
        budget,
        nodes: 0,
        sets: Vec::new(),
        truncated: false,
    };
    let mut stack = Vec::with_capacity(size);
    if size == 0 {
        search.sets.push(vec![]);
    } else {
        search.run(&mut stack, &mut all.clone())?;
    }
    Ok(Enumeration {
        target: size,
        sets: search.sets,
        truncated: search.truncated,
        nodes: search.nodes,
    })
}

/// Maximum clique: exact size plus the lexicographically least witness.
pub fn max_clique(g: &Graph, budget: u64) -> Result<CliqueOutcome> {
    let (size, nodes_fast) = clique_number(g, budget)?;
    if size == 0 {
        return Ok(CliqueOutcome { size: 0, witness: vec![], nodes: nodes_fast });
    }
    let first = enumerate_cliques_of_size(g, size, 1, budget)?;
    let witness = first.sets.into_iter().next().expect("a maximum clique exists");
    Ok(CliqueOutcome { size, witness, nodes: nodes_fast + first.nodes })
}

/// Independence number with lexicographically least witness: the clique
/// outcome of the complement.
pub fn max_independent_set(g: &Graph, budget: u64) -> Result<CliqueOutcome> {
    max_clique(&g.complement(), budget)
}

pub fn independence_number(g: &Graph, budget: u64) -> Result<usize> {
    Ok(clique_number(&g.complement(), budget)?.0)
}

#[derive(Debug, Clone)]
pub struct MisEnumeration {
    pub alpha: usize,
    pub sets: Vec<Vec<usize>>,
    pub truncated: bool,
    pub nodes: u64,
}

/// All maximum independent sets, lexicographic, capped at `cap` (truncation
/// flagged, never silent).
pub fn maximum_independent_sets(g: &Graph, cap: usize, budget: u64) -> Result<MisEnumeration> {
    let complement = g.complement();
    let (alpha, nodes_fast) = clique_number(&complement, budget)?;
    let e = enumerate_cliques_of_size(&complement, alpha, cap, budget)?;
    Ok(MisEnumeration {
        alpha,
        sets: e.sets,
        truncated: e.truncated,
        nodes: nodes_fast + e.nodes,
    })
}

#[derive(Debug, Clone)]
pub struct CliqueCoclique {
    pub alpha: usize,
    pub omega: usize,
    pub vertices: usize,
    /// `alpha * omega <= |V|`; for vertex-transitive graphs this always holds.
    pub bound_holds: bool,
}

pub fn clique_coclique(g: &Graph, budget: u64) -> Result<CliqueCoclique> {
    let omega = clique_number(g, budget)?.0;
    let alpha = independence_number(g, budget)?;
    Ok(CliqueCoclique {
        alpha,
        omega,
        vertices: g.vertex_count(),
        bound_holds: alpha * omega <= g.vertex_count(),
    })
}

/// Check that a vertex set is independent (no internal edges, ignoring loops).
pub fn is_independent_set(g: &Graph, set: &[usize]) -> bool {
    for (i, &v) in set.iter().enumerate() {
        for &w in set.iter().skip(i + 1) {
            if g.has_edge(v, w) {
                return false;
            }
        }
    }
    true
}

/// Reference implementations: plain exhaustive recursion with no bounds, used
/// as an independent cross-check of the solver (different algorithm, shared
/// only the graph type).
pub mod reference {
    use crate::graph::Graph;

    /// Visits every clique of the graph once; returns the largest size.
    pub fn max_clique_brute(g: &Graph) -> usize {
        fn rec(g: &Graph, chosen: &mut Vec<usize>, from: usize, best: &mut usize) {
            if chosen.len() > *best {
                *best = chosen.len();
            }
            for v in from..g.vertex_count() {
                if chosen.iter().all(|&u| g.has_edge(u, v)) {
                    chosen.push(v);
                    rec(g, chosen, v + 1, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        rec(g, &mut Vec::new(), 0, &mut best);
        best
    }

    pub fn independence_brute(g: &Graph) -> usize {
        max_clique_brute(&g.complement())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP;
    use crate::builders::symmetric_natural;
    use crate::graph::derangement_graph;

    const B: u64 = DEFAULT_SOLVER_BUDGET;

    #[test]
    fn clique_numbers_of_standard_graphs() {
        assert_eq!(max_clique(&Graph::complete(5), B).unwrap().size, 5);
        assert_eq!(max_clique(&Graph::empty(4), B).unwrap().size, 1);
        assert_eq!(max_clique(&Graph::cycle(5), B).unwrap().size, 2);
        assert_eq!(max_clique(&Graph::petersen(), B).unwrap().size, 2);
    }

    #[test]
    fn independence_numbers_of_standard_graphs() {
        assert_eq!(independence_number(&Graph::complete(5), B).unwrap(), 1);
        assert_eq!(independence_number(&Graph::empty(4), B).unwrap(), 4);
        assert_eq!(independence_number(&Graph::cycle(5), B).unwrap(), 2);
        assert_eq!(independence_number(&Graph::petersen(), B).unwrap(), 4);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let c6 = Graph::cycle(6);
        let mis = max_independent_set(&c6, B).unwrap();
        assert_eq!(mis.size, 3);
        assert_eq!(mis.witness, vec![0, 2, 4]);
        let k4 = Graph::complete(4);
        assert_eq!(max_clique(&k4, B).unwrap().witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn enumeration_of_mis_in_c6() {
        let mis = maximum_independent_sets(&Graph::cycle(6), 100, B).unwrap();
        assert_eq!(mis.alpha, 3);
        assert_eq!(mis.sets, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert!(!mis.truncated);
    }

    #[test]
    fn enumeration_respects_cap() {
        let mis = maximum_independent_sets(&Graph::empty(10), 5, B).unwrap();
        assert_eq!(mis.alpha, 10);
        assert_eq!(mis.sets.len(), 1);
        let singles = maximum_independent_sets(&Graph::complete(10), 5, B).unwrap();
        assert_eq!(singles.alpha, 1);
        assert_eq!(singles.sets.len(), 5);
        assert!(singles.truncated);
    }

    #[test]
    fn s3_has_nine_maximum_intersecting_sets() {
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = derangement_graph(&s3, 5000).unwrap();
        let mis = maximum_independent_sets(&gamma, 1000, B).unwrap();
        assert_eq!(mis.alpha, 2);
        assert_eq!(mis.sets.len(), 9, "one vertex from each triangle");
        assert!(!mis.truncated);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = Graph::petersen();
        assert!(matches!(max_clique(&g, 2), Err(Error::Budget { .. })));
    }

    #[test]
    fn clique_coclique_on_vertex_transitive_graphs() {
        let out = clique_coclique(&Graph::petersen(), B).unwrap();
        assert_eq!((out.alpha, out.omega), (4, 2));
        assert!(out.bound_holds);
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.random_range(1..=14);
            let mut g = Graph::new(n);
            for v in 0..n {
                for w in (v + 1)..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(v, w);
                    }
                }
            }
            let fast = max_clique(&g, B).unwrap();
            let brute = reference::max_clique_brute(&g);
            assert_eq!(fast.size, brute);
            assert!(is_independent_set(&g.complement(), &fast.witness));
        }
    }
}
