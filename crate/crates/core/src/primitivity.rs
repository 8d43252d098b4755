//! IS-primitivity of graphs and MIS-normality of tensor squares.
//!
//! A graph with independence number `alpha` on `n` vertices is IS-primitive
//! when no non-maximum independent set `A` hits the extremal closed-
//! neighborhood ratio: `|A| / |N[A]| = alpha / n`. The tensor square of `X`
//! is MIS-normal when every maximum independent set is `A x V` or `V x A`
//! for a maximum independent set `A` of `X`. All ratios are compared as
//! exact integer cross-products.

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimitivityVerdict {
    Primitive,
    /// A non-maximum independent set achieving ratio `alpha / n` exactly;
    /// the witness is the lexicographically least one.
    NotPrimitive { witness: Vec<usize>, ratio: Rational },
    /// Search budget exhausted before the space was covered.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct PrimitivityOutcome {
    pub verdict: PrimitivityVerdict,
    pub alpha: usize,
    pub nodes: u64,
}

struct PrimitivitySearch<'a> {
    rows_closed: &'a [Vec<u64>],
    n: usize,
    alpha: usize,
    budget: u64,
    nodes: u64,
}

impl PrimitivitySearch<'_> {
    /// DFS over independent sets in increasing vertex order; the first
    /// witness found is the lexicographically least. `p` holds candidates
    /// (all above the last chosen vertex, none adjacent to the set),
    /// `nbhd` the closed neighborhood of the current set.
    fn run(
        &mut self,
        stack: &mut Vec<usize>,
        p: &[u64],
        nbhd: &[u64],
    ) -> Result<Option<Vec<usize>>> {
        let mut live = p.to_vec();
        while let Some(v) = first_set(&live) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget {
                    budget: self.budget,
                    context: "IS-primitivity search".into(),
                });
            }
            clear_bit(&mut live, v);
            let new_nbhd: Vec<u64> =
                nbhd.iter().zip(&self.rows_closed[v]).map(|(a, b)| a | b).collect();
            let nbhd_size = count(&new_nbhd);
            let a_len = stack.len() + 1;
            stack.push(v);
            if a_len < self.alpha && a_len * self.n == self.alpha * nbhd_size {
                return Ok(Some(stack.clone()));
            }
            // Candidates below stay independent: drop v's neighbors.
            let newp: Vec<u64> = live
                .iter()
                .zip(&self.rows_closed[v])
                .map(|(a, b)| a & !b)
                .collect();
            // Each further vertex adds at least one new closed neighbor, so
            // over k more picks the ratio is at most
            // (a_len + k) / (nbhd_size + k), increasing in k. Descend only if
            // the best reachable ratio meets alpha / n.
            let headroom = self.alpha.saturating_sub(1).saturating_sub(a_len);
            let kmax = headroom.min(count(&newp));
            if kmax > 0 && (a_len + kmax) * self.n >= self.alpha * (nbhd_size + kmax) {
                if let Some(w) = self.run(stack, &newp, &new_nbhd)? {
                    return Ok(Some(w));
                }
            }
            stack.pop();
        }
        Ok(None)
    }
}

/// Decides IS-primitivity by exhaustive ratio-pruned search. The search space
/// is every independent set of size below `alpha`; `budget` caps search nodes
/// and turns the verdict into `Unknown` when exceeded.
pub fn is_primitive(g: &Graph, solver_budget: u64, search_budget: u64) -> Result<PrimitivityOutcome> {
    let n = g.vertex_count();
    assert!(g.is_loop_free(), "IS-primitivity is for simple graphs");
    let alpha = clique::independence_number(g, solver_budget)?;
    let wpr = n.div_ceil(64).max(1);
    let rows_closed: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = g.row(v).to_vec();
            row.resize(wpr, 0);
            row[v / 64] |= 1 << (v % 64);
            row
        })
        .collect();
    let mut all = vec![u64::MAX; wpr];
    for v in n..wpr * 64 {
        clear_bit(&mut all, v);
    }
    let mut search = PrimitivitySearch {
        rows_closed: &rows_closed,
        n,
        alpha,
        budget: search_budget,
        nodes: 0,
    };
    let empty_nbhd = vec![0u64; wpr];
    let mut stack = Vec::new();
    match search.run(&mut stack, &all, &empty_nbhd) {
        Ok(Some(witness)) => {
            let closed = g.closed_neighborhood(&witness);
            Ok(PrimitivityOutcome {
                verdict: PrimitivityVerdict::NotPrimitive {
                    ratio: Rational::new(witness.len() as i64, closed.len() as i64),
                    witness,
                },
                alpha,
                nodes: search.nodes,
            })
        }
        Ok(None) => Ok(PrimitivityOutcome {
            verdict: PrimitivityVerdict::Primitive,
            alpha,
            nodes: search.nodes,
        }),
        Err(Error::Budget { .. }) => Ok(PrimitivityOutcome {
            verdict: PrimitivityVerdict::Unknown,
            alpha,
            nodes: search.nodes,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MisNormalVerdict {
    Normal,
    /// A maximum independent set of the square that is no projection
    /// preimage.
    NotNormal { witness: Vec<usize> },
    /// Enumeration truncated before a verdict was reached.
    Unknown { reason: String },
}

#[derive(Debug, Clone)]
pub struct MisNormalOutcome {
    pub verdict: MisNormalVerdict,
    pub alpha_square: usize,
    pub square_mis_count: usize,
    pub preimage_count: usize,
}

/// Checks MIS-normality of the tensor square `X x X` by complete maximum
/// independent set enumeration on both levels.
pub fn mis_normal_square(
    x: &Graph,
    graph_cap: usize,
    mis_cap: usize,
    budget: u64,
) -> Result<MisNormalOutcome> {
    let n = x.vertex_count();
    let square = x.direct_power(2, graph_cap)?;
    let base = clique::maximum_independent_sets(x, mis_cap, budget)?;
    if base.truncated {
        return Ok(MisNormalOutcome {
            verdict: MisNormalVerdict::Unknown {
                reason: format!("factor MIS enumeration truncated at {}", base.sets.len()),
            },
            alpha_square: 0,
            square_mis_count: 0,
            preimage_count: 0,
        });
    }
    let mut preimages: HashSet<Vec<usize>> = HashSet::new();
    for a in &base.sets {
        let rows: Vec<usize> =
            a.iter().flat_map(|&v| (0..n).map(move |w| v * n + w)).collect();
        let mut cols: Vec<usize> =
            a.iter().flat_map(|&v| (0..n).map(move |w| w * n + v)).collect();
        cols.sort_unstable();
        preimages.insert(rows);
        preimages.insert(cols);
    }
    let square_mis = clique::maximum_independent_sets(&square, mis_cap, budget)?;
    for s in &square_mis.sets {
        if !preimages.contains(s) {
            return Ok(MisNormalOutcome {
                verdict: MisNormalVerdict::NotNormal { witness: s.clone() },
                alpha_square: square_mis.alpha,
                square_mis_count: square_mis.sets.len(),
                preimage_count: preimages.len(),
            });
        }
    }
    if square_mis.truncated {
        return Ok(MisNormalOutcome {
            verdict: MisNormalVerdict::Unknown {
                reason: format!("square MIS enumeration truncated at {}", square_mis.sets.len()),
            },
            alpha_square: square_mis.alpha,
            square_mis_count: square_mis.sets.len(),
            preimage_count: preimages.len(),
        });
    }
    Ok(MisNormalOutcome {
        verdict: MisNormalVerdict::Normal,
        alpha_square: square_mis.alpha,
        square_mis_count: square_mis.sets.len(),
        preimage_count: preimages.len(),
    })
}

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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP;
    use crate::builders::symmetric_natural;
    use crate::graph::derangement_graph;

    const B: u64 = 20_000_000;

    #[test]
    fn complete_graphs_are_primitive() {
        for n in 1..=6 {
            let out = is_primitive(&Graph::complete(n), B, B).unwrap();
            assert_eq!(out.verdict, PrimitivityVerdict::Primitive, "K{n}");
        }
    }

    #[test]
    fn disconnected_graph_with_full_ratio_is_not_primitive() {
        // Two triangles: alpha = 2, n = 6; A = {0} has |A|/|N[A]| = 1/3 = 2/6.
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = derangement_graph(&s3, 5000).unwrap();
        let out = is_primitive(&gamma, B, B).unwrap();
        match out.verdict {
            PrimitivityVerdict::NotPrimitive { witness, ratio } => {
                assert_eq!(witness, vec![0]);
                assert_eq!(ratio, Rational::new(1, 3));
            }
            other => panic!("expected NotPrimitive, got {other:?}"),
        }
    }

    #[test]
    fn edgeless_graphs_split() {
        assert_eq!(
            is_primitive(&Graph::empty(1), B, B).unwrap().verdict,
            PrimitivityVerdict::Primitive
        );
        let out = is_primitive(&Graph::empty(3), B, B).unwrap();
        assert!(matches!(out.verdict, PrimitivityVerdict::NotPrimitive { .. }));
    }

    #[test]
    fn odd_cycles_are_primitive() {
        // C5: alpha = 2, ratio 2/5; singletons give 1/3 and pairs of
        // non-adjacent vertices give 2/5 only when maximum.
        let out = is_primitive(&Graph::cycle(5), B, B).unwrap();
        assert_eq!(out.verdict, PrimitivityVerdict::Primitive);
        let c7 = is_primitive(&Graph::cycle(7), B, B).unwrap();
        // C7: alpha = 3, ratio 3/7. A = {0, 2}: N[A] = {0..4}, 2/5 != 3/7.
        assert_eq!(c7.verdict, PrimitivityVerdict::Primitive);
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = derangement_graph(&s3, 5000).unwrap();
        let out = is_primitive(&Graph::direct_power(&gamma, 2, 5000).unwrap(), B, 3).unwrap();
        assert_eq!(out.verdict, PrimitivityVerdict::Unknown);
    }

    #[test]
    fn square_of_two_triangles_is_not_mis_normal() {
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let gamma = derangement_graph(&s3, 5000).unwrap();
        let out = mis_normal_square(&gamma, 5000, 10_000, B).unwrap();
        assert_eq!(out.alpha_square, 12);
        assert!(matches!(out.verdict, MisNormalVerdict::NotNormal { .. }));
    }

    #[test]
    fn square_of_complete_graph_is_mis_normal() {
        // K3 x K3: maximum independent sets are the 3 rows and 3 columns.
        let out = mis_normal_square(&Graph::complete(3), 5000, 10_000, B).unwrap();
        assert_eq!(out.alpha_square, 3);
        assert_eq!(out.verdict, MisNormalVerdict::Normal);
        assert_eq!(out.square_mis_count, 6);
        assert_eq!(out.preimage_count, 6);
    }
}
