//! Bitset-backed graphs: derangement graphs, graph products, and the
//! structural recognizers the check suite needs.
//!
//! Loops are carried on the adjacency diagonal. Ordinary constructions are
//! loop-free; `loop_complete` builds the all-loops complete graph used as a
//! tensor factor. Product vertex order is always row-major with the first
//! factor most significant.

use crate::action::GroupAction;
use crate::error::{Error, Result};
use std::fmt::Write as _;

/// Default ceiling on graph vertex counts.
pub const DEFAULT_GRAPH_CAP: usize = 5000;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Structural equality: same vertex set and adjacency. Labels are
    /// documentation and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}
impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={}, loops={})", self.n, self.edge_count(), self.loop_count())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Graph { n, words_per_row, bits: vec![0; n * words_per_row], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    #[inline]
    fn set_bit(&mut self, v: usize, w: usize) {
        self.bits[v * self.words_per_row + w / 64] |= 1u64 << (w % 64);
    }

    /// Adds the undirected edge `{v, w}`; `v == w` records a loop.
    pub fn add_edge(&mut self, v: usize, w: usize) {
        self.set_bit(v, w);
        self.set_bit(w, v);
    }

    pub fn set_loop(&mut self, v: usize) {
        self.set_bit(v, v);
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        (self.bits[v * self.words_per_row + w / 64] >> (w % 64)) & 1 == 1
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| w != v && self.has_edge(v, w)).collect()
    }

    /// Number of neighbors distinct from `v`.
    pub fn degree(&self, v: usize) -> usize {
        let mut d: usize = self.row(v).iter().map(|w| w.count_ones() as usize).sum();
        if self.has_loop(v) {
            d -= 1;
        }
        d
    }

    /// Number of off-diagonal edges.
    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        (0..self.n).filter(|&v| self.has_loop(v)).count()
    }

    pub fn is_loop_free(&self) -> bool {
        self.loop_count() == 0
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Simple complement: off-diagonal adjacency flipped, diagonal cleared.
    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for v in 0..self.n {
            for w in (v + 1)..self.n {
                if !self.has_edge(v, w) {
                    c.add_edge(v, w);
                }
            }
        }
        c.labels = self.labels.clone();
        c
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            for w in (v + 1)..n {
                g.add_edge(v, w);
            }
        }
        g
    }

    /// Complete graph with a loop on every vertex: the identity-like tensor
    /// factor whose product with `X` relates layers of equal inner blocks.
    pub fn loop_complete(n: usize) -> Graph {
        let mut g = Graph::complete(n);
        for v in 0..n {
            g.set_loop(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Kneser graph K(5,2).
    pub fn petersen() -> Graph {
        use itertools::Itertools;
        let subsets: Vec<Vec<usize>> = (0..5usize).combinations(2).collect();
        let mut g = Graph::new(10);
        for i in 0..10 {
            for j in (i + 1)..10 {
                if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Strong product: distinct vertices adjacent iff both coordinates are
    /// equal-or-adjacent. Vertex `(x, y) -> x*|Y| + y`.
    pub fn strong_product(&self, other: &Graph, cap: usize) -> Result<Graph> {
        let n = checked_vertices(self.n, other.n, cap)?;
        let mut g = Graph::new(n);
        for x1 in 0..self.n {
            for y1 in 0..other.n {
                let a = x1 * other.n + y1;
                for x2 in x1..self.n {
                    let same_x = x1 == x2;
                    if !same_x && !self.has_edge(x1, x2) {
                        continue;
                    }
                    for y2 in 0..other.n {
                        let b = x2 * other.n + y2;
                        if b <= a {
                            continue;
                        }
                        let y_ok = y1 == y2 || other.has_edge(y1, y2);
                        if y_ok && !(same_x && y1 == y2) {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Direct (tensor) product: adjacent iff adjacent in both coordinates.
    /// Loop-aware: a loop certifies self-adjacency, so `(x, y) ~ (x, y')`
    /// exactly when `x` has a loop and `y ~ y'`.
    pub fn direct_product(&self, other: &Graph, cap: usize) -> Result<Graph> {
        let n = checked_vertices(self.n, other.n, cap)?;
        let mut g = Graph::new(n);
        for x1 in 0..self.n {
            for x2 in x1..self.n {
                if !self.has_edge(x1, x2) {
                    continue;
                }
                for y1 in 0..other.n {
                    for y2 in 0..other.n {
                        if !other.has_edge(y1, y2) {
                            continue;
                        }
                        let a = x1 * other.n + y1;
                        let b = x2 * other.n + y2;
                        if a <= b {
                            if a == b {
                                g.set_loop(a);
                            } else {
                                g.add_edge(a, b);
                            }
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Iterated direct product, left-associated.
    pub fn direct_power(&self, k: usize, cap: usize) -> Result<Graph> {
        assert!(k >= 1);
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.direct_product(self, cap)?;
        }
        Ok(acc)
    }

    /// Lexicographic product `X[Y]`: adjacent iff adjacent in `X`, or equal
    /// in `X` and adjacent in `Y`.
    pub fn lexicographic_product(&self, other: &Graph, cap: usize) -> Result<Graph> {
        let n = checked_vertices(self.n, other.n, cap)?;
        let mut g = Graph::new(n);
        for x1 in 0..self.n {
            for x2 in x1..self.n {
                if x1 == x2 {
                    for y1 in 0..other.n {
                        for y2 in (y1 + 1)..other.n {
                            if other.has_edge(y1, y2) {
                                g.add_edge(x1 * other.n + y1, x1 * other.n + y2);
                            }
                        }
                    }
                } else if self.has_edge(x1, x2) {
                    for y1 in 0..other.n {
                        for y2 in 0..other.n {
                            g.add_edge(x1 * other.n + y1, x2 * other.n + y2);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// True iff `map` is a bijection carrying adjacency (and loops) of `self`
    /// exactly onto `other`.
    pub fn equal_under_bijection(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &m in map {
            if m >= self.n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        for v in 0..self.n {
            for w in v..self.n {
                if self.has_edge(v, w) != other.has_edge(map[v], map[w]) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    /// Loops do not affect connectivity.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in 0..self.n {
                    if w != v && !seen[w] && self.has_edge(v, w) {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Induced subgraph on the given distinct vertices; vertex `k` of the
    /// result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate().skip(i) {
                if self.has_edge(v, w) {
                    if i == j {
                        g.set_loop(i);
                    } else {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        if let Some(labels) = &self.labels {
            g = g.with_labels(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Sorted closed neighborhood `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut mask = vec![0u64; self.words_per_row];
        for &v in set {
            mask[v / 64] |= 1 << (v % 64);
            for (word, r) in mask.iter_mut().zip(self.row(v)) {
                *word |= r;
            }
        }
        (0..self.n).filter(|&v| (mask[v / 64] >> (v % 64)) & 1 == 1).collect()
    }

    /// If the graph is complete multipartite, returns its parts (sorted by
    /// least vertex). Equivalently: the complement is a disjoint union of
    /// cliques. Loop-free graphs only.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        debug_assert!(self.is_loop_free());
        self.complement().disjoint_clique_parts()
    }

    /// If the graph is a disjoint union of cliques, returns them (sorted by
    /// least vertex).
    pub fn disjoint_clique_parts(&self) -> Option<Vec<Vec<usize>>> {
        let components = self.connected_components();
        for comp in &components {
            for (i, &v) in comp.iter().enumerate() {
                for &w in comp.iter().skip(i + 1) {
                    if !self.has_edge(v, w) {
                        return None;
                    }
                }
            }
        }
        Some(components)
    }

    /// Two-coloring if bipartite, otherwise an odd closed cycle certificate
    /// (a vertex sequence whose consecutive pairs, last-to-first included,
    /// are all edges).
    pub fn bipartition(&self) -> std::result::Result<Vec<u8>, Vec<usize>> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if self.has_loop(start) {
                return Err(vec![start]);
            }
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for w in 0..self.n {
                    if w == v || !self.has_edge(v, w) {
                        continue;
                    }
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return Err(odd_cycle(&parent, v, w));
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Some triangle `[u, v, w]` if one exists.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        for v in 0..self.n {
            for w in (v + 1)..self.n {
                if !self.has_edge(v, w) {
                    continue;
                }
                for (k, (a, b)) in self.row(v).iter().zip(self.row(w)).enumerate() {
                    let mut both = a & b;
                    // Mask the endpoints themselves in case of loops.
                    if v / 64 == k {
                        both &= !(1 << (v % 64));
                    }
                    if w / 64 == k {
                        both &= !(1 << (w % 64));
                    }
                    if both != 0 {
                        let u = k * 64 + both.trailing_zeros() as usize;
                        return Some([v, w, u]);
                    }
                }
            }
        }
        None
    }

    /// Graphviz `graph` block. Labels, when present, annotate each vertex.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n {
            match &self.labels {
                Some(labels) => {
                    let _ = writeln!(out, "  {v} [label=\"{}: {}\"];", v, escape(&labels[v]));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for v in 0..self.n {
            if self.has_loop(v) {
                let _ = writeln!(out, "  {v} -- {v};");
            }
            for w in (v + 1)..self.n {
                if self.has_edge(v, w) {
                    let _ = writeln!(out, "  {v} -- {w};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Plain text adjacency list: first line is the vertex count, then one
    /// `u v` edge per line (0-based, `u <= v`, loops as `u u`).
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for v in 0..self.n {
            if self.has_loop(v) {
                let _ = writeln!(out, "{v} {v}");
            }
            for w in (v + 1)..self.n {
                if self.has_edge(v, w) {
                    let _ = writeln!(out, "{v} {w}");
                }
            }
        }
        out
    }

    pub fn from_adjacency_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::GraphFormat("missing vertex count line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::GraphFormat(format!("bad vertex count {header:?}")))?;
        let mut g = Graph::new(n);
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::GraphFormat(format!("bad edge line {line:?}"))),
            };
            let u: usize =
                u.parse().map_err(|_| Error::GraphFormat(format!("bad vertex {u:?}")))?;
            let v: usize =
                v.parse().map_err(|_| Error::GraphFormat(format!("bad vertex {v:?}")))?;
            if u >= n || v >= n {
                return Err(Error::GraphFormat(format!("edge {u} {v} out of range 0..{n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn checked_vertices(a: usize, b: usize, cap: usize) -> Result<usize> {
    let n = a
        .checked_mul(b)
        .ok_or_else(|| Error::Overflow("product vertex count".into()))?;
    if n > cap {
        return Err(Error::GraphCap { cap, requested: n });
    }
    Ok(n)
}

fn odd_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    // v and w got the same color; their tree paths plus the edge {v, w} close
    // an odd cycle through their lowest common ancestor.
    let mut av = vec![v];
    let mut x = v;
    while parent[x] != usize::MAX {
        x = parent[x];
        av.push(x);
    }
    let mut aw = vec![w];
    let mut y = w;
    while parent[y] != usize::MAX {
        y = parent[y];
        aw.push(y);
    }
    let meet = av
        .iter()
        .find(|x| aw.contains(x))
        .copied()
        .expect("same BFS tree");
    let mut cycle: Vec<usize> =
        av.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.push(meet);
    let tail: Vec<usize> = aw.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

/// The derangement graph of an action: one vertex per element, an edge
/// between two elements exactly when they disagree on every domain point
/// (equivalently, their quotient is fixed-point-free). Vertices carry cycle
/// notation labels.
pub fn derangement_graph(action: &GroupAction, cap: usize) -> Result<Graph> {
    let n = action.order();
    if n > cap {
        return Err(Error::GraphCap { cap, requested: n });
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        let a = action.element(i).images();
        for j in (i + 1)..n {
            let b = action.element(j).images();
            if a.iter().zip(b).all(|(x, y)| x != y) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g.with_labels(action.elements().iter().map(|e| e.cycle_string()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP;
    use crate::builders::{cyclic_regular, symmetric_natural};

    const CAP: usize = DEFAULT_GRAPH_CAP;

    #[test]
    fn derangement_graph_of_s3_is_two_triangles() {
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let g = derangement_graph(&s3, CAP).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.edge_count(), 6);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        for comp in &comps {
            assert_eq!(comp.len(), 3);
        }
        // The components are the even and odd cosets.
        for comp in &comps {
            let parities: Vec<bool> =
                comp.iter().map(|&i| s3.element(i).is_even()).collect();
            assert!(parities.iter().all(|&p| p == parities[0]));
        }
    }

    #[test]
    fn derangement_graph_of_regular_action_is_complete() {
        let c5 = cyclic_regular(5).unwrap();
        let g = derangement_graph(&c5, CAP).unwrap();
        assert_eq!(g, Graph::complete(5));
    }

    #[test]
    fn complement_is_involutive() {
        let g = Graph::petersen();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 45 - 15);
    }

    #[test]
    fn strong_product_of_edges_is_k4() {
        let k2 = Graph::complete(2);
        let p = k2.strong_product(&k2, CAP).unwrap();
        assert_eq!(p, Graph::complete(4));
    }

    #[test]
    fn direct_product_of_edges_is_perfect_matching() {
        let k2 = Graph::complete(2);
        let p = k2.direct_product(&k2, CAP).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 3));
        assert!(p.has_edge(1, 2));
        assert!(!p.has_edge(0, 1));
    }

    #[test]
    fn loop_complete_tensor_acts_as_blowup() {
        // K2* x K2 has every cross pair adjacent except aligned copies:
        // (x,y) ~ (x',y') iff y != y', which is complete bipartite K2,2
        // between the two y-layers.
        let star = Graph::loop_complete(2);
        let k2 = Graph::complete(2);
        let p = star.direct_product(&k2, CAP).unwrap();
        assert!(p.is_loop_free());
        assert_eq!(p.edge_count(), 4);
        assert!(p.has_edge(0, 1));
        assert!(p.has_edge(0, 3));
        assert!(!p.has_edge(0, 2));
    }

    #[test]
    fn lexicographic_product_alpha_structure() {
        // C4[K2]: 8 vertices, each C4 edge blows up to K2,2 plus inner edges.
        let c4 = Graph::cycle(4);
        let k2 = Graph::complete(2);
        let p = c4.lexicographic_product(&k2, CAP).unwrap();
        assert_eq!(p.vertex_count(), 8);
        assert_eq!(p.edge_count(), 4 * 4 + 4);
    }

    #[test]
    fn equal_under_bijection_detects_relabeling() {
        let c4 = Graph::cycle(4);
        let mut relabeled = Graph::new(4);
        // 0-2-1-3-0 is a 4-cycle in a different vertex order.
        relabeled.add_edge(0, 2);
        relabeled.add_edge(2, 1);
        relabeled.add_edge(1, 3);
        relabeled.add_edge(3, 0);
        assert!(!c4.equal_under_bijection(&relabeled, &[0, 1, 2, 3]));
        assert!(c4.equal_under_bijection(&relabeled, &[0, 2, 1, 3]));
        // Non-bijections are rejected.
        assert!(!c4.equal_under_bijection(&relabeled, &[0, 0, 1, 3]));
    }

    #[test]
    fn complete_multipartite_recognition() {
        // K_{2,2,1}: complement is K2 + K2 + K1.
        let non_edges = [(0usize, 1usize), (2, 3)];
        let mut g = Graph::new(5);
        for v in 0..5 {
            for w in (v + 1)..5 {
                if !non_edges.contains(&(v, w)) {
                    g.add_edge(v, w);
                }
            }
        }
        let parts = g.complete_multipartite_parts().unwrap();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3], vec![4]]);
        // P3 is K_{1,2}; the smallest real non-example is the path P4.
        let mut p3 = Graph::new(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        assert_eq!(
            p3.complete_multipartite_parts().unwrap(),
            vec![vec![0, 2], vec![1]]
        );
        let mut p4 = Graph::new(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        assert!(p4.complete_multipartite_parts().is_none());
        // Complete and empty graphs are edge cases that qualify.
        assert_eq!(Graph::complete(3).complete_multipartite_parts().unwrap().len(), 3);
        assert_eq!(Graph::empty(4).complete_multipartite_parts().unwrap().len(), 1);
    }

    #[test]
    fn bipartition_and_odd_cycles() {
        assert!(Graph::cycle(6).is_bipartite());
        let c5 = Graph::cycle(5);
        let cycle = c5.bipartition().unwrap_err();
        assert_eq!(cycle.len() % 2, 1);
        for k in 0..cycle.len() {
            assert!(c5.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]));
        }
        assert!(Graph::petersen().bipartition().is_err());
    }

    #[test]
    fn triangle_detection() {
        assert!(Graph::cycle(5).triangle().is_none());
        let t = Graph::complete(4).triangle().unwrap();
        assert_eq!(t.len(), 3);
        let mut g = Graph::cycle(6);
        assert!(g.triangle().is_none());
        g.add_edge(0, 2);
        let [a, b, c] = g.triangle().unwrap();
        assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
    }

    #[test]
    fn closed_neighborhood_of_cycle_vertex() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.closed_neighborhood(&[0]), vec![0, 1, 4]);
        assert_eq!(c5.closed_neighborhood(&[0, 2]), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn adjacency_text_round_trip() {
        let g = Graph::petersen();
        let text = g.to_adjacency_text();
        let back = Graph::from_adjacency_text(&text).unwrap();
        assert_eq!(g, back);
        assert!(Graph::from_adjacency_text("2\n0 5\n").is_err());
        assert!(Graph::from_adjacency_text("").is_err());
    }

    #[test]
    fn dot_output_contains_edges_and_labels() {
        let s3 = symmetric_natural(3, DEFAULT_ELEMENT_CAP).unwrap();
        let g = derangement_graph(&s3, CAP).unwrap();
        let dot = g.to_dot("deranged");
        assert!(dot.starts_with("graph deranged {"));
        // Element 1 in sorted order is [0,2,1] = (2 3).
        assert!(dot.contains("label=\"1: (2 3)\""), "{dot}");
        assert!(dot.contains(" -- "));
    }

    #[test]
    fn graph_cap_enforced() {
        let k = Graph::complete(80);
        assert!(matches!(
            k.strong_product(&k, 5000),
            Err(Error::GraphCap { requested: 6400, .. })
        ));
    }

    #[test]
    fn induced_subgraph_keeps_structure() {
        let c6 = Graph::cycle(6);
        let sub = c6.induced(&[0, 1, 2]);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2) && !sub.has_edge(0, 2));
    }
}
