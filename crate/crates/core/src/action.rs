//! Concrete permutation group actions: a finite set of permutations of a
//! fixed domain, closed under composition, with canonical element IDs.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::collections::HashSet;

/// Default ceiling on group order during closure and product construction.
pub const DEFAULT_ELEMENT_CAP: usize = 250_000;

/// One orbit of the action on its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Least point of the orbit.
    pub representative: usize,
    /// Sorted members.
    pub points: Vec<usize>,
}

/// A permutation group acting on `{0, .., degree-1}`.
///
/// Elements are stored sorted lexicographically by image array; an element ID
/// is its index in that list. ID 0 is always the identity. Optional point
/// labels survive re-indexed constructions (e.g. actions on k-subsets) for
/// reporting.
#[derive(Debug, Clone)]
pub struct GroupAction {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    point_labels: Option<Vec<String>>,
}

impl GroupAction {
    /// Closure of the generators under composition, BFS from the identity.
    /// Aborts with `ClosureCap` if more than `cap` elements appear.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue: Vec<Permutation> = Vec::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        queue.push(id);
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for g in &generators {
                let next = current.compose(g);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureCap { cap });
                    }
                    seen.insert(next.clone());
                    queue.push(next);
                }
            }
        }
        queue.sort_unstable();
        Ok(GroupAction { degree, generators, elements: queue, point_labels: None })
    }

    /// Wraps an element list that is already known to be a group. The list is
    /// sorted and deduplicated; closure is the caller's responsibility
    /// (checked only in debug builds).
    pub(crate) fn from_known_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let action = GroupAction { degree, generators, elements, point_labels: None };
        debug_assert!(action.order() > 0 && action.elements[0].is_identity());
        action
    }

    pub(crate) fn with_point_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.degree);
        self.point_labels = Some(labels);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    /// ID of the identity. Always 0: the identity image array is the
    /// lexicographic minimum of its degree.
    pub fn identity_id(&self) -> usize {
        debug_assert!(self.elements[0].is_identity());
        0
    }

    /// Binary search over the sorted element list.
    pub fn id_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn inverse_id(&self, id: usize) -> usize {
        self.id_of(&self.elements[id].inverse())
            .expect("group is closed under inversion")
    }

    pub fn compose_ids(&self, a: usize, b: usize) -> usize {
        self.id_of(&self.elements[a].compose(&self.elements[b]))
            .expect("group is closed under composition")
    }

    /// Human-readable label for a domain point (1-based number by default).
    pub fn point_label(&self, point: usize) -> String {
        match &self.point_labels {
            Some(labels) => labels[point].clone(),
            None => (point + 1).to_string(),
        }
    }

    pub fn point_labels(&self) -> Option<&[String]> {
        self.point_labels.as_deref()
    }

    /// Orbits of the domain, sorted by representative. Generator orbits equal
    /// group orbits, so only generators are applied.
    pub fn orbits(&self) -> Vec<Orbit> {
        let movers: &[Permutation] =
            if self.generators.is_empty() { &self.elements } else { &self.generators };
        let mut assigned = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if assigned[start] {
                continue;
            }
            let mut points = vec![start];
            assigned[start] = true;
            let mut head = 0;
            while head < points.len() {
                let x = points[head];
                head += 1;
                for g in movers {
                    let y = g.apply(x);
                    if !assigned[y] {
                        assigned[y] = true;
                        points.push(y);
                    }
                }
            }
            points.sort_unstable();
            orbits.push(Orbit { representative: start, points });
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbits().len() == 1
    }

    /// Transitive with trivial point stabilizers.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree
    }

    /// IDs of elements fixing `v`, in increasing order.
    pub fn point_stabilizer(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].apply(v) == v).collect()
    }

    pub fn stabilizer_order(&self, v: usize) -> usize {
        self.elements.iter().filter(|g| g.apply(v) == v).count()
    }

    /// Largest point stabilizer order over the whole domain. For transitive
    /// actions all stabilizers are conjugate ⇒ equal orders.
    pub fn max_stabilizer_order(&self) -> usize {
        (0..self.degree).map(|v| self.stabilizer_order(v)).max().unwrap_or(self.order())
    }

    /// IDs of elements mapping `v` to `w`, in increasing order. Empty iff `w`
    /// is outside the orbit of `v`.
    pub fn coset_ids(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].apply(v) == w).collect()
    }

    /// If the given sorted ID set equals `{g : g(v) = w}` for some pair of
    /// domain points, returns the lexicographically least such `(v, w)`.
    /// Intransitive actions are quantified over the whole domain.
    pub fn as_point_coset(&self, ids: &[usize]) -> Option<(usize, usize)> {
        if ids.is_empty() {
            return None;
        }
        for v in 0..self.degree {
            let w = self.elements[ids[0]].apply(v);
            if ids.iter().all(|&i| self.elements[i].apply(v) == w)
                && self.elements.iter().filter(|g| g.apply(v) == w).count() == ids.len()
            {
                return Some((v, w));
            }
        }
        None
    }

    /// IDs of fixed-point-free elements, in increasing order.
    pub fn derangement_ids(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].is_derangement()).collect()
    }

    /// Same domain and every element of `self` appears in `other`.
    pub fn is_subgroup_of(&self, other: &GroupAction) -> bool {
        self.degree == other.degree
            && self.elements.iter().all(|g| other.id_of(g).is_some())
    }

    /// Exhaustive closure check, for tests and debug assertions.
    pub fn verify_closed(&self) -> bool {
        for a in &self.elements {
            if self.id_of(&a.inverse()).is_none() {
                return false;
            }
            for b in &self.elements {
                if self.id_of(&a.compose(b)).is_none() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, degree).unwrap()
    }

    #[test]
    fn closure_of_s3_generators() {
        let action = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2)"), gen(3, "(1 2 3)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(action.order(), 6);
        assert!(action.is_transitive());
        assert!(!action.is_regular());
        assert!(action.verify_closed());
        assert_eq!(action.identity_id(), 0);
        assert!(action.element(0).is_identity());
    }

    #[test]
    fn closure_cap_aborts() {
        let err = GroupAction::from_generators(
            4,
            vec![gen(4, "(1 2)"), gen(4, "(1 2 3 4)")],
            10,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ClosureCap { cap: 10 }));
    }

    #[test]
    fn elements_are_sorted_and_ids_stable() {
        let action = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2 3)"), gen(3, "(1 2)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        for i in 1..action.order() {
            assert!(action.element(i - 1) < action.element(i));
        }
        for i in 0..action.order() {
            assert_eq!(action.id_of(action.element(i)), Some(i));
        }
    }

    #[test]
    fn stabilizer_and_cosets_in_s3() {
        let action = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2)"), gen(3, "(1 2 3)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(action.stabilizer_order(0), 2);
        assert_eq!(action.max_stabilizer_order(), 2);
        // {g : g(1) = 2} in 1-based terms is {(1 2), (1 2 3)}.
        let coset = action.coset_ids(0, 1);
        assert_eq!(coset.len(), 2);
        let named: Vec<String> =
            coset.iter().map(|&i| action.element(i).cycle_string()).collect();
        assert!(named.contains(&"(1 2)".to_string()));
        assert!(named.contains(&"(1 2 3)".to_string()));
        assert_eq!(action.as_point_coset(&coset), Some((0, 1)));
        let stab = action.point_stabilizer(0);
        assert_eq!(action.as_point_coset(&stab), Some((0, 0)));
    }

    #[test]
    fn non_coset_is_rejected() {
        let action = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2)"), gen(3, "(1 2 3)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let id = action.identity_id();
        let rot = action.id_of(&gen(3, "(1 2 3)")).unwrap();
        assert_eq!(action.as_point_coset(&[id, rot]), None);
        assert_eq!(action.as_point_coset(&[]), None);
    }

    #[test]
    fn derangements_of_s3() {
        let action = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2)"), gen(3, "(1 2 3)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let d = action.derangement_ids();
        let named: Vec<String> = d.iter().map(|&i| action.element(i).cycle_string()).collect();
        assert_eq!(named, vec!["(1 2 3)".to_string(), "(1 3 2)".to_string()]);
    }

    #[test]
    fn orbits_of_intransitive_action() {
        let action = GroupAction::from_generators(
            5,
            vec![gen(5, "(1 2 3)"), gen(5, "(4 5)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let orbits = action.orbits();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].points, vec![0, 1, 2]);
        assert_eq!(orbits[1].points, vec![3, 4]);
        assert!(!action.is_transitive());
        assert_eq!(action.order(), 6);
    }

    #[test]
    fn subgroup_relation() {
        let s3 = GroupAction::from_generators(
            3,
            vec![gen(3, "(1 2)"), gen(3, "(1 2 3)")],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let c3 = GroupAction::from_generators(3, vec![gen(3, "(1 2 3)")], DEFAULT_ELEMENT_CAP)
            .unwrap();
        assert!(c3.is_subgroup_of(&s3));
        assert!(!s3.is_subgroup_of(&c3));
        assert!(c3.is_regular());
    }
}
