//! Named constructions of standard group actions.

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use itertools::Itertools;

fn factorial_checked(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Symmetric group in its natural action on `n` points.
pub fn symmetric_natural(n: usize, cap: usize) -> Result<GroupAction> {
    let order = factorial_checked(n).ok_or_else(|| Error::Overflow(format!("{n}!")))?;
    if order > cap {
        return Err(Error::ElementCap { cap, needed: order });
    }
    let elements: Vec<Permutation> = (0..n)
        .permutations(n)
        .map(|im| Permutation::from_images(im).unwrap())
        .collect();
    let generators = symmetric_generators(n);
    Ok(GroupAction::from_known_elements(n, generators, elements))
}

fn symmetric_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => vec![],
        2 => vec![Permutation::from_cycle(2, &[0, 1]).unwrap()],
        _ => vec![
            Permutation::from_cycle(n, &[0, 1]).unwrap(),
            Permutation::from_cycle(n, &(0..n).collect::<Vec<_>>()).unwrap(),
        ],
    }
}

/// Alternating group in its natural action on `n` points.
pub fn alternating_natural(n: usize, cap: usize) -> Result<GroupAction> {
    let order = factorial_checked(n).ok_or_else(|| Error::Overflow(format!("{n}!")))?;
    let order = if n >= 2 { order / 2 } else { order };
    if order > cap {
        return Err(Error::ElementCap { cap, needed: order });
    }
    let elements: Vec<Permutation> = (0..n)
        .permutations(n)
        .map(|im| Permutation::from_images(im).unwrap())
        .filter(Permutation::is_even)
        .collect();
    let generators = match n {
        0..=2 => vec![],
        3 => vec![Permutation::from_cycle(3, &[0, 1, 2]).unwrap()],
        _ => vec![
            Permutation::from_cycle(n, &[0, 1, 2]).unwrap(),
            if n % 2 == 0 {
                // (2 3 .. n): a cycle of odd length, hence even.
                Permutation::from_cycle(n, &(1..n).collect::<Vec<_>>()).unwrap()
            } else {
                Permutation::from_cycle(n, &(0..n).collect::<Vec<_>>()).unwrap()
            },
        ],
    };
    Ok(GroupAction::from_known_elements(n, generators, elements))
}

/// Cyclic group of order `n` acting regularly by rotation.
pub fn cyclic_regular(n: usize) -> Result<GroupAction> {
    if n == 0 {
        return Err(Error::Spec("cyclic group needs n >= 1".into()));
    }
    let elements: Vec<Permutation> = (0..n)
        .map(|k| {
            Permutation::from_images((0..n).map(|x| (x + k) % n).collect()).unwrap()
        })
        .collect();
    let generators = if n == 1 {
        vec![]
    } else {
        vec![Permutation::from_cycle(n, &(0..n).collect::<Vec<_>>()).unwrap()]
    };
    Ok(GroupAction::from_known_elements(n, generators, elements))
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon:
/// rotations `x -> x+k` and reflections `x -> j-x` (mod `n`). Needs `n >= 3`.
pub fn dihedral_natural(n: usize) -> Result<GroupAction> {
    if n < 3 {
        return Err(Error::Spec("dihedral action needs n >= 3".into()));
    }
    let mut elements = Vec::with_capacity(2 * n);
    for k in 0..n {
        elements.push(
            Permutation::from_images((0..n).map(|x| (x + k) % n).collect()).unwrap(),
        );
    }
    for j in 0..n {
        elements.push(
            Permutation::from_images((0..n).map(|x| (n + j - x) % n).collect()).unwrap(),
        );
    }
    let generators = vec![
        Permutation::from_cycle(n, &(0..n).collect::<Vec<_>>()).unwrap(),
        Permutation::from_images((0..n).map(|x| (n - x) % n).collect()).unwrap(),
    ];
    Ok(GroupAction::from_known_elements(n, generators, elements))
}

/// Trivial group acting on `degree` points.
pub fn trivial(degree: usize) -> GroupAction {
    GroupAction::from_known_elements(degree, vec![], vec![Permutation::identity(degree)])
}

/// The left regular action of an abstract group presented by any faithful
/// action: `g` sends (the ID of) `h` to (the ID of) `g∘h`. Degree = order.
pub fn left_regular(inner: &GroupAction, cap: usize) -> Result<GroupAction> {
    let order = inner.order();
    if order > cap {
        return Err(Error::ElementCap { cap, needed: order });
    }
    let elements: Vec<Permutation> = inner
        .elements()
        .iter()
        .map(|g| {
            let images = inner
                .elements()
                .iter()
                .map(|h| inner.id_of(&g.compose(h)).expect("closed"))
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let generators = inner
        .generators()
        .iter()
        .map(|g| {
            let images = inner
                .elements()
                .iter()
                .map(|h| inner.id_of(&g.compose(h)).expect("closed"))
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let labels = inner.elements().iter().map(|g| g.cycle_string()).collect();
    Ok(GroupAction::from_known_elements(order, generators, elements).with_point_labels(labels))
}

/// Induced action on the k-element subsets of the domain, in lexicographic
/// order. Rejects non-faithful inductions (distinct elements inducing the
/// same subset permutation).
pub fn on_k_subsets(inner: &GroupAction, k: usize) -> Result<GroupAction> {
    let d = inner.degree();
    if k == 0 || k > d {
        return Err(Error::Spec(format!("k-subset action needs 1 <= k <= degree, got k={k}")));
    }
    let subsets: Vec<Vec<usize>> = (0..d).combinations(k).collect();
    let index_of = |s: &[usize]| -> usize {
        subsets.binary_search_by(|probe| probe.as_slice().cmp(s)).expect("subset enumerated")
    };
    let induce = |g: &Permutation| -> Permutation {
        let images = subsets
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
                t.sort_unstable();
                index_of(&t)
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let mut seen = std::collections::HashSet::new();
    let mut elements = Vec::with_capacity(inner.order());
    for g in inner.elements() {
        let induced = induce(g);
        if !seen.insert(induced.clone()) {
            return Err(Error::NotFaithful { degree: d, k });
        }
        elements.push(induced);
    }
    let generators = inner.generators().iter().map(induce).collect();
    let labels = subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|&x| (x + 1).to_string()).join(" ")))
        .collect();
    Ok(GroupAction::from_known_elements(subsets.len(), generators, elements)
        .with_point_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP as CAP;

    #[test]
    fn symmetric_groups_small() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let s = symmetric_natural(n, CAP).unwrap();
            assert_eq!(s.order(), order, "order of S{n}");
            assert!(s.verify_closed());
            if n >= 2 {
                assert!(s.is_transitive());
            }
            // Generators really generate.
            let closure =
                GroupAction::from_generators(n, s.generators().to_vec(), CAP).unwrap();
            assert_eq!(closure.order(), order);
        }
    }

    #[test]
    fn alternating_groups_small() {
        for (n, order) in [(3, 3), (4, 12), (5, 60), (6, 360)] {
            let a = alternating_natural(n, CAP).unwrap();
            assert_eq!(a.order(), order, "order of A{n}");
            assert!(a.elements().iter().all(Permutation::is_even));
            assert!(a.verify_closed());
            let closure =
                GroupAction::from_generators(n, a.generators().to_vec(), CAP).unwrap();
            assert_eq!(closure.order(), order);
        }
    }

    #[test]
    fn cyclic_regular_properties() {
        for n in 1..=8 {
            let c = cyclic_regular(n).unwrap();
            assert_eq!(c.order(), n);
            assert!(c.is_regular());
            assert!(c.verify_closed());
            // All non-identity elements of a regular action are derangements.
            assert_eq!(c.derangement_ids().len(), n - 1);
        }
    }

    #[test]
    fn dihedral_orders_and_membership() {
        for n in 3..=6 {
            let d = dihedral_natural(n).unwrap();
            assert_eq!(d.order(), 2 * n);
            assert!(d.is_transitive());
            assert!(d.verify_closed());
            let s = symmetric_natural(n, CAP).unwrap();
            assert!(d.is_subgroup_of(&s));
            let c = cyclic_regular(n).unwrap();
            assert!(c.is_subgroup_of(&d));
        }
        assert!(dihedral_natural(2).is_err());
    }

    #[test]
    fn left_regular_of_s3() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let reg = left_regular(&s3, CAP).unwrap();
        assert_eq!(reg.degree(), 6);
        assert_eq!(reg.order(), 6);
        assert!(reg.is_regular());
        assert!(reg.verify_closed());
        assert_eq!(reg.derangement_ids().len(), 5);
        assert_eq!(reg.point_label(0), "()");
    }

    #[test]
    fn a5_on_2_subsets() {
        let a5 = alternating_natural(5, CAP).unwrap();
        let pairs = on_k_subsets(&a5, 2).unwrap();
        assert_eq!(pairs.degree(), 10);
        assert_eq!(pairs.order(), 60);
        assert!(pairs.is_transitive());
        assert!(pairs.verify_closed());
        assert_eq!(pairs.stabilizer_order(0), 6);
        assert_eq!(pairs.point_label(0), "{1 2}");
    }

    #[test]
    fn k_equal_degree_collapses_and_is_rejected() {
        // k = degree gives a single point; any non-trivial group collapses.
        let s3 = symmetric_natural(3, CAP).unwrap();
        assert!(matches!(on_k_subsets(&s3, 3), Err(Error::NotFaithful { .. })));
    }

    #[test]
    fn s4_on_2_subsets_faithful() {
        let s4 = symmetric_natural(4, CAP).unwrap();
        let pairs = on_k_subsets(&s4, 2).unwrap();
        assert_eq!(pairs.degree(), 6);
        assert_eq!(pairs.order(), 24);
        assert!(pairs.is_transitive());
    }

    #[test]
    fn trivial_group() {
        let t = trivial(1);
        assert_eq!(t.order(), 1);
        assert_eq!(t.degree(), 1);
        assert!(t.is_transitive());
        assert!(!trivial(3).is_transitive());
    }

    #[test]
    fn element_cap_respected() {
        assert!(matches!(symmetric_natural(9, 1000), Err(Error::ElementCap { .. })));
    }
}
