// Algebra and serialization laws on random inputs. Degrees stay small so
// every case is instant; the value is in hitting the code paths from many
// directions, not in the combinatorics.

use proptest::prelude::*;

use derange::graph::Graph;
use derange::product::{self, WreathElement};
use derange::Permutation;

/// Rank a vector of arbitrary keys to get a permutation. Ties break by
/// index, so the map is always a bijection.
fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<u32>(), degree).prop_map(|keys| {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by_key(|&i| (keys[i], i));
        let mut images = vec![0; keys.len()];
        for (rank, &i) in idx.iter().enumerate() {
            images[i] = rank;
        }
        Permutation::from_images(images).expect("ranking is a bijection")
    })
}

/// Loop-free graph from one bit per unordered vertex pair.
fn graph(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let mut g = Graph::new(n);
        let mut k = 0;
        for v in 0..n {
            for w in v + 1..n {
                if bits[k] {
                    g.add_edge(v, w);
                }
                k += 1;
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative(p in perm(7), q in perm(7), r in perm(7)) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn compose_applies_the_right_factor_first(p in perm(6), q in perm(6), x in 0usize..6) {
        prop_assert_eq!(p.compose(&q).apply(x), p.apply(q.apply(x)));
    }

    #[test]
    fn inverse_cancels_on_both_sides(p in perm(8)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn cycle_string_round_trips(p in perm(9)) {
        let parsed = Permutation::parse_cycles(&p.cycle_string(), 9).unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn derangement_agrees_with_fixed_points(p in perm(7)) {
        prop_assert_eq!(p.is_derangement(), p.fixed_points().is_empty());
        prop_assert_eq!(p.has_fixed_point(), !p.fixed_points().is_empty());
    }

    #[test]
    fn pair_flattening_round_trips(p in perm(4), q in perm(5)) {
        let flat = product::flatten_pair(&p, &q);
        prop_assert_eq!(product::split_pair(&flat, 4, 5), Some((p, q)));
    }

    #[test]
    fn block_flattening_round_trips(p in perm(3), q in perm(4), r in perm(2)) {
        let flat = product::flatten_blocks(&[&p, &q, &r]);
        prop_assert_eq!(product::split_blocks(&flat, &[3, 4, 2]), Some(vec![p, q, r]));
    }

    #[test]
    fn adjacency_text_round_trips(g in graph(9)) {
        let text = g.to_adjacency_text();
        let back = Graph::from_adjacency_text(&text).unwrap();
        let identity: Vec<usize> = (0..9).collect();
        prop_assert!(g.equal_under_bijection(&back, &identity));
        prop_assert_eq!(back.to_adjacency_text(), text);
    }

    #[test]
    fn complement_is_an_involution_off_the_diagonal(g in graph(8)) {
        let identity: Vec<usize> = (0..8).collect();
        prop_assert!(g.complement().complement().equal_under_bijection(&g, &identity));
    }

    #[test]
    fn wreath_algebra_matches_the_flattened_action(
        xs in prop::collection::vec(perm(3), 3),
        ys in prop::collection::vec(perm(3), 3),
        a in perm(3),
        b in perm(3),
    ) {
        let x = WreathElement { inner: xs, outer: a };
        let y = WreathElement { inner: ys, outer: b };
        prop_assert_eq!(x.multiply(&y).flatten(), x.flatten().compose(&y.flatten()));
        prop_assert_eq!(x.invert().flatten(), x.flatten().inverse());
        prop_assert_eq!(WreathElement::unflatten(&x.flatten(), 3, 3), Some(x.clone()));
        prop_assert_eq!(x.multiply(&x.invert()).flatten(), Permutation::identity(9));
    }
}
