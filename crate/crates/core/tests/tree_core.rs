mod common;

use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{all_trees, arb_tree};
use treedyn::edges::{edge_class, EdgeClass};
use treedyn::forest::remove_edges;
use treedyn::generate::{canonical_form, enumerate_trees, from_prufer, make_comb, random_tree_with};
use treedyn::io::{parse_tree, write_tree};
use treedyn::{EdgeSubset, Error, Tree};

#[test]
fn build_errors_name_the_violation() {
    assert!(matches!(Tree::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]), Err(Error::Cyclic(_))));
    assert!(matches!(Tree::new(3, &[(0, 1), (1, 5)]), Err(Error::BadIndex(_))));
    assert!(matches!(Tree::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(1, 0))));
    assert!(matches!(Tree::new(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected(_))));
    assert!(matches!(Tree::new(2, &[(1, 1)]), Err(Error::Cyclic(_))));
    let star = Tree::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert_eq!(star.degree(0), 4);
    assert_eq!(star.vstar(), 0);
}

#[test]
fn free_tree_counts() {
    let counts: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
}

/// Every labelled tree, deduplicated by the canonical form, must give
/// exactly the classes `enumerate_trees` produces.
#[test]
fn enumeration_matches_prufer_dedup() {
    for n in 2usize..=8 {
        let mut classes = BTreeSet::new();
        let total = n.pow((n - 2) as u32);
        for index in 0..total {
            let mut x = index;
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect();
            classes.insert(canonical_form(&from_prufer(n, &seq).unwrap()));
        }
        let enumerated: BTreeSet<String> = enumerate_trees(n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(enumerated.len(), enumerate_trees(n).unwrap().len(), "duplicates at n = {n}");
        assert_eq!(classes, enumerated, "n = {n}");
    }
}

#[test]
fn random_trees_on_four_nodes_follow_labelled_counts() {
    // 16 labelled trees on 4 nodes: 12 paths, 4 stars.
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples = 100_000;
    let mut stars = 0usize;
    for _ in 0..samples {
        if random_tree_with(4, &mut rng).unwrap().max_degree() == 3 {
            stars += 1;
        }
    }
    let p = 0.25;
    let mean = samples as f64 * p;
    let sigma = (samples as f64 * p * (1.0 - p)).sqrt();
    assert!((stars as f64 - mean).abs() <= 3.0 * sigma, "{stars} stars of {samples}");
}

#[test]
fn comb_classes() {
    for n in (6..=20).step_by(2) {
        let h = make_comb(n).unwrap();
        assert_eq!(2 * edge_class(&h, EdgeClass::E3).len(), n - 4);
        assert_eq!(h.degrees().iter().filter(|&&d| d == 3).count(), (n - 2) / 2);
    }
}

#[test]
fn degenerate_trees_have_empty_classes() {
    for t in all_trees(2) {
        for class in [EdgeClass::E2, EdgeClass::E3, EdgeClass::E25] {
            assert!(edge_class(&t, class).is_empty());
        }
    }
}

#[test]
fn text_format_round_trips_for_small_trees() {
    for t in all_trees(8) {
        assert_eq!(parse_tree(&write_tree(&t)).unwrap(), t);
    }
}

fn arb_tree_and_subset(max_n: usize) -> impl Strategy<Value = (Tree, EdgeSubset)> {
    arb_tree(max_n).prop_flat_map(|t| {
        let m = t.edge_count();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let f = EdgeSubset::from_edges(&t, (0..m).filter(|&e| keep[e])).unwrap();
            (t.clone(), f)
        })
    })
}

proptest! {
    #[test]
    fn tree_invariants(t in arb_tree(40)) {
        let n = t.n();
        prop_assert_eq!(t.edge_count(), n - 1);
        prop_assert_eq!(t.degrees().iter().sum::<usize>(), 2 * (n - 1));
        prop_assert_eq!(t.bfs_order().len(), n);
        prop_assert_eq!(t.bfs_order()[0], 0);
    }

    #[test]
    fn edge_classes_nest(t in arb_tree(40)) {
        let e2 = edge_class(&t, EdgeClass::E2);
        let e25 = edge_class(&t, EdgeClass::E25);
        let e3 = edge_class(&t, EdgeClass::E3);
        prop_assert!(e3.is_subset_of(&e25));
        prop_assert!(e25.is_subset_of(&e2));
        for e in 0..t.edge_count() {
            let (u, w) = t.edge(e);
            let (a, b) = (t.degree(u).min(t.degree(w)), t.degree(u).max(t.degree(w)));
            prop_assert_eq!(e2.contains(e), a >= 2);
            prop_assert_eq!(e3.contains(e), a >= 3);
            prop_assert_eq!(e25.contains(e), a >= 2 && b >= 3);
        }
        if t.n() >= 4 {
            prop_assert!(2 * e3.len() + 4 <= t.n());
        }
    }

    #[test]
    fn incidence_counts_match((t, f) in arb_tree_and_subset(30)) {
        for v in 0..t.n() {
            let expected = t.neighbors(v).iter().filter(|&&(_, e)| f.contains(e)).count();
            prop_assert_eq!(f.fv(v), expected);
        }
    }

    #[test]
    fn forest_partitions_and_bipartition((t, f) in arb_tree_and_subset(30)) {
        let forest = remove_edges(&t, &f);
        prop_assert_eq!(forest.len(), f.len() + 1);
        let mut seen = vec![false; t.n()];
        for (c, nodes) in forest.components().iter().enumerate() {
            for &v in nodes {
                prop_assert!(!seen[v]);
                seen[v] = true;
                prop_assert_eq!(forest.component_of(v), c);
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        // Same component iff the tree edge is kept.
        for e in 0..t.edge_count() {
            let (u, w) = t.edge(e);
            prop_assert_eq!(forest.component_of(u) == forest.component_of(w), !f.contains(e));
        }
        prop_assert_eq!(forest.side(forest.component_of(0)), 0);
        prop_assert_eq!(forest.quotient_edges().len(), f.len());
        let mut quotient_edges = HashMap::new();
        for &(a, b, e) in forest.quotient_edges() {
            prop_assert_ne!(forest.side(a), forest.side(b));
            prop_assert!(quotient_edges.insert(e, (a, b)).is_none());
        }
    }

    #[test]
    fn leaf_growth_and_removal_invert(t in arb_tree(20), pick in any::<prop::sample::Index>()) {
        let v = pick.index(t.n());
        let grown = t.with_leaf(v).unwrap();
        prop_assert_eq!(grown.n(), t.n() + 1);
        prop_assert_eq!(grown.without_leaf(t.n()).unwrap(), t);
    }

    #[test]
    fn canonical_form_is_label_invariant(t in arb_tree(14), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..t.n()).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<_> = t.edges().iter().map(|&(u, w)| (perm[u], perm[w])).collect();
        let relabelled = Tree::new(t.n(), &edges).unwrap();
        prop_assert_eq!(canonical_form(&t), canonical_form(&relabelled));
    }
}
