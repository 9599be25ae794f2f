mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{all_trees, arb_tree};
use treedyn::dynamics::{step, Coloring, ProcessKind};
use treedyn::edges::{edge_class, EdgeClass};
use treedyn::fixed::{
    check_count_bounds, coloring_from_fix, count_fix, enumerate_fix, enumerate_fix_recursive, fib_bound, fibonacci,
    fix_set_from_coloring, fix_sets, is_fix_legal,
};
use treedyn::generate::{make_full_binary, make_path, make_star};
use treedyn::oracle::brute_force;
use treedyn::{EdgeSubset, Tree};

#[test]
fn fixed_sets_match_oracle_up_to_ten() {
    for t in all_trees(10) {
        for kind in ProcessKind::BOTH {
            let ours: BTreeSet<Coloring> = enumerate_fix(&t, kind).all_colorings().into_iter().collect();
            assert_eq!(ours, brute_force(&t, kind).unwrap().fixed, "{:?} {kind}", t.edges());
        }
    }
}

#[test]
fn representatives_are_distinct_with_vstar_zero() {
    for t in all_trees(9) {
        let result = enumerate_fix(&t, ProcessKind::Minority);
        let distinct: BTreeSet<_> = result.items.iter().map(|r| r.coloring.clone()).collect();
        assert_eq!(distinct.len(), result.items.len());
        assert!(result.items.iter().all(|r| r.coloring.get(0) == 0));
        assert_eq!(result.total, 2 * result.items.len());
    }
}

#[test]
fn count_only_equals_materialized() {
    for t in all_trees(10) {
        for kind in ProcessKind::BOTH {
            assert_eq!(count_fix(&t, kind) as usize, enumerate_fix(&t, kind).items.len());
        }
    }
}

#[test]
fn both_processes_have_equal_counts() {
    for t in all_trees(10) {
        assert_eq!(count_fix(&t, ProcessKind::Minority), count_fix(&t, ProcessKind::Majority));
    }
}

#[test]
fn paths_follow_fibonacci() {
    for n in 4..=16 {
        let p = make_path(n).unwrap();
        assert_eq!(enumerate_fix(&p, ProcessKind::Minority).total as u128, 2 * fibonacci(n - 1));
        assert_eq!(fib_bound(n, 2), 2 * fibonacci(n - 1));
    }
    let p6 = make_path(6).unwrap();
    assert_eq!(check_count_bounds(&p6, 10).unwrap().upper, 10);
}

#[test]
fn near_star_on_five_nodes_has_four() {
    let t = Tree::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
    assert_eq!(t.max_degree(), 3);
    for kind in ProcessKind::BOTH {
        assert_eq!(enumerate_fix(&t, kind).total, 4);
    }
    assert_eq!(enumerate_fix(&make_star(5).unwrap(), ProcessKind::Majority).total, 2);
}

#[test]
fn bounds_hold_on_small_trees() {
    for t in all_trees(11) {
        let total = 2 * count_fix(&t, ProcessKind::Minority) as u128;
        check_count_bounds(&t, total).unwrap();
    }
}

#[test]
fn binary_tree_recurrence() {
    let f: Vec<u128> = (0..=5).map(|h| count_fix(&make_full_binary(h).unwrap(), ProcessKind::Majority) as u128).collect();
    assert_eq!(&f[..4], &[1, 1, 3, 15]);
    for h in 2..=5 {
        assert_eq!(f[h], f[h - 1] * (f[h - 1] + 2 * f[h - 2] * f[h - 2]), "h = {h}");
    }
}

/// With edges taken in an arbitrary order the per-edge growth can fall
/// below 5/4; breadth-first order from `v*` keeps it.
#[test]
fn growth_ratio_needs_breadth_first_order() {
    let t = Tree::new(10, &[(0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7), (4, 8), (5, 9), (0, 1)]).unwrap();
    let e2 = edge_class(&t, EdgeClass::E2).to_vec();
    let input_order = treedyn::hereditary::algorithm1(&t, &e2, treedyn::hereditary::Budget::AtMostHalf);
    assert!(!input_order.ratio_violations().is_empty());
    assert!(fix_sets(&t).ratio_violations().is_empty());
    assert_eq!(input_order.sets.len(), fix_sets(&t).sets.len());
}

#[test]
fn recursive_enumerator_matches_on_small_trees() {
    for t in all_trees(9) {
        for kind in ProcessKind::BOTH {
            let a: BTreeSet<_> = enumerate_fix(&t, kind).items.into_iter().map(|r| (r.edges, r.coloring)).collect();
            let b: BTreeSet<_> = enumerate_fix_recursive(&t, kind)
                .items
                .into_iter()
                .map(|r| (r.edges, r.coloring))
                .collect();
            assert_eq!(a, b);
        }
    }
}

/// Four-node path hanging off a tree: total(T) = total(T - v0) + total(T - v0 - v1).
#[test]
fn pendant_path_additivity_on_all_small_trees() {
    for base in all_trees(8) {
        for a in 0..base.n() {
            let n = base.n();
            let t = base.with_leaf(a).unwrap().with_leaf(n).unwrap().with_leaf(n + 1).unwrap();
            let t0 = t.without_leaf(n + 2).unwrap();
            let t1 = t0.without_leaf(n + 1).unwrap();
            let kind = ProcessKind::Minority;
            assert_eq!(count_fix(&t, kind), count_fix(&t0, kind) + count_fix(&t1, kind));
        }
    }
}

fn arb_small_tree_with_index() -> impl Strategy<Value = (Tree, prop::sample::Index)> {
    (arb_tree(16), any::<prop::sample::Index>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bijection_round_trips(t in arb_tree(18)) {
        for kind in ProcessKind::BOTH {
            for r in enumerate_fix(&t, kind).items {
                prop_assert!(is_fix_legal(&t, &r.edges));
                prop_assert_eq!(step(&t, &r.coloring, kind).unwrap(), r.coloring.clone());
                prop_assert_eq!(coloring_from_fix(&t, &r.edges, kind).unwrap(), r.coloring.clone());
                prop_assert_eq!(fix_set_from_coloring(&t, &r.coloring, kind).unwrap(), r.edges.clone());
                prop_assert_eq!(fix_set_from_coloring(&t, &r.coloring.complement(), kind).unwrap(), r.edges);
            }
        }
    }

    #[test]
    fn subsets_of_legal_sets_are_legal((t, pick) in arb_small_tree_with_index()) {
        let sets = fix_sets(&t).sets;
        let f = &sets[pick.index(sets.len())];
        let members = f.to_vec();
        for mask in 0u32..(1 << members.len().min(10)) {
            let sub = EdgeSubset::from_edges(&t, members.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            prop_assert!(is_fix_legal(&t, &sub));
        }
    }

    #[test]
    fn growth_ratio_on_random_trees(t in arb_tree(40)) {
        prop_assert!(fix_sets(&t).ratio_violations().is_empty());
    }

    #[test]
    fn leaf_removal_at_leaf_heavy_node((t, pick) in arb_small_tree_with_index()) {
        let w = pick.index(t.n());
        let mut grown = t.clone();
        for _ in 0..=t.degree(w) {
            grown = grown.with_leaf(w).unwrap();
        }
        let reduced = grown.without_leaf(grown.n() - 1).unwrap();
        prop_assert_eq!(count_fix(&grown, ProcessKind::Majority), count_fix(&reduced, ProcessKind::Majority));
    }
}
