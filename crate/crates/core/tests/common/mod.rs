#![allow(dead_code)]

use proptest::prelude::*;
use treedyn::generate::{enumerate_trees, from_prufer, make_path};
use treedyn::{Coloring, Tree};

/// Uniform labelled trees on `2..=max_n` nodes via Prüfer sequences.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| from_prufer(n, &seq).unwrap())
    })
}

pub fn arb_tree_and_coloring(max_n: usize) -> impl Strategy<Value = (Tree, Coloring)> {
    arb_tree(max_n).prop_flat_map(|t| {
        let n = t.n();
        proptest::collection::vec(0u8..2, n).prop_map(move |bits| (t.clone(), Coloring::from_fn(n, |v| bits[v])))
    })
}

pub fn all_trees(max_n: usize) -> Vec<Tree> {
    (1..=max_n).flat_map(|n| enumerate_trees(n).unwrap()).collect()
}

pub fn single_node() -> Tree {
    make_path(1).unwrap()
}
