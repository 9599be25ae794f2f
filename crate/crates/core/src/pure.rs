//! Pure 2-cycles as strictly legal subsets of E³.
//!
//! A subset `F` of E³ is legal when `2 F_v < deg(v)` at every node. Under the
//! minority process `F` is the set of multichromatic edges of the pure
//! 2-cycle, under the majority process the set of monochromatic edges.

use crate::dynamics::{classify, Classification, Coloring, ProcessKind};
use crate::edges::{edge_class, EdgeClass, EdgeSubset};
use crate::error::{Error, Result};
use crate::fixed::{class_in_bfs_order, edges_by_color_relation, parity_coloring};
use crate::fixed::{EnumerationResult, Family, Representative};
use crate::hereditary::{algorithm1, Algorithm1Run, Budget};
use crate::tree::Tree;

pub fn is_pure_legal(tree: &Tree, f: &EdgeSubset) -> bool {
    f.universe_len() == tree.edge_count()
        && f.is_subset_of(&edge_class(tree, EdgeClass::E3))
        && Budget::BelowHalf.admits(tree, f)
}

pub fn pure_sets(tree: &Tree) -> Algorithm1Run {
    algorithm1(tree, &class_in_bfs_order(tree, EdgeClass::E3), Budget::BelowHalf)
}

fn pure_flips_on_member(kind: ProcessKind) -> bool {
    kind == ProcessKind::Minority
}

pub fn enumerate_pure(tree: &Tree, kind: ProcessKind) -> EnumerationResult {
    let items = pure_sets(tree)
        .sets
        .into_iter()
        .map(|edges| {
            let coloring = parity_coloring(tree, &edges, pure_flips_on_member(kind));
            Representative { edges, coloring }
        })
        .collect();
    EnumerationResult::new(kind, Family::Pure, items)
}

pub fn coloring_from_pure(tree: &Tree, f: &EdgeSubset, kind: ProcessKind) -> Result<Coloring> {
    if !is_pure_legal(tree, f) {
        return Err(Error::IllegalSet(format!("{f:?} is not pure-legal")));
    }
    Ok(parity_coloring(tree, f, pure_flips_on_member(kind)))
}

pub fn pure_set_from_coloring(tree: &Tree, c: &Coloring, kind: ProcessKind) -> Result<EdgeSubset> {
    if classify(tree, c, kind)? != Classification::PureTwoCycle {
        return Err(Error::NotPure);
    }
    Ok(edges_by_color_relation(tree, c, kind == ProcessKind::Majority))
}

/// `total^2 <= 2^{n-2}`, i.e. `total <= 2^{1 + (n-4)/2}`. Only meaningful
/// for `n >= 4`.
pub fn within_pure_bound(n: usize, total: u128) -> bool {
    n >= 4 && (n - 2 >= 127 || total.saturating_mul(total) <= 1u128 << (n - 2))
}
