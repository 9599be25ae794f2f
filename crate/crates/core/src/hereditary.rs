//! Output-sensitive enumeration of a hereditary family of edge subsets.
//!
//! Both legal-set families used here are closed under taking subsets and
//! are defined by a per-node budget on `F_v`. The enumerator walks the edge
//! universe once; for every edge it tries to extend each set found so far
//! (only the sets present before the edge was reached) and keeps the legal
//! extensions. Every legal set is produced exactly once.

use crate::edges::EdgeSubset;
use crate::tree::{EdgeId, NodeId, Tree};

/// Per-node incidence budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// `2 F_v <= deg(v)`.
    AtMostHalf,
    /// `2 F_v < deg(v)`.
    BelowHalf,
}

impl Budget {
    #[inline]
    pub fn allows(self, fv: usize, degree: usize) -> bool {
        match self {
            Budget::AtMostHalf => 2 * fv <= degree,
            Budget::BelowHalf => 2 * fv < degree,
        }
    }

    /// Whether every node of `tree` respects the budget under `f`.
    pub fn admits(self, tree: &Tree, f: &EdgeSubset) -> bool {
        (0..tree.n()).all(|v| self.allows(f.fv(v), tree.degree(v)))
    }
}

#[derive(Clone, Debug)]
pub struct Algorithm1Run {
    /// All legal subsets in production order.
    pub sets: Vec<EdgeSubset>,
    /// `stage_sizes[0]` is the family size before the first edge,
    /// `stage_sizes[i + 1]` after processing the i-th universe edge.
    pub stage_sizes: Vec<usize>,
}

impl Algorithm1Run {
    /// Stages violating `4 |S_{i+1}| >= 5 |S_i|`, as `(i, |S_i|, |S_{i+1}|)`.
    pub fn ratio_violations(&self) -> Vec<(usize, usize, usize)> {
        self.stage_sizes
            .windows(2)
            .enumerate()
            .filter(|(_, w)| 4 * w[1] < 5 * w[0])
            .map(|(i, w)| (i, w[0], w[1]))
            .collect()
    }
}

fn endpoint_allows(tree: &Tree, budget: Budget, x: &EdgeSubset, v: NodeId) -> bool {
    budget.allows(x.fv(v) + 1, tree.degree(v))
}

/// Enumerates every subset of `universe` respecting `budget` at every node.
///
/// `universe` must list distinct edge ids; the processing order is the
/// given order.
pub fn algorithm1(tree: &Tree, universe: &[EdgeId], budget: Budget) -> Algorithm1Run {
    let empty = EdgeSubset::empty(tree);
    if !budget.admits(tree, &empty) {
        return Algorithm1Run {
            sets: Vec::new(),
            stage_sizes: vec![0; universe.len() + 1],
        };
    }
    let mut sets = vec![empty];
    let mut stage_sizes = Vec::with_capacity(universe.len() + 1);
    stage_sizes.push(1);
    for &e in universe {
        let (u, w) = tree.edge(e);
        let count = sets.len();
        for i in 0..count {
            let x = &sets[i];
            if endpoint_allows(tree, budget, x, u) && endpoint_allows(tree, budget, x, w) {
                let extended = x.with(tree, e);
                sets.push(extended);
            }
        }
        stage_sizes.push(sets.len());
    }
    Algorithm1Run { sets, stage_sizes }
}
