//! Edge subsets and the degree-defined edge classes E², E³ and E^{2.5}.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::tree::{EdgeId, NodeId, Tree};

/// A subset of a tree's edges with cached per-node incidence counts `F_v`.
///
/// Equality, ordering and hashing look at the member edges only.
#[derive(Clone)]
pub struct EdgeSubset {
    members: Bits,
    fv: Vec<u32>,
}

impl EdgeSubset {
    pub fn empty(tree: &Tree) -> Self {
        Self {
            members: Bits::zeros(tree.edge_count()),
            fv: vec![0; tree.n()],
        }
    }

    pub fn from_edges<I>(tree: &Tree, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut out = Self::empty(tree);
        for e in edges {
            if e >= tree.edge_count() {
                return Err(Error::BadIndex(format!(
                    "edge {e} with {} edges",
                    tree.edge_count()
                )));
            }
            out.insert(tree, e);
        }
        Ok(out)
    }

    /// Subset from a bit mask over edge indices (`m <= 64`).
    pub fn from_mask(tree: &Tree, mask: u64) -> Self {
        let members = Bits::from_word(tree.edge_count(), mask);
        let mut fv = vec![0; tree.n()];
        for e in members.iter_ones() {
            let (u, w) = tree.edge(e);
            fv[u] += 1;
            fv[w] += 1;
        }
        Self { members, fv }
    }

    /// Adds `e`; a no-op when already present.
    pub fn insert(&mut self, tree: &Tree, e: EdgeId) {
        if !self.members.get(e) {
            self.members.set(e, true);
            let (u, w) = tree.edge(e);
            self.fv[u] += 1;
            self.fv[w] += 1;
        }
    }

    pub fn remove(&mut self, tree: &Tree, e: EdgeId) {
        if self.members.get(e) {
            self.members.set(e, false);
            let (u, w) = tree.edge(e);
            self.fv[u] -= 1;
            self.fv[w] -= 1;
        }
    }

    pub fn with(&self, tree: &Tree, e: EdgeId) -> Self {
        let mut out = self.clone();
        out.insert(tree, e);
        out
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.get(e)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Size of the owning tree's edge index space.
    pub fn universe_len(&self) -> usize {
        self.members.len()
    }

    /// Member edges in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.iter_ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    /// `F_v`: number of member edges incident to `v`.
    pub fn fv(&self, v: NodeId) -> usize {
        self.fv[v] as usize
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.members.is_subset_of(&other.members)
    }
}

impl PartialEq for EdgeSubset {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for EdgeSubset {}

impl Hash for EdgeSubset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Degree predicate defining an edge class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Both end nodes have degree at least two.
    E2,
    /// Both end nodes have degree at least three.
    E3,
    /// One end node has degree at least two, the other at least three.
    E25,
}

impl EdgeClass {
    pub fn admits(self, deg_u: usize, deg_w: usize) -> bool {
        let (lo, hi) = (deg_u.min(deg_w), deg_u.max(deg_w));
        match self {
            EdgeClass::E2 => lo >= 2,
            EdgeClass::E3 => lo >= 3,
            EdgeClass::E25 => lo >= 2 && hi >= 3,
        }
    }
}

pub fn edge_class(tree: &Tree, class: EdgeClass) -> EdgeSubset {
    let mut out = EdgeSubset::empty(tree);
    for (e, &(u, w)) in tree.edges().iter().enumerate() {
        if class.admits(tree.degree(u), tree.degree(w)) {
            out.insert(tree, e);
        }
    }
    out
}
