//! Block trees of general 2-cycles.
//!
//! The fixed and toggle nodes of a 2-cycle split the tree into blocks; the
//! edges between blocks form the block edge set `F`, and contracting the
//! blocks gives the quotient tree `T_F`. Block edge sets are exactly the
//! subsets `F` of E^{2.5} where singleton components have even degree, the
//! "fixed" components of `T \ F` all lie on one side of `T_F`, and `F` is
//! not empty with a fixed single component.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dynamics::{classify, node_roles, roles_consistent, Classification, Coloring, NodeRole, ProcessKind};
use crate::edges::{edge_class, EdgeClass, EdgeSubset};
use crate::error::{Error, Result};
use crate::forest::{remove_edges, ComponentForest};
use crate::tree::{NodeId, Tree};

/// Largest |E^{2.5}| for which [`enumerate_block`] scans all subsets.
pub const MAX_BLOCK_UNIVERSE: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Fixed,
    Toggle,
}

impl From<NodeRole> for BlockKind {
    fn from(role: NodeRole) -> Self {
        match role {
            NodeRole::Fixed => BlockKind::Fixed,
            NodeRole::Toggle => BlockKind::Toggle,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    pub forest: ComponentForest,
    pub block_kind: Vec<BlockKind>,
    pub edges: EdgeSubset,
}

impl BlockTree {
    pub fn len(&self) -> usize {
        self.block_kind.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_kind.is_empty()
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&[NodeId], BlockKind)> + '_ {
        self.forest
            .components()
            .iter()
            .map(Vec::as_slice)
            .zip(self.block_kind.iter().copied())
    }
}

fn check_in_e25(tree: &Tree, f: &EdgeSubset) -> Result<()> {
    let e25 = edge_class(tree, EdgeClass::E25);
    match f.iter().find(|&e| !e25.contains(e)) {
        Some(e) => Err(Error::NotInE25(e)),
        None => Ok(()),
    }
}

fn fixed_flags(tree: &Tree, f: &EdgeSubset, forest: &ComponentForest) -> Vec<bool> {
    forest
        .components()
        .iter()
        .map(|nodes| {
            nodes.len() == 1
                || nodes
                    .iter()
                    .any(|&v| tree.degree(v).is_multiple_of(2) && tree.degree(v) - f.fv(v) == 1)
        })
        .collect()
}

/// Components of `T \ F` that must consist of fixed nodes: singletons and
/// components with a component-leaf of even tree degree.
pub fn fixed_components(tree: &Tree, f: &EdgeSubset) -> Result<Vec<usize>> {
    check_in_e25(tree, f)?;
    let forest = remove_edges(tree, f);
    Ok(fixed_flags(tree, f, &forest)
        .into_iter()
        .enumerate()
        .filter_map(|(c, fixed)| fixed.then_some(c))
        .collect())
}

/// The side of `T_F` forced to hold the fixed blocks, if `F` is legal:
/// `Some(Some(side))` when fixed components exist, `Some(None)` when either
/// side works, `None` when illegal.
fn forced_fixed_side(tree: &Tree, f: &EdgeSubset, forest: &ComponentForest) -> Option<Option<u8>> {
    for nodes in forest.components() {
        if nodes.len() == 1 && !tree.degree(nodes[0]).is_multiple_of(2) {
            return None;
        }
    }
    let flags = fixed_flags(tree, f, forest);
    if forest.len() == 1 && flags[0] {
        return None;
    }
    let mut side = None;
    for (c, &fixed) in flags.iter().enumerate() {
        if fixed {
            match side {
                None => side = Some(forest.side(c)),
                Some(s) if s != forest.side(c) => return None,
                _ => {}
            }
        }
    }
    Some(side)
}

pub fn is_block_legal(tree: &Tree, f: &EdgeSubset) -> bool {
    if f.universe_len() != tree.edge_count() || check_in_e25(tree, f).is_err() {
        return false;
    }
    let forest = remove_edges(tree, f);
    forced_fixed_side(tree, f, &forest).is_some()
}

/// Every block edge set of the tree, in increasing mask order over E^{2.5}.
///
/// The family is not closed under subsets, so all subsets of E^{2.5} are
/// tested.
pub fn enumerate_block(tree: &Tree) -> Result<Vec<EdgeSubset>> {
    let universe = edge_class(tree, EdgeClass::E25).to_vec();
    if universe.len() > MAX_BLOCK_UNIVERSE {
        return Err(Error::TooLarge(format!(
            "|E2.5| = {} exceeds {MAX_BLOCK_UNIVERSE}",
            universe.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << universe.len()) {
        let f = EdgeSubset::from_edges(
            tree,
            universe
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        let forest = remove_edges(tree, &f);
        if forced_fixed_side(tree, &f, &forest).is_some() {
            out.push(f);
        }
    }
    Ok(out)
}

/// Block tree of a fixed point or 2-cycle.
pub fn block_tree_of(tree: &Tree, c: &Coloring, kind: ProcessKind) -> Result<BlockTree> {
    let roles = node_roles(tree, c, kind)?;
    Ok(block_tree_from_roles(tree, &roles))
}

fn block_tree_from_roles(tree: &Tree, roles: &[NodeRole]) -> BlockTree {
    let mut edges = EdgeSubset::empty(tree);
    for (e, &(u, w)) in tree.edges().iter().enumerate() {
        if roles[u] != roles[w] {
            edges.insert(tree, e);
        }
    }
    let forest = remove_edges(tree, &edges);
    let block_kind = forest
        .components()
        .iter()
        .map(|nodes| BlockKind::from(roles[nodes[0]]))
        .collect();
    BlockTree {
        forest,
        block_kind,
        edges,
    }
}

/// Checks the structural facts every block tree of a 2-cycle satisfies:
/// fixed blocks carry a fixed point and toggle blocks a pure 2-cycle of the
/// induced subtree; block edges join blocks of different kinds and lie in
/// E^{2.5}; their degree-2 ends are fixed nodes; toggle blocks have at least
/// two nodes; component leaves of even degree are fixed; singleton blocks
/// have even degree.
pub fn check_structure(tree: &Tree, c: &Coloring, kind: ProcessKind, bt: &BlockTree) -> Result<()> {
    let fail = |msg: String| Err(Error::ContractViolated(msg));
    let forest = &bt.forest;
    let role_of = |v: NodeId| bt.block_kind[forest.component_of(v)];

    for v in 0..tree.n() {
        let (mut same, mut other) = (0, 0);
        for &(w, _) in tree.neighbors(v) {
            if forest.component_of(w) == forest.component_of(v) {
                if c.get(w) == c.get(v) {
                    same += 1;
                } else {
                    other += 1;
                }
            }
        }
        let flips = kind.flips(same, other);
        if flips != (role_of(v) == BlockKind::Toggle) {
            return fail(format!("node {v}: restricted rule disagrees with its block kind"));
        }
        let inner_degree = tree.degree(v) - bt.edges.fv(v);
        if inner_degree == 1 && tree.degree(v).is_multiple_of(2) && role_of(v) != BlockKind::Fixed {
            return fail(format!("component leaf {v} of even degree is not fixed"));
        }
    }

    let e25 = edge_class(tree, EdgeClass::E25);
    for e in bt.edges.iter() {
        let (u, w) = tree.edge(e);
        if role_of(u) == role_of(w) {
            return fail(format!("block edge {e} joins two blocks of the same kind"));
        }
        if !e25.contains(e) {
            return fail(format!("block edge {e} is not in E2.5"));
        }
        for x in [u, w] {
            if tree.degree(x) == 2 && role_of(x) != BlockKind::Fixed {
                return fail(format!("degree-2 end {x} of block edge {e} toggles"));
            }
        }
    }

    for (nodes, k) in bt.blocks() {
        if k == BlockKind::Toggle && nodes.len() < 2 {
            return fail(format!("toggle block {nodes:?} is a single node"));
        }
        if nodes.len() == 1 && (!tree.degree(nodes[0]).is_multiple_of(2) || k != BlockKind::Fixed) {
            return fail(format!("singleton block {nodes:?} must be fixed with even degree"));
        }
    }
    Ok(())
}

/// Per-node parity inside its component of `T \ F`, relative to the
/// component's lowest node.
fn component_parity(tree: &Tree, f: &EdgeSubset, forest: &ComponentForest) -> Vec<u8> {
    let mut parity = vec![u8::MAX; tree.n()];
    for nodes in forest.components() {
        let root = nodes[0];
        parity[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(w, e) in tree.neighbors(v) {
                if !f.contains(e) && parity[w] == u8::MAX {
                    parity[w] = 1 - parity[v];
                    stack.push(w);
                }
            }
        }
    }
    parity
}

/// Backtracking over one color bit per block, blocks taken in BFS order of
/// `T_F`. A node is checked as soon as its block and all neighbouring blocks
/// have bits.
struct CanonicalSearch<'a> {
    tree: &'a Tree,
    kind: ProcessKind,
    forest: &'a ComponentForest,
    parity: Vec<u8>,
    roles: Vec<NodeRole>,
    /// Whether a block is colored monochromatically (else independently).
    mono: Vec<bool>,
    block_order: Vec<usize>,
    ready: Vec<Vec<NodeId>>,
}

impl<'a> CanonicalSearch<'a> {
    fn new(tree: &'a Tree, kind: ProcessKind, f: &EdgeSubset, forest: &'a ComponentForest, fixed_side: u8) -> Self {
        let k = forest.len();
        let parity = component_parity(tree, f, forest);
        let block_fixed: Vec<bool> = (0..k).map(|b| forest.side(b) == fixed_side).collect();
        let roles = (0..tree.n())
            .map(|v| {
                if block_fixed[forest.component_of(v)] {
                    NodeRole::Fixed
                } else {
                    NodeRole::Toggle
                }
            })
            .collect();
        // MIN: toggle blocks monochromatic, fixed blocks independent.
        // MAJ: fixed blocks monochromatic, toggle blocks independent.
        let mono = block_fixed
            .iter()
            .map(|&fixed| fixed == (kind == ProcessKind::Majority))
            .collect();

        let adj = forest.quotient_adjacency();
        let mut block_order = Vec::with_capacity(k);
        let mut seen = vec![false; k];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(b) = queue.pop_front() {
            block_order.push(b);
            for &d in &adj[b] {
                if !seen[d] {
                    seen[d] = true;
                    queue.push_back(d);
                }
            }
        }
        let mut position = vec![0; k];
        for (i, &b) in block_order.iter().enumerate() {
            position[b] = i;
        }
        let mut ready = vec![Vec::new(); k];
        for v in 0..tree.n() {
            let last = tree
                .neighbors(v)
                .iter()
                .map(|&(w, _)| position[forest.component_of(w)])
                .chain([position[forest.component_of(v)]])
                .max()
                .expect("chain is nonempty");
            ready[last].push(v);
        }
        Self {
            tree,
            kind,
            forest,
            parity,
            roles,
            mono,
            block_order,
            ready,
        }
    }

    fn color_block(&self, c: &mut Coloring, b: usize, bit: u8) {
        for &v in self.forest.component(b) {
            let color = if self.mono[b] { bit } else { bit ^ self.parity[v] };
            c.set(v, color);
        }
    }

    fn node_ok(&self, c: &Coloring, v: NodeId) -> bool {
        let counts = crate::dynamics::role_counts(self.tree, c, &self.roles, v);
        crate::dynamics::role_inequality_holds(self.kind, self.roles[v], counts)
    }

    fn search(&self, depth: usize, c: &mut Coloring) -> bool {
        if depth == self.block_order.len() {
            return true;
        }
        let b = self.block_order[depth];
        // v* is the parity root of block 0, so bit 0 gives it color 0.
        let bits: &[u8] = if depth == 0 { &[0] } else { &[0, 1] };
        for &bit in bits {
            self.color_block(c, b, bit);
            if self.ready[depth].iter().all(|&v| self.node_ok(c, v)) && self.search(depth + 1, c) {
                return true;
            }
        }
        false
    }
}

/// A 2-cycle with `c(v*) = 0` whose block edge set is `f`, colored
/// monochromatically or independently on each block according to the
/// process.
pub fn canonical_coloring(tree: &Tree, f: &EdgeSubset, kind: ProcessKind) -> Result<Coloring> {
    if f.universe_len() != tree.edge_count() || check_in_e25(tree, f).is_err() {
        return Err(Error::IllegalSet(format!("{f:?} is not a subset of E2.5")));
    }
    let forest = remove_edges(tree, f);
    let forced = forced_fixed_side(tree, f, &forest)
        .ok_or_else(|| Error::IllegalSet(format!("{f:?} is not block-legal")))?;
    let sides: Vec<u8> = match forced {
        Some(s) => vec![s],
        None => vec![0, 1],
    };
    for fixed_side in sides {
        if forest.len() == 1 && fixed_side == 0 {
            continue;
        }
        let search = CanonicalSearch::new(tree, kind, f, &forest, fixed_side);
        let mut c = Coloring::zeros(tree.n());
        if search.search(0, &mut c) {
            debug_assert!(roles_consistent(tree, &c, kind, &search.roles));
            return Ok(c);
        }
    }
    Err(Error::ConstructionFailed(format!("no canonical coloring for {f:?} under {kind}")))
}

/// Block edge sets with their canonical colorings and block trees.
#[derive(Clone, Debug)]
pub struct BlockItem {
    pub edges: EdgeSubset,
    pub canonical_coloring: Coloring,
    pub block_tree: BlockTree,
}

pub fn enumerate_block_items(tree: &Tree, kind: ProcessKind) -> Result<Vec<BlockItem>> {
    enumerate_block(tree)?
        .into_iter()
        .map(|edges| {
            let canonical_coloring = canonical_coloring(tree, &edges, kind)?;
            let block_tree = block_tree_of(tree, &canonical_coloring, kind)?;
            Ok(BlockItem {
                edges,
                canonical_coloring,
                block_tree,
            })
        })
        .collect()
}

/// Block tree of a legal set with kinds taken from a canonical coloring.
pub fn block_tree_for_set(tree: &Tree, f: &EdgeSubset, kind: ProcessKind) -> Result<BlockTree> {
    let c = canonical_coloring(tree, f, kind)?;
    if classify(tree, &c, kind)? == Classification::Transient {
        return Err(Error::ConstructionFailed("canonical coloring is not periodic".into()));
    }
    block_tree_of(tree, &c, kind)
}

/// DOT rendering of a block tree: fixed blocks as boxes, toggle blocks as
/// ellipses, block edges labelled with the original edge.
pub fn block_tree_to_dot(tree: &Tree, bt: &BlockTree) -> String {
    let mut out = String::from("graph blocktree {\n");
    for (b, (nodes, kind)) in bt.blocks().enumerate() {
        let shape = match kind {
            BlockKind::Fixed => "box",
            BlockKind::Toggle => "ellipse",
        };
        let label: Vec<String> = nodes.iter().map(|v| v.to_string()).collect();
        writeln!(
            out,
            "  b{b} [label=\"{}\", shape={shape}, kind=\"{}\"];",
            label.join(","),
            match kind {
                BlockKind::Fixed => "fixed",
                BlockKind::Toggle => "toggle",
            }
        )
        .unwrap();
    }
    for &(a, b, e) in bt.forest.quotient_edges() {
        let (u, w) = tree.edge(e);
        writeln!(out, "  b{a} -- b{b} [label=\"{u}-{w}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
