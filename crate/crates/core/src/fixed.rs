//! Fixed points as legal subsets of E².
//!
//! A subset `F` of E² is legal when `2 F_v <= deg(v)` at every node. Legal
//! sets and fixed points with `c(v*) = 0` are in bijection for both
//! processes: under the minority process `F` is the set of monochromatic
//! edges, under the majority process the set of multichromatic edges.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::{classify, Classification, Coloring, ProcessKind};
use crate::edges::{edge_class, EdgeClass, EdgeSubset};
use crate::error::{Error, Result};
use crate::hereditary::{algorithm1, Algorithm1Run, Budget};
use crate::tree::{NodeId, Tree};

/// Which edge-subset family an enumeration belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Fixed,
    Pure,
    Block,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Fixed => "fixed",
            Family::Pure => "pure",
            Family::Block => "block",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(Family::Fixed),
            "pure" => Ok(Family::Pure),
            "block" => Ok(Family::Block),
            _ => Err(Error::BadParameter(format!("unknown family {s:?}"))),
        }
    }
}

/// A legal set together with the coloring it encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub edges: EdgeSubset,
    pub coloring: Coloring,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub process: ProcessKind,
    pub family: Family,
    pub items: Vec<Representative>,
    /// Colorings counted with their complements: `2 * items.len()`.
    pub total: usize,
}

impl EnumerationResult {
    pub(crate) fn new(process: ProcessKind, family: Family, items: Vec<Representative>) -> Self {
        let total = 2 * items.len();
        Self {
            process,
            family,
            items,
            total,
        }
    }

    /// Representatives and their complements.
    pub fn all_colorings(&self) -> Vec<Coloring> {
        self.items
            .iter()
            .flat_map(|r| [r.coloring.clone(), r.coloring.complement()])
            .collect()
    }
}

pub fn is_fix_legal(tree: &Tree, f: &EdgeSubset) -> bool {
    f.universe_len() == tree.edge_count()
        && f.is_subset_of(&edge_class(tree, EdgeClass::E2))
        && Budget::AtMostHalf.admits(tree, f)
}

/// The E² edges in breadth-first discovery order from `v*`.
pub(crate) fn class_in_bfs_order(tree: &Tree, class: EdgeClass) -> Vec<usize> {
    let members = edge_class(tree, class);
    tree.bfs_edge_order().filter(|&e| members.contains(e)).collect()
}

/// Runs the hereditary enumerator over E² and returns the raw run,
/// including the per-edge family sizes.
pub fn fix_sets(tree: &Tree) -> Algorithm1Run {
    algorithm1(tree, &class_in_bfs_order(tree, EdgeClass::E2), Budget::AtMostHalf)
}

pub fn enumerate_fix(tree: &Tree, kind: ProcessKind) -> EnumerationResult {
    let items = fix_sets(tree)
        .sets
        .into_iter()
        .map(|edges| {
            let coloring = parity_coloring(tree, &edges, fix_flips_on_member(kind));
            Representative { edges, coloring }
        })
        .collect();
    EnumerationResult::new(kind, Family::Fixed, items)
}

/// Colors `v*` with 0 and walks the tree; the color changes across member
/// edges when `flip_on_member`, across non-member edges otherwise.
pub(crate) fn parity_coloring(tree: &Tree, f: &EdgeSubset, flip_on_member: bool) -> Coloring {
    let mut c = Coloring::zeros(tree.n());
    for &v in tree.bfs_order().iter().skip(1) {
        let (p, e) = tree.parent(v).expect("non-root node has a parent");
        let flip = f.contains(e) == flip_on_member;
        c.set(v, c.get(p) ^ flip as u8);
    }
    c
}

fn fix_flips_on_member(kind: ProcessKind) -> bool {
    kind == ProcessKind::Majority
}

/// Edges whose end colors are equal (`monochromatic = true`) or differ.
pub(crate) fn edges_by_color_relation(tree: &Tree, c: &Coloring, monochromatic: bool) -> EdgeSubset {
    let mut f = EdgeSubset::empty(tree);
    for (e, &(u, w)) in tree.edges().iter().enumerate() {
        if (c.get(u) == c.get(w)) == monochromatic {
            f.insert(tree, e);
        }
    }
    f
}

pub fn coloring_from_fix(tree: &Tree, f: &EdgeSubset, kind: ProcessKind) -> Result<Coloring> {
    if !is_fix_legal(tree, f) {
        return Err(Error::IllegalSet(format!("{f:?} is not fix-legal")));
    }
    Ok(parity_coloring(tree, f, fix_flips_on_member(kind)))
}

pub fn fix_set_from_coloring(tree: &Tree, c: &Coloring, kind: ProcessKind) -> Result<EdgeSubset> {
    if classify(tree, c, kind)? != Classification::Fixed {
        return Err(Error::NotAFixedPoint);
    }
    Ok(edges_by_color_relation(tree, c, kind == ProcessKind::Minority))
}

/// Per-node plan of the recursive enumerator: the node's parent, its leaf
/// children (forced) and its inner children (chosen).
struct Plan {
    order: Vec<NodeId>,
    parent: Vec<Option<NodeId>>,
    leaf_children: Vec<Vec<NodeId>>,
    inner_children: Vec<Vec<NodeId>>,
}

impl Plan {
    fn new(tree: &Tree) -> Self {
        let n = tree.n();
        let mut leaf_children = vec![Vec::new(); n];
        let mut inner_children = vec![Vec::new(); n];
        let parent: Vec<Option<NodeId>> = (0..n).map(|v| tree.parent(v).map(|(p, _)| p)).collect();
        for v in 0..n {
            for &(w, _) in tree.neighbors(v) {
                if parent[v] == Some(w) {
                    continue;
                }
                if tree.is_leaf(w) {
                    leaf_children[v].push(w);
                } else {
                    inner_children[v].push(w);
                }
            }
        }
        Self {
            order: tree.bfs_order().to_vec(),
            parent,
            leaf_children,
            inner_children,
        }
    }
}

/// Recursive extension of a partial coloring, node by node in BFS order.
/// When a node is reached its own color and its parent's are known; the
/// children get colors such that the node keeps its color.
struct Extender<'a> {
    plan: &'a Plan,
    kind: ProcessKind,
}

impl Extender<'_> {
    /// Calls `emit` once per completed fixed point.
    fn extend(&self, pos: usize, c: &mut Coloring, emit: &mut dyn FnMut(&Coloring)) {
        let Some(&v) = self.plan.order.get(pos) else {
            emit(c);
            return;
        };
        let own = c.get(v);
        // Leaves differ from v under MIN, match it under MAJ.
        let leaf_color = match self.kind {
            ProcessKind::Minority => 1 - own,
            ProcessKind::Majority => own,
        };
        for &l in &self.plan.leaf_children[v] {
            c.set(l, leaf_color);
        }
        let leaves = self.plan.leaf_children[v].len() as i64;
        let (mut same, mut other) = match self.kind {
            ProcessKind::Minority => (0i64, leaves),
            ProcessKind::Majority => (leaves, 0i64),
        };
        if let Some(p) = self.plan.parent[v] {
            if c.get(p) == own {
                same += 1;
            } else {
                other += 1;
            }
        }
        let inner = &self.plan.inner_children[v];
        let r = inner.len() as i64;
        // MIN: at most r0 inner children may share v's color.
        // MAJ: at most r0 inner children may take the opposite color.
        let slack = match self.kind {
            ProcessKind::Minority => r + other - same,
            ProcessKind::Majority => r + same - other,
        };
        if slack < 0 {
            return;
        }
        let r0 = (slack / 2).min(r) as usize;
        let chosen_color = match self.kind {
            ProcessKind::Minority => own,
            ProcessKind::Majority => 1 - own,
        };
        let mut chosen = vec![false; inner.len()];
        self.choose(pos, v, c, &mut chosen, 0, r0, chosen_color, emit);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        pos: usize,
        v: NodeId,
        c: &mut Coloring,
        chosen: &mut Vec<bool>,
        from: usize,
        budget: usize,
        chosen_color: u8,
        emit: &mut dyn FnMut(&Coloring),
    ) {
        let inner = &self.plan.inner_children[v];
        if from == inner.len() {
            for (i, &w) in inner.iter().enumerate() {
                c.set(w, if chosen[i] { chosen_color } else { 1 - chosen_color });
            }
            self.extend(pos + 1, c, emit);
            return;
        }
        self.choose(pos, v, c, chosen, from + 1, budget, chosen_color, emit);
        if budget > 0 {
            chosen[from] = true;
            self.choose(pos, v, c, chosen, from + 1, budget - 1, chosen_color, emit);
            chosen[from] = false;
        }
    }
}

fn run_extender(tree: &Tree, kind: ProcessKind, emit: &mut dyn FnMut(&Coloring)) {
    let plan = Plan::new(tree);
    let ext = Extender { plan: &plan, kind };
    let mut c = Coloring::zeros(tree.n());
    ext.extend(0, &mut c, emit);
}

/// Fixed points with `c(v*) = 0`, produced by recursive extension of
/// partial colorings rather than from legal sets.
pub fn enumerate_fix_recursive(tree: &Tree, kind: ProcessKind) -> EnumerationResult {
    let mut items = Vec::new();
    run_extender(tree, kind, &mut |c| {
        items.push(Representative {
            edges: edges_by_color_relation(tree, c, kind == ProcessKind::Minority),
            coloring: c.clone(),
        })
    });
    EnumerationResult::new(kind, Family::Fixed, items)
}

/// Number of fixed points with `c(v*) = 0`, without storing them.
pub fn count_fix(tree: &Tree, kind: ProcessKind) -> u64 {
    let mut count = 0u64;
    run_extender(tree, kind, &mut |_| count += 1);
    count
}

/// `F_0 = 0, F_1 = 1, ...`
pub fn fibonacci(k: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Upper bound `2 F_{n - ceil(delta/2)}` on the number of fixed points.
pub fn fib_bound(n: usize, delta: usize) -> u128 {
    2 * fibonacci(n - delta.div_ceil(2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub total: u128,
    /// `(5/4)^{|E²|}`.
    pub lower: f64,
    pub upper: u128,
    /// The exact total forced by a (near-)star shape, if any.
    pub exact: Option<u128>,
}

/// `4^l * total >= 5^l`, exact where it fits in 128 bits.
fn above_lower(total: u128, l: u32) -> bool {
    match (5u128.checked_pow(l), 4u128.checked_pow(l).and_then(|p| p.checked_mul(total))) {
        (Some(five), Some(four_t)) => four_t >= five,
        _ => (total as f64).ln() >= l as f64 * 1.25f64.ln() - 1e-9,
    }
}

/// Checks `(5/4)^{|E²|} <= total <= 2 F_{n - ceil(delta/2)}` and the exact
/// values 2 for `delta = n - 1` and 4 for `delta = n - 2`.
pub fn check_count_bounds(tree: &Tree, total: u128) -> Result<BoundReport> {
    let n = tree.n();
    let delta = tree.max_degree();
    let l = edge_class(tree, EdgeClass::E2).len() as u32;
    let upper = fib_bound(n, delta);
    let exact = if delta + 1 == n {
        Some(2)
    } else if delta + 2 == n {
        Some(4)
    } else {
        None
    };
    let report = BoundReport {
        total,
        lower: 1.25f64.powi(l as i32),
        upper,
        exact,
    };
    if !above_lower(total, l) {
        return Err(Error::BoundViolated(format!("{total} < (5/4)^{l}")));
    }
    if total > upper {
        return Err(Error::BoundViolated(format!("{total} > 2F_{{{n}-ceil({delta}/2)}} = {upper}")));
    }
    if let Some(x) = exact {
        if total != x {
            return Err(Error::BoundViolated(format!(
                "max degree {delta} on {n} nodes forces {x} fixed points, got {total}"
            )));
        }
    }
    Ok(report)
}
