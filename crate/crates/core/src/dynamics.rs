//! The synchronous minority and majority processes.
//!
//! Every node looks at its neighbours' colors in the current round. Under
//! the minority process it flips when strictly more neighbours share its
//! color than not; under the majority process it flips when strictly fewer
//! do. Ties keep the color.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::tree::{NodeId, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProcessKind {
    #[serde(rename = "min")]
    Minority,
    #[serde(rename = "maj")]
    Majority,
}

impl ProcessKind {
    pub const BOTH: [ProcessKind; 2] = [ProcessKind::Minority, ProcessKind::Majority];

    /// Whether a node with `same` equally-colored and `other` oppositely
    /// colored neighbours changes color.
    #[inline]
    pub fn flips(self, same: usize, other: usize) -> bool {
        match self {
            ProcessKind::Minority => same > other,
            ProcessKind::Majority => same < other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProcessKind::Minority => "min",
            ProcessKind::Majority => "maj",
        }
    }
}

impl fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProcessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" | "minority" => Ok(ProcessKind::Minority),
            "maj" | "majority" => Ok(ProcessKind::Majority),
            _ => Err(Error::BadParameter(format!("unknown process {s:?}"))),
        }
    }
}

/// A 0/1 color per node, packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    bits: Bits,
}

impl Coloring {
    pub fn zeros(n: usize) -> Self {
        Self { bits: Bits::zeros(n) }
    }

    pub fn from_fn(n: usize, mut color: impl FnMut(NodeId) -> u8) -> Self {
        let mut bits = Bits::zeros(n);
        for v in 0..n {
            bits.set(v, color(v) != 0);
        }
        Self { bits }
    }

    /// Node `v` takes bit `v` of `index` (`n <= 64`).
    pub fn from_index(n: usize, index: u64) -> Self {
        Self {
            bits: Bits::from_word(n, index),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    #[inline]
    pub fn get(&self, v: NodeId) -> u8 {
        self.bits.get(v) as u8
    }

    pub fn set(&mut self, v: NodeId, color: u8) {
        self.bits.set(v, color != 0);
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.complement(),
        }
    }

    /// The member of `{c, complement(c)}` that gives `v*` color 0.
    pub fn representative(&self) -> Self {
        if self.is_empty() || self.get(0) == 0 {
            self.clone()
        } else {
            self.complement()
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len())
            .map(|v| if self.get(v) == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut bits = Bits::zeros(s.len());
        for (v, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits.set(v, true),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("coloring character {ch:?} at position {v}"),
                    })
                }
            }
        }
        Ok(Self { bits })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self.to_bitstring())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_bitstring(s)
    }
}

fn check_size(tree: &Tree, coloring: &Coloring) -> Result<()> {
    if coloring.len() != tree.n() {
        return Err(Error::SizeMismatch {
            expected: tree.n(),
            got: coloring.len(),
        });
    }
    Ok(())
}

/// `(same, other)`: neighbours of `v` sharing / not sharing its color.
pub fn neighborhood_split(tree: &Tree, coloring: &Coloring, v: NodeId) -> (usize, usize) {
    let own = coloring.get(v);
    let same = tree
        .neighbors(v)
        .iter()
        .filter(|&&(w, _)| coloring.get(w) == own)
        .count();
    (same, tree.degree(v) - same)
}

/// One synchronous round.
pub fn step(tree: &Tree, coloring: &Coloring, kind: ProcessKind) -> Result<Coloring> {
    check_size(tree, coloring)?;
    let mut next = coloring.clone();
    for v in 0..tree.n() {
        let (same, other) = neighborhood_split(tree, coloring, v);
        if kind.flips(same, other) {
            next.set(v, 1 - coloring.get(v));
        }
    }
    Ok(next)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Fixed,
    PureTwoCycle,
    MixedTwoCycle,
    Transient,
}

pub fn classify(tree: &Tree, coloring: &Coloring, kind: ProcessKind) -> Result<Classification> {
    let once = step(tree, coloring, kind)?;
    if &once == coloring {
        return Ok(Classification::Fixed);
    }
    let twice = step(tree, &once, kind)?;
    Ok(if &twice != coloring {
        Classification::Transient
    } else if once == coloring.complement() {
        Classification::PureTwoCycle
    } else {
        Classification::MixedTwoCycle
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    /// Rounds before the orbit enters its cycle.
    pub transient: usize,
    /// 1 or 2.
    pub period: usize,
    /// The colorings on the cycle, in orbit order.
    pub cycle_colorings: Vec<Coloring>,
}

/// Default round limit for [`run_orbit`]: `4 n^2` (at least 4).
pub fn orbit_guard(n: usize) -> usize {
    4 * n.max(1) * n.max(1)
}

/// Iterates the process until a cycle of length at most 2 appears.
pub fn run_orbit(tree: &Tree, coloring: &Coloring, kind: ProcessKind) -> Result<OrbitReport> {
    run_orbit_with_guard(tree, coloring, kind, orbit_guard(tree.n()))
}

pub fn run_orbit_with_guard(
    tree: &Tree,
    coloring: &Coloring,
    kind: ProcessKind,
    max_rounds: usize,
) -> Result<OrbitReport> {
    check_size(tree, coloring)?;
    let mut previous: Option<Coloring> = None;
    let mut current = coloring.clone();
    for t in 0..=max_rounds {
        let next = step(tree, &current, kind)?;
        if next == current {
            return Ok(OrbitReport {
                transient: t,
                period: 1,
                cycle_colorings: vec![current],
            });
        }
        if let Some(prev) = previous.take() {
            if next == prev {
                return Ok(OrbitReport {
                    transient: t - 1,
                    period: 2,
                    cycle_colorings: vec![prev, current],
                });
            }
        }
        previous = Some(current);
        current = next;
    }
    Err(Error::GuardExceeded(max_rounds))
}

/// Whether a node keeps (fixed) or flips (toggle) its color in a periodic orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRole {
    Fixed,
    Toggle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodePartition {
    pub fixed: Vec<NodeId>,
    pub toggle: Vec<NodeId>,
}

/// Per-node roles of a fixed point or 2-cycle.
pub fn node_roles(tree: &Tree, coloring: &Coloring, kind: ProcessKind) -> Result<Vec<NodeRole>> {
    if classify(tree, coloring, kind)? == Classification::Transient {
        return Err(Error::NotPeriodic);
    }
    let next = step(tree, coloring, kind)?;
    Ok((0..tree.n())
        .map(|v| {
            if next.get(v) == coloring.get(v) {
                NodeRole::Fixed
            } else {
                NodeRole::Toggle
            }
        })
        .collect())
}

pub fn node_partition(tree: &Tree, coloring: &Coloring, kind: ProcessKind) -> Result<NodePartition> {
    let roles = node_roles(tree, coloring, kind)?;
    let (fixed, toggle): (Vec<NodeId>, Vec<NodeId>) =
        (0..tree.n()).partition(|&v| roles[v] == NodeRole::Fixed);
    Ok(NodePartition { fixed, toggle })
}

/// Neighbour counts of a node split by role and by color relative to the
/// node's own color: `N_f^{c(u)}`, `N_f^{1-c(u)}`, `N_t^{c(u)}`, `N_t^{1-c(u)}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RoleCounts {
    pub fixed_same: i64,
    pub fixed_other: i64,
    pub toggle_same: i64,
    pub toggle_other: i64,
}

pub fn role_counts(tree: &Tree, coloring: &Coloring, roles: &[NodeRole], u: NodeId) -> RoleCounts {
    let own = coloring.get(u);
    let mut counts = RoleCounts::default();
    for &(w, _) in tree.neighbors(u) {
        let same = coloring.get(w) == own;
        match (roles[w], same) {
            (NodeRole::Fixed, true) => counts.fixed_same += 1,
            (NodeRole::Fixed, false) => counts.fixed_other += 1,
            (NodeRole::Toggle, true) => counts.toggle_same += 1,
            (NodeRole::Toggle, false) => counts.toggle_other += 1,
        }
    }
    counts
}

/// The local inequality that characterises a node of a 2-cycle as fixed or
/// toggle, given its neighbours' colors and roles.
///
/// Minority, fixed:  `|N_t^{1-c} - N_t^{c}| <= N_f^{1-c} - N_f^{c}`;
/// minority, toggle: `|N_f^{c} - N_f^{1-c}| <  N_t^{c} - N_t^{1-c}`.
/// Majority swaps the sides of the right-hand differences.
pub fn role_inequality_holds(kind: ProcessKind, role: NodeRole, c: RoleCounts) -> bool {
    match (kind, role) {
        (ProcessKind::Minority, NodeRole::Fixed) => {
            (c.toggle_other - c.toggle_same).abs() <= c.fixed_other - c.fixed_same
        }
        (ProcessKind::Minority, NodeRole::Toggle) => {
            (c.fixed_same - c.fixed_other).abs() < c.toggle_same - c.toggle_other
        }
        (ProcessKind::Majority, NodeRole::Fixed) => {
            (c.toggle_other - c.toggle_same).abs() <= c.fixed_same - c.fixed_other
        }
        (ProcessKind::Majority, NodeRole::Toggle) => {
            (c.fixed_same - c.fixed_other).abs() < c.toggle_other - c.toggle_same
        }
    }
}

/// True when every node satisfies the inequality of its assigned role.
/// Then `coloring` is periodic with exactly these roles.
pub fn roles_consistent(tree: &Tree, coloring: &Coloring, kind: ProcessKind, roles: &[NodeRole]) -> bool {
    (0..tree.n()).all(|u| role_inequality_holds(kind, roles[u], role_counts(tree, coloring, roles, u)))
}
