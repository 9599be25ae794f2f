//! Brute-force ground truth.
//!
//! Every coloring of the tree is stepped twice and classified from the
//! definitions alone; nothing here goes through the edge-subset machinery.
//! Block edge sets are read off directly: an edge belongs to the block set
//! when exactly one of its ends changes color.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::block::{canonical_coloring, enumerate_block};
use crate::dynamics::{step, Coloring, ProcessKind};
use crate::edges::{edge_class, EdgeClass, EdgeSubset};
use crate::error::{Error, Result};
use crate::fixed::{enumerate_fix, parity_coloring, EnumerationResult, Family, Representative};
use crate::hereditary::{algorithm1, Budget};
use crate::pure::enumerate_pure;
use crate::tree::Tree;

/// Largest tree the oracle accepts.
pub const MAX_ORACLE_N: usize = 22;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub fixed: BTreeSet<Coloring>,
    pub pure: BTreeSet<Coloring>,
    pub mixed_two_cycles: BTreeSet<Coloring>,
    pub block_edge_sets: BTreeSet<EdgeSubset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub fixed: usize,
    pub pure: usize,
    /// Pure and mixed 2-cycles together.
    pub two_cycles: usize,
    pub block_sets: usize,
}

impl OracleReport {
    pub fn counts(&self) -> OracleCounts {
        OracleCounts {
            fixed: self.fixed.len(),
            pure: self.pure.len(),
            two_cycles: self.pure.len() + self.mixed_two_cycles.len(),
            block_sets: self.block_edge_sets.len(),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.fixed.extend(other.fixed);
        self.pure.extend(other.pure);
        self.mixed_two_cycles.extend(other.mixed_two_cycles);
        self.block_edge_sets.extend(other.block_edge_sets);
        self
    }
}

/// Header matching [`csv_row`].
pub const CSV_HEADER: &str = "tree,process,fixed,pure,two_cycles,block_sets";

pub fn csv_row(tree_id: &str, kind: ProcessKind, counts: &OracleCounts) -> String {
    format!(
        "{tree_id},{kind},{},{},{},{}",
        counts.fixed, counts.pure, counts.two_cycles, counts.block_sets
    )
}

fn classify_into(tree: &Tree, kind: ProcessKind, c: Coloring, report: &mut OracleReport) {
    let once = step(tree, &c, kind).expect("sizes match");
    if once == c {
        report.fixed.insert(c);
        return;
    }
    let twice = step(tree, &once, kind).expect("sizes match");
    if twice != c {
        return;
    }
    let mut blocks = EdgeSubset::empty(tree);
    for (e, &(u, w)) in tree.edges().iter().enumerate() {
        let toggles_u = once.get(u) != c.get(u);
        let toggles_w = once.get(w) != c.get(w);
        if toggles_u != toggles_w {
            blocks.insert(tree, e);
        }
    }
    report.block_edge_sets.insert(blocks);
    if once == c.complement() {
        report.pure.insert(c);
    } else {
        report.mixed_two_cycles.insert(c);
    }
}

/// Scans all `2^n` colorings.
pub fn brute_force(tree: &Tree, kind: ProcessKind) -> Result<OracleReport> {
    brute_force_with(tree, kind, false)
}

/// With `half_scan`, only colorings with `c(v*) = 0` are stepped and the
/// complements are added afterwards.
pub fn brute_force_with(tree: &Tree, kind: ProcessKind, half_scan: bool) -> Result<OracleReport> {
    let n = tree.n();
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge(format!("oracle supports n <= {MAX_ORACLE_N}, got {n}")));
    }
    let limit: u64 = 1 << n;
    let scan = |x: u64| -> bool { !half_scan || x & 1 == 0 };
    let report = (0..limit)
        .into_par_iter()
        .filter(|&x| scan(x))
        .fold(OracleReport::default, |mut acc, x| {
            classify_into(tree, kind, Coloring::from_index(n, x), &mut acc);
            acc
        })
        .reduce(OracleReport::default, OracleReport::merge);
    if !half_scan {
        return Ok(report);
    }
    let complete = |set: &BTreeSet<Coloring>| -> BTreeSet<Coloring> {
        set.iter().flat_map(|c| [c.clone(), c.complement()]).collect()
    };
    Ok(OracleReport {
        fixed: complete(&report.fixed),
        pure: complete(&report.pure),
        mixed_two_cycles: complete(&report.mixed_two_cycles),
        block_edge_sets: report.block_edge_sets,
    })
}

/// Deliberate defects for checking that verification catches errors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Fixed-point legality uses the strict budget `2 F_v < deg(v)`.
    StrictFixBudget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub process: ProcessKind,
    pub family: Family,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub n: usize,
    pub counts: Vec<(ProcessKind, OracleCounts)>,
    /// First disagreement found, if any.
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn fix_result(tree: &Tree, kind: ProcessKind, mutation: Mutation) -> EnumerationResult {
    match mutation {
        Mutation::None => enumerate_fix(tree, kind),
        Mutation::StrictFixBudget => {
            let universe = edge_class(tree, EdgeClass::E2).to_vec();
            let items = algorithm1(tree, &universe, Budget::BelowHalf)
                .sets
                .into_iter()
                .map(|edges| {
                    let coloring = parity_coloring(tree, &edges, kind == ProcessKind::Majority);
                    Representative { edges, coloring }
                })
                .collect();
            EnumerationResult::new(kind, Family::Fixed, items)
        }
    }
}

fn first_difference(expected: &BTreeSet<Coloring>, got: &BTreeSet<Coloring>) -> String {
    if let Some(c) = expected.difference(got).next() {
        format!("missing {c} (oracle has {}, enumerator {})", expected.len(), got.len())
    } else if let Some(c) = got.difference(expected).next() {
        format!("spurious {c} (oracle has {}, enumerator {})", expected.len(), got.len())
    } else {
        String::new()
    }
}

pub fn verify_tree(tree: &Tree) -> Result<VerifyReport> {
    verify_tree_with(tree, &ProcessKind::BOTH, Mutation::None)
}

/// Compares the fixed, pure and block families of the given processes with the
/// oracle; also checks that every block set's canonical coloring is a
/// 2-cycle with that block set.
pub fn verify_tree_with(tree: &Tree, processes: &[ProcessKind], mutation: Mutation) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        n: tree.n(),
        counts: Vec::new(),
        mismatch: None,
    };
    for &kind in processes {
        let truth = brute_force(tree, kind)?;
        report.counts.push((kind, truth.counts()));
        if report.mismatch.is_some() {
            continue;
        }
        let mismatch = |family, detail| Some(Mismatch { process: kind, family, detail });

        let fixed: BTreeSet<Coloring> = fix_result(tree, kind, mutation).all_colorings().into_iter().collect();
        if fixed != truth.fixed {
            report.mismatch = mismatch(Family::Fixed, first_difference(&truth.fixed, &fixed));
            continue;
        }
        let pure: BTreeSet<Coloring> = enumerate_pure(tree, kind).all_colorings().into_iter().collect();
        if pure != truth.pure {
            report.mismatch = mismatch(Family::Pure, first_difference(&truth.pure, &pure));
            continue;
        }
        let blocks: BTreeSet<EdgeSubset> = enumerate_block(tree)?.into_iter().collect();
        if blocks != truth.block_edge_sets {
            let detail = match truth.block_edge_sets.difference(&blocks).next() {
                Some(f) => format!("missing block set {f:?}"),
                None => format!(
                    "spurious block set {:?}",
                    blocks.difference(&truth.block_edge_sets).next().expect("sets differ")
                ),
            };
            report.mismatch = mismatch(Family::Block, detail);
            continue;
        }
        for f in &blocks {
            let bad = match canonical_coloring(tree, f, kind) {
                Err(e) => Some(e.to_string()),
                Ok(c) if !truth.pure.contains(&c) && !truth.mixed_two_cycles.contains(&c) => {
                    Some(format!("canonical coloring {c} of {f:?} is not a 2-cycle"))
                }
                Ok(c) => {
                    let once = step(tree, &c, kind)?;
                    let back: EdgeSubset = EdgeSubset::from_edges(
                        tree,
                        tree.edges().iter().enumerate().filter_map(|(e, &(u, w))| {
                            ((once.get(u) != c.get(u)) != (once.get(w) != c.get(w))).then_some(e)
                        }),
                    )?;
                    (back != *f).then(|| format!("canonical coloring {c} has block set {back:?}, expected {f:?}"))
                }
            };
            if let Some(detail) = bad {
                report.mismatch = mismatch(Family::Block, detail);
                break;
            }
        }
    }
    Ok(report)
}
