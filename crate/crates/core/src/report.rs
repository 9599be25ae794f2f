//! Serializable output shapes.

use serde::{Deserialize, Serialize};

use crate::block::{BlockItem, BlockKind};
use crate::dynamics::ProcessKind;
use crate::fixed::{EnumerationResult, Family};
use crate::tree::{EdgeId, NodeId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeJson {
    pub edges: Vec<EdgeId>,
    pub coloring: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationJson {
    pub n: usize,
    pub process: ProcessKind,
    pub kind: Family,
    pub representatives: Vec<RepresentativeJson>,
    pub total: usize,
}

impl EnumerationJson {
    /// With `with_complements`, each representative is followed by its
    /// complement.
    pub fn from_result(n: usize, result: &EnumerationResult, with_complements: bool) -> Self {
        let mut representatives = Vec::new();
        for r in &result.items {
            let edges = r.edges.to_vec();
            representatives.push(RepresentativeJson {
                edges: edges.clone(),
                coloring: r.coloring.to_string(),
            });
            if with_complements {
                representatives.push(RepresentativeJson {
                    edges,
                    coloring: r.coloring.complement().to_string(),
                });
            }
        }
        Self {
            n,
            process: result.process,
            kind: result.family,
            representatives,
            total: result.total,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub nodes: Vec<NodeId>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockItemJson {
    pub edges: Vec<EdgeId>,
    pub canonical_coloring: String,
    pub blocks: Vec<BlockJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEnumerationJson {
    pub n: usize,
    pub process: ProcessKind,
    pub kind: Family,
    pub items: Vec<BlockItemJson>,
    /// Number of block edge sets.
    pub total: usize,
}

impl BlockEnumerationJson {
    pub fn from_items(n: usize, process: ProcessKind, items: &[BlockItem], with_complements: bool) -> Self {
        let mut out = Vec::new();
        for item in items {
            let blocks: Vec<BlockJson> = item
                .block_tree
                .blocks()
                .map(|(nodes, kind)| BlockJson {
                    nodes: nodes.to_vec(),
                    kind,
                })
                .collect();
            out.push(BlockItemJson {
                edges: item.edges.to_vec(),
                canonical_coloring: item.canonical_coloring.to_string(),
                blocks: blocks.clone(),
            });
            if with_complements {
                out.push(BlockItemJson {
                    edges: item.edges.to_vec(),
                    canonical_coloring: item.canonical_coloring.complement().to_string(),
                    blocks,
                });
            }
        }
        Self {
            n,
            process,
            kind: Family::Block,
            items: out,
            total: items.len(),
        }
    }
}
