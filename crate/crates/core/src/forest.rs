//! Components of `T \ F` and the quotient tree `T_F`.

use crate::edges::EdgeSubset;
use crate::tree::{EdgeId, NodeId, Tree};

/// Components after deleting an edge subset `F`, the quotient tree `T_F`
/// whose edges are exactly `F`, and its bipartition. The component holding
/// `v*` has index 0 and side 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentForest {
    component_id: Vec<usize>,
    components: Vec<Vec<NodeId>>,
    quotient_edges: Vec<(usize, usize, EdgeId)>,
    side: Vec<u8>,
}

pub fn remove_edges(tree: &Tree, f: &EdgeSubset) -> ComponentForest {
    let n = tree.n();
    let mut component_id = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if component_id[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut nodes = vec![start];
        component_id[start] = id;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &(w, e) in tree.neighbors(v) {
                if !f.contains(e) && component_id[w] == usize::MAX {
                    component_id[w] = id;
                    nodes.push(w);
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        components.push(nodes);
    }

    let quotient_edges: Vec<_> = f
        .iter()
        .map(|e| {
            let (u, w) = tree.edge(e);
            (component_id[u], component_id[w], e)
        })
        .collect();

    let k = components.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b, _) in &quotient_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut side = vec![u8::MAX; k];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(c) = stack.pop() {
        for &d in &adj[c] {
            if side[d] == u8::MAX {
                side[d] = 1 - side[c];
                stack.push(d);
            }
        }
    }

    ComponentForest {
        component_id,
        components,
        quotient_edges,
        side,
    }
}

impl ComponentForest {
    /// Number of components, `|F| + 1`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, v: NodeId) -> usize {
        self.component_id[v]
    }

    pub fn component_ids(&self) -> &[usize] {
        &self.component_id
    }

    /// Node lists, each sorted ascending.
    pub fn components(&self) -> &[Vec<NodeId>] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &[NodeId] {
        &self.components[c]
    }

    /// `(component, component, original edge)` for every edge of `F`.
    pub fn quotient_edges(&self) -> &[(usize, usize, EdgeId)] {
        &self.quotient_edges
    }

    /// 0 for `I_0(T_F)`, 1 for `I_1(T_F)`.
    pub fn side(&self, c: usize) -> u8 {
        self.side[c]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    pub fn quotient_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b, _) in &self.quotient_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}
