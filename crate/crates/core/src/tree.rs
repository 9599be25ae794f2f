//! Immutable tree with a distinguished node `v*`.
//!
//! Node 0 is always `v*`. Alongside the adjacency lists the tree keeps a
//! breadth-first traversal from `v*` (order plus parent links); the colorings
//! built from edge subsets, the recursive enumerator, and the edge order of
//! the hereditary enumerator all walk this traversal.

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<(NodeId, EdgeId)>>,
    bfs_order: Vec<NodeId>,
    parent: Vec<Option<(NodeId, EdgeId)>>,
}

impl Tree {
    /// Validates an edge list and builds the tree. Node 0 becomes `v*`.
    pub fn new(n: usize, edge_list: &[(NodeId, NodeId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("a tree needs at least one node".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut dsu = Dsu::new(n);
        for (idx, &(u, w)) in edge_list.iter().enumerate() {
            if u >= n || w >= n {
                return Err(Error::BadIndex(format!(
                    "edge {idx} = ({u}, {w}) with n = {n}"
                )));
            }
            if u == w {
                return Err(Error::Cyclic(format!("self-loop at node {u}")));
            }
            if adjacency[u].iter().any(|&(x, _)| x == w) {
                return Err(Error::DuplicateEdge(u, w));
            }
            if !dsu.union(u, w) {
                return Err(Error::Cyclic(format!("edge ({u}, {w}) closes a cycle")));
            }
            adjacency[u].push((w, idx));
            adjacency[w].push((u, idx));
        }
        if edge_list.len() != n - 1 {
            return Err(Error::Disconnected(format!(
                "{} edges for {n} nodes, expected {}",
                edge_list.len(),
                n - 1
            )));
        }

        let mut bfs_order = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        bfs_order.push(0);
        let mut head = 0;
        while head < bfs_order.len() {
            let v = bfs_order[head];
            head += 1;
            for &(w, e) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    bfs_order.push(w);
                }
            }
        }
        debug_assert_eq!(bfs_order.len(), n);

        Ok(Self {
            n,
            edges: edge_list.to_vec(),
            adjacency,
            bfs_order,
            parent,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vstar(&self) -> NodeId {
        0
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (NodeId, NodeId) {
        self.edges[e]
    }

    /// Neighbours of `v` together with the connecting edge index.
    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.adjacency[v].len() == 1
    }

    /// Breadth-first order from `v*`.
    pub fn bfs_order(&self) -> &[NodeId] {
        &self.bfs_order
    }

    /// Parent of `v` in the traversal from `v*`, with the connecting edge.
    pub fn parent(&self, v: NodeId) -> Option<(NodeId, EdgeId)> {
        self.parent[v]
    }

    /// Edges in the order their child endpoint is discovered from `v*`.
    pub fn bfs_edge_order(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bfs_order
            .iter()
            .filter_map(move |&v| self.parent[v].map(|(_, e)| e))
    }

    pub fn edge_between(&self, u: NodeId, w: NodeId) -> Option<EdgeId> {
        self.adjacency[u]
            .iter()
            .find(|&&(x, _)| x == w)
            .map(|&(_, e)| e)
    }

    /// The tree with leaf `v` deleted; nodes above `v` shift down by one.
    pub fn without_leaf(&self, v: NodeId) -> Result<Self> {
        if v >= self.n {
            return Err(Error::BadIndex(format!("node {v} with n = {}", self.n)));
        }
        if self.n < 2 || !self.is_leaf(v) {
            return Err(Error::BadParameter(format!("node {v} is not a leaf")));
        }
        let relabel = |x: NodeId| if x > v { x - 1 } else { x };
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Self::new(self.n - 1, &edges)
    }

    /// The tree with a new leaf hung below `v`; the leaf gets index `n`.
    pub fn with_leaf(&self, v: NodeId) -> Result<Self> {
        if v >= self.n {
            return Err(Error::BadIndex(format!("node {v} with n = {}", self.n)));
        }
        let mut edges = self.edges.clone();
        edges.push((v, self.n));
        Self::new(self.n + 1, &edges)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
