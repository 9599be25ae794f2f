//! Tree generators: canonical families, exhaustive free-tree enumeration
//! and uniform random labelled trees.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tree::{NodeId, Tree};

/// Largest `n` accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_N: usize = 12;

pub fn make_path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::new(n, &edges)
}

/// Star with centre 0.
pub fn make_star(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::BadParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Tree::new(n, &edges)
}

/// Comb `H_n`: a spine of `(n+2)/2` nodes (indices `0..m`) with one pendant
/// leaf on every inner spine node. Spine edges come first.
pub fn make_comb(n: usize) -> Result<Tree> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "comb needs an even n >= 6, got {n}"
        )));
    }
    let m = (n + 2) / 2;
    let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    edges.extend((1..m - 1).map(|i| (i, m + i - 1)));
    Tree::new(n, &edges)
}

/// Complete binary tree of depth `h` in heap layout (`2^{h+1} - 1` nodes).
pub fn make_full_binary(h: u32) -> Result<Tree> {
    if h > 20 {
        return Err(Error::TooLarge(format!("binary tree depth {h}")));
    }
    let n = (1usize << (h + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    Tree::new(n, &edges)
}

/// AHU string of the tree rooted at its centre; for two centres the smaller
/// of the two rootings. Equal strings iff isomorphic free trees.
pub fn canonical_form(tree: &Tree) -> String {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("a tree has a centre")
}

fn centers(tree: &Tree) -> Vec<NodeId> {
    let n = tree.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<NodeId> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &(w, _) in tree.neighbors(v) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(tree: &Tree, root: NodeId) -> String {
    fn encode(tree: &Tree, v: NodeId, parent: Option<NodeId>) -> String {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| Some(w) != parent)
            .map(|&(w, _)| encode(tree, w, Some(v)))
            .collect();
        children.sort_unstable();
        let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        out.push('(');
        for c in &children {
            out.push_str(c);
        }
        out.push(')');
        out
    }
    encode(tree, root, None)
}

/// Builds the tree spelled by a parenthesis code; node 0 is the root and the
/// rest are numbered in preorder.
fn tree_from_code(code: &str) -> Result<Tree> {
    let mut stack: Vec<NodeId> = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop();
            }
            _ => return Err(Error::BadParameter(format!("bad code character {ch:?}"))),
        }
    }
    Tree::new(next, &edges)
}

/// One representative per isomorphism class of free trees on `n` nodes,
/// ordered by canonical form. Each tree is rooted (node 0 = `v*`) at a centre.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::BadParameter("n must be >= 1".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge(format!(
            "tree enumeration supports n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let mut level: BTreeSet<String> = BTreeSet::from([canonical_form(&Tree::new(1, &[])?)]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let tree = tree_from_code(code)?;
            for v in 0..tree.n() {
                next.insert(canonical_form(&tree.with_leaf(v)?));
            }
        }
        level = next;
    }
    level.iter().map(|c| tree_from_code(c)).collect()
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`).
pub fn from_prufer(n: usize, sequence: &[NodeId]) -> Result<Tree> {
    if n < 2 || sequence.len() != n - 2 {
        return Err(Error::BadParameter(format!(
            "Prüfer sequence of length {} does not describe a tree on {n} nodes",
            sequence.len()
        )));
    }
    if let Some(&bad) = sequence.iter().find(|&&x| x >= n) {
        return Err(Error::BadIndex(format!("Prüfer entry {bad} with n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<NodeId>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let Reverse(leaf) = leaves.pop().expect("a leaf exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two nodes remain");
    let Reverse(b) = leaves.pop().expect("two nodes remain");
    edges.push((a, b));
    Tree::new(n, &edges)
}

/// Uniform labelled tree on `n >= 2` nodes from a uniformly random Prüfer
/// sequence; deterministic for a given `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tree> {
    if n < 2 {
        return Err(Error::BadParameter(format!("random tree needs n >= 2, got {n}")));
    }
    let sequence: Vec<NodeId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_prufer(n, &sequence)
}
