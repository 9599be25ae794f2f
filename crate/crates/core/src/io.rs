//! Text tree format and DOT export.
//!
//! The text format is line oriented: the first data line holds `n`, every
//! following data line holds one edge `u w` with 0-based indices. Lines
//! starting with `#` and blank lines are ignored. Node 0 is `v*`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tree::Tree;

pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("{tok:?}: {e}"),
            })
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (n, tokens.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected the node count on its own line".into(),
                })
            }
            (Some(_), [u, w]) => edges.push((parse(u)?, parse(w)?)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `u w`, found {line:?}"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    Tree::new(n, &edges)
}

pub fn write_tree(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.n());
    for &(u, w) in tree.edges() {
        writeln!(out, "{u} {w}").unwrap();
    }
    out
}

pub fn tree_to_dot(tree: &Tree) -> String {
    let mut out = String::from("graph tree {\n");
    for v in 0..tree.n() {
        writeln!(out, "  {v} [label=\"{v}\"];").unwrap();
    }
    for &(u, w) in tree.edges() {
        writeln!(out, "  {u} -- {w};").unwrap();
    }
    out.push_str("}\n");
    out
}
