//! Fixed points, pure 2-cycles and block trees of the synchronous minority
//! and majority processes on finite trees.
//!
//! Every fixed point of a tree corresponds to a subset of its edges obeying a
//! per-node incidence budget, and likewise for pure 2-cycles and for the
//! block structure of general 2-cycles. This crate builds those edge-subset
//! families, maps them to colorings and back, and checks everything against
//! an exhaustive scan over all colorings.
//!
//! Module map:
//!
//! * [`tree`], [`edges`], [`forest`], [`generate`], [`io`]: tree representation,
//!   edge classes, component/quotient machinery, generators and file formats.
//! * [`dynamics`]: the update rule, orbits and fixed/toggle node predicates.
//! * [`fixed`], [`pure`], [`block`]: the three edge-subset families.
//! * [`hereditary`]: the output-sensitive enumerator shared by `fixed` and `pure`.
//! * [`oracle`]: brute-force ground truth and per-tree verification.
//! * [`report`]: JSON/CSV output shapes.

mod bits;
pub mod block;
pub mod dynamics;
pub mod edges;
mod error;
pub mod fixed;
pub mod forest;
pub mod generate;
pub mod hereditary;
pub mod io;
pub mod oracle;
pub mod pure;
pub mod report;
pub mod tree;

pub use block::{BlockKind, BlockTree};
pub use dynamics::{Classification, Coloring, NodeRole, OrbitReport, ProcessKind};
pub use edges::{EdgeClass, EdgeSubset};
pub use error::{Error, Result};
pub use fixed::{EnumerationResult, Representative};
pub use forest::ComponentForest;
pub use tree::{EdgeId, NodeId, Tree};
