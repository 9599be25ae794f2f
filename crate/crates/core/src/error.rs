use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tree is disconnected: {0}")]
    Disconnected(String),
    #[error("edge list contains a cycle: {0}")]
    Cyclic(String),
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("coloring has {got} nodes, tree has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("orbit did not become periodic within {0} rounds")]
    GuardExceeded(usize),
    #[error("coloring is neither a fixed point nor a 2-cycle")]
    NotPeriodic,
    #[error("edge set is not legal: {0}")]
    IllegalSet(String),
    #[error("coloring is not a fixed point")]
    NotAFixedPoint,
    #[error("coloring is not a pure 2-cycle")]
    NotPure,
    #[error("edge {0} is not in E2.5")]
    NotInE25(usize),
    #[error("count bound violated: {0}")]
    BoundViolated(String),
    #[error("no canonical coloring found for a legal block set: {0}")]
    ConstructionFailed(String),
    #[error("structural contract violated: {0}")]
    ContractViolated(String),
}
