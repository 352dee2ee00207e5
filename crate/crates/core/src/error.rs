use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),
    #[error("loop at vertex {0}: edge endpoints must differ")]
    Loop(usize),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("canonical labeling budget exceeded: {0} vertices")]
    BudgetExceeded(usize),
    #[error("not a valid oriented two-graph: cocycle identity fails on {0:?}")]
    InvalidTwoGraph([usize; 4]),
    #[error("not a two-graph: 4-set {0:?} contains an odd number of triples")]
    InvalidSwitchingSet([usize; 4]),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(u64),
    #[error("function is not admissible: {0}")]
    NotAdmissible(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("two-graph is not special")]
    NotSpecial,
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
