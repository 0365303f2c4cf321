use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the circle model needs at least two limit points, got n = {0}")]
    TooFewLimitPoints(usize),

    #[error("interval index {index} is out of range 1..={n}")]
    IntervalOutOfRange { index: usize, n: usize },

    #[error("cannot shift the limit point a{0}")]
    ShiftLimit(usize),

    #[error("limit point a{0} cannot be an arc endpoint")]
    LimitEndpoint(usize),

    #[error("points {0} and {1} do not span an arc")]
    TrivialArc(String, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("partition mismatch: n = {left} vs n = {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("element {element} is out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} occurs in more than one block")]
    OverlappingBlocks(usize),

    #[error("empty block")]
    EmptyBlock,

    #[error("blocks {0:?} and {1:?} cross")]
    Crossing(Vec<usize>, Vec<usize>),

    #[error("partition does not cover [{0}]")]
    NotExhaustive(usize),

    #[error(
        "enumeration guard exceeded: n = {n} > {limit} (raise CLUSTER_LATTICE_GUARD_N to override)"
    )]
    GuardExceeded { n: usize, limit: usize },

    #[error("no non-zero morphism from {0} to {1}")]
    NoNonzeroMorphism(String, String),

    #[error("arcs {0} and {1} do not cross")]
    NotCrossing(String, String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("decoration has {got} entries, expected {expected}")]
    DecorationLength { expected: usize, got: usize },

    #[error(
        "invalid decoration entry x{index} = {value}: a singleton i allows [a_i, a_i+1), \
         an adjacency allows (a_i, a_i+1], any other index needs a marked point of (a_i, a_i+1)"
    )]
    InvalidDecoration { index: usize, value: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
