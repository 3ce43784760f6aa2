use thiserror::Error;

/// Errors raised by the library. Variants name the offending item where one exists.
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative mass {mass} at outcome {outcome:?}")]
    NegativeMass { outcome: Vec<u32>, mass: String },
    #[error("masses sum to {total}, expected exactly 1")]
    MassNotOne { total: String },
    #[error("outcome {outcome:?} has arity {found}, schema has {expected} variables")]
    ArityMismatch {
        outcome: Vec<u32>,
        found: usize,
        expected: usize,
    },
    #[error("outcome {outcome:?}: state {state} of variable '{variable}' is outside [0, {cardinality})")]
    IndexOutOfRange {
        outcome: Vec<u32>,
        variable: String,
        state: u32,
        cardinality: u32,
    },
    #[error("duplicate outcome {0:?}")]
    DuplicateOutcome(Vec<u32>),
    #[error("variable subset must be nonempty")]
    EmptySubset,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable '{0}' appears more than once")]
    DuplicateVariable(String),
    #[error("invalid schema: {0}")]
    InvalidSchema(String),
    #[error("event {variable} = {value} has probability zero")]
    ZeroProbabilityEvent { variable: String, value: u32 },
    #[error("variable name '{0}' is already in use")]
    NameCollision(String),
    #[error("function maps outcome {outcome:?} to {value}, outside [0, {cardinality})")]
    FunctionRangeError {
        outcome: Vec<u32>,
        value: u32,
        cardinality: u32,
    },
    #[error("mixture weights must be positive and sum to 1 (sum is {0})")]
    WeightsNotOne(String),
    #[error("schemas differ: {0}")]
    SchemaMismatch(String),
    #[error("variable sets must be pairwise disjoint")]
    OverlappingSets,
    #[error("ground element {element} outside ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("malformed CI statement: {0}")]
    MalformedStatement(String),
    #[error("unknown rule or axiom '{0}'")]
    UnknownRule(String),
    #[error("structures over different ground sets ({0} and {1})")]
    MixedGroundSets(usize, usize),
    #[error("family is not closed under intersection: members {0} and {1} meet outside the family")]
    NotMeetClosed(usize, usize),
    #[error("rank function is not normalized: r(empty set) = {0}")]
    NotNormalized(String),
    #[error("rank function is negative on {0:?}")]
    NegativeRank(Vec<usize>),
    #[error("rank function is not monotone: r({subset:?}) > r({superset:?})")]
    NotMonotone {
        subset: Vec<usize>,
        superset: Vec<usize>,
    },
    #[error("rank function is not submodular on {left:?} and {right:?}")]
    NotSubmodular { left: Vec<usize>, right: Vec<usize> },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid masses: coordinate {coordinate} is {value}")]
    InvalidMasses { coordinate: String, value: String },
    #[error("weighted terms do not reproduce the joint table at cell {cell:?}")]
    DecompositionMismatch { cell: (u32, u32) },
    #[error("term {0} is not a non-negative rank-one table of unit mass")]
    NotRankOne(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
