use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle through element {0}")]
    CycleDetected(usize),
    #[error("duplicate element label {0:?}")]
    DuplicateElement(String),
    #[error("element index {index} out of range for a poset of {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("skew shape has no cells")]
    EmptyShape,
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VarMismatch { expected: usize, got: usize },
    #[error("duplicate interpolation node x = {0}")]
    DuplicateNode(i64),
    #[error("interpolation needs at least one node")]
    NoNodes,
    #[error("dilation vector has a negative entry at position {0}")]
    NegativeDilationVector(usize),
    #[error("ordering is not a natural labeling: {0}")]
    NotNaturalLabeling(String),
    #[error("marking is not order preserving on the marked elements")]
    OutsideOrderCone,
    #[error("marking values are not weakly increasing along the labeling (position {0})")]
    RegionViolation(usize),
    #[error("point is not an order-preserving extension of the marking: {0}")]
    NotAnExtension(String),
    #[error("gap t_{0} is not positive")]
    GapNotPositive(usize),
    #[error("marked poset is missing an extremal element mark: {0:?}")]
    MissingExtremalMark(String),
    #[error("identifying elements created a cycle")]
    QuotientCycle,
    #[error("identified elements carry different marks {0} and {1}")]
    ContradictoryMarks(i64, i64),
    #[error("polynomial value {0} is not an integer")]
    NonIntegral(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit(_))
    }
}
