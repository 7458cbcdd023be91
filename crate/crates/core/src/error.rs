use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("ring order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("ideal lattice has more than {cap} members")]
    LatticeCap { cap: usize },

    #[error("element {index} is out of range for a ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal is not proper")]
    NotProper,

    #[error("ideal is not graded")]
    NotGraded,

    #[error("ideal is not G-invariant")]
    NotInvariant,

    #[error("operands belong to different ambient rings")]
    MismatchedRings,

    #[error("the zero ring has no primeness verdict")]
    ZeroRing,

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("element {0} is not homogeneous")]
    NotHomogeneous(usize),

    #[error("hypotheses unmet: {0}")]
    Hypothesis(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid path algebra element: {0}")]
    InvalidElement(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid filter: {0}")]
    InvalidFilter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
