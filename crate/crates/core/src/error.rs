use thiserror::Error;

use crate::lrc::ErasurePattern;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order exceeds the supported range: {0}")]
    Overflow(String),
    #[error("division by zero")]
    DivideByZero,
    #[error("element encoding {value} out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("modulus is not irreducible over the base field")]
    Reducible,
    #[error("no qualifying subgroup: {0}")]
    NotFound(String),
    #[error("element is not in the group generated by the base")]
    NotInGroup,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("duplicate elements in input")]
    DuplicateElements,
    #[error("alpha and beta sets collide")]
    Collision,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("local block of group {group} is not MDS: columns {columns:?} are dependent")]
    LocalNotMds { group: usize, columns: Vec<usize> },
    #[error("verification needs {checks} rank checks ({patterns} patterns), budget is {budget}")]
    BudgetExceeded {
        patterns: u128,
        checks: u64,
        budget: u64,
    },
    #[error("parity-check matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("erasure pattern {0:?} is not correctable")]
    Uncorrectable(ErasurePattern),
    #[error("surviving symbols violate the parity checks")]
    Inconsistent,
    #[error("group {group} has {erased} erasures, local code corrects at most {max}")]
    TooManyErasures {
        group: usize,
        erased: usize,
        max: usize,
    },
    #[error("lower bound not defined: {0}")]
    OutOfScope(String),

    #[error("field sweep exhausted without a qualifying order")]
    SweepExhausted,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("omega set has {found} usable elements, need {needed}")]
    OmegaTooSmall { found: usize, needed: usize },

    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is the singular point of the curve")]
    SingularPoint,
    #[error("zero has no preimage")]
    ZeroInput,
    #[error("triple {0} is not collinear")]
    NotCollinear(usize),
    #[error("triple {0} cannot be scaled to sum to zero")]
    DegenerateScaling(usize),
    #[error("family is not matching-collinear: points {0:?} are collinear")]
    ExtraCollinearTriple([usize; 3]),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
