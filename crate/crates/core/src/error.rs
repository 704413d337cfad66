use thiserror::Error;

/// Errors produced by transformation arithmetic, builders, and engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} out of range (1..={max})", max = crate::transform::MAX_DEGREE)]
    DegreeOutOfRange(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("repeated point {0} in cycle notation")]
    RepeatedCyclePoint(usize),
    #[error("malformed cycle notation: {0}")]
    CycleParse(String),
    #[error("expected a permutation, got an element of rank {rank} with |dom| = {dom}")]
    NotAPermutation { rank: usize, dom: usize },
    #[error("degree {0} not supported by {1}")]
    UnsupportedDegree(usize, &'static str),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(String),
    #[error("letter {0:?} already in the alphabet")]
    DuplicateLetter(String),
    #[error("letter index {0} has no assigned transformation")]
    UnassignedLetter(usize),
    #[error("relation label {0:?} not found")]
    UnknownLabel(String),
    #[error("presentation has unlabeled relations; labels are required here")]
    UnlabeledRelations,
    #[error("enumeration overflowed the limit {0}")]
    Overflow(usize),
    #[error("arithmetic overflow computing {0}")]
    ArithmeticOverflow(&'static str),
    #[error("generating sets do not generate the same monoid ({0} vs {1} elements)")]
    DifferentMonoids(usize, usize),
    #[error("no word over the generators evaluates to the requested element")]
    NotGenerated,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
