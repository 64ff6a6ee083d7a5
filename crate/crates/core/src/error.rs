use thiserror::Error;

/// Errors raised by the exact-geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("zero vector does not define a projective point")]
    ZeroPoint,
    #[error("configuration repeats point {0} at labels {1} and {2}")]
    RepeatedPoint(String, usize, usize),
    #[error("degenerate five-tuple: the points impose only {0} conditions on conics")]
    DegenerateFiveTuple(usize),
    #[error("configuration is not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("bracket index {0:?} must be strictly increasing in 1..=6")]
    BadBracketIndex(Vec<usize>),
    #[error("both leading coefficients vanish in the eliminated variable; change coordinates")]
    LeadingCoefficientCollapse,
    #[error("quintic system has dimension {0}, expected 3")]
    QuinticBasisSize(usize),
    #[error("conic {0} is not contracted to a single point by the quintic map")]
    ConicImagesDisagree(usize),
    #[error("quintic map sends every sample on conic {0} to zero")]
    QuinticBaseCurve(usize),
    #[error("not an exact division")]
    InexactDivision,
    #[error("inconsistent interpolation for permutation {0}")]
    InconsistentAction(String),
    #[error("degenerate Coble vector: x0..x4 all vanish")]
    DegenerateCobleVector,
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("form has degree {found}, expected {expected}")]
    WrongDegree { expected: u32, found: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
