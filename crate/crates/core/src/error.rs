use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate hyperplane: covector {0} is zero")]
    DegenerateHyperplane(usize),

    #[error("repeated hyperplane: covectors {0} and {1} are proportional")]
    RepeatedHyperplane(usize, usize),

    #[error("covector {index} has length {found}, expected {expected}")]
    CovectorLength {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("empty stratum")]
    EmptyStratum,

    #[error("too many hypersurfaces: {0} (at most {max} supported)", max = crate::matroid::MAX_LABELS)]
    TooManyLabels(usize),

    #[error("label sets overlap")]
    Overlap,

    #[error("invalid rank oracle: {0}")]
    InvalidOracle(String),

    #[error("label {0} out of range")]
    LabelOutOfRange(usize),

    #[error("elements belong to different algebras")]
    MismatchedAlgebras,

    #[error("deletion-restriction needs at least one hyperplane")]
    NoHyperplane,

    #[error("negative multiplicity at ({0}, {1})")]
    NegativeMultiplicity(usize, usize),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("index ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("flats {0} and {1} are not in the required position")]
    NotIncident(usize, usize),

    #[error("instance too large: {dim} basis elements exceeds the cap of {cap}")]
    InstanceTooLarge { dim: usize, cap: usize },

    #[error("not closed: the element is not a cocycle")]
    NotClosed,

    #[error("not a chain map at (q={q}, n={n}): {detail}")]
    NotChainMap { q: usize, n: usize, detail: String },

    #[error("invalid map data: {0}")]
    InvalidMap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
