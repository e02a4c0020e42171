use thiserror::Error;

use crate::schemes::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group too large: more than {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("subgroup generator {index} is not an element of the group")]
    NotASubgroup { index: usize },

    #[error("group is not transitive ({orbits} orbits)")]
    NotTransitive { orbits: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("algebra closure did not converge within {rounds} rounds")]
    ClosureCap { rounds: usize },

    #[error("association scheme axioms violated: {0}")]
    Axioms(Box<AxiomReport>),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("scheme is not quasi-thin")]
    NotQuasiThin,

    #[error("operation requires an attached permutation group")]
    NoGroup,

    #[error("generator {generator} does not preserve the color of ({u}, {v})")]
    NotAnAutomorphism {
        generator: usize,
        u: usize,
        v: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
