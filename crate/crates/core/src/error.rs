use alloc::string::String;

/// Everything that can go wrong in the library.
///
/// Node indices in messages are the 0-based indices used by the API.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("node index {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} has a non-positive weight")]
    NonPositiveWeight(usize, usize),
    #[error("node {0} does not have a unique degree")]
    NonUniqueDegree(usize),
    #[error("order {got} is below the minimum {min}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("order {got} exceeds the {available} orders available")]
    OrderTooLarge { got: usize, available: usize },
    #[error("singular Euler transform: 1 + t*zeta = 0")]
    SingularTransform,
    #[error("graph is not almost regular: {0}")]
    NotAlmostRegular(&'static str),
    #[error("operation requires an unweighted graph")]
    Weighted,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("contour encloses a pole of the generating function")]
    PoleInsideContour,
    #[error("logarithm branch condition violated on the contour")]
    BranchViolation,
    #[error("generating function has a zero inside the contour")]
    ZeroInsideContour,
    #[error("empty eigenvalue list")]
    EmptySpectrum,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
