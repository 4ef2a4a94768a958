use thiserror::Error;

/// Errors raised by the polynomial, graph and Coxeter routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor must be monic nonzero")]
    DivisorNotMonic,
    #[error("zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("polynomial is not self-reciprocal")]
    NotSelfReciprocal,
    #[error("odd-degree self-reciprocal: factor out (T+1) first")]
    OddDegree,
    #[error("input must lie in Z[T^2]")]
    NotEvenPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("index must be at least {min}, got {got}")]
    IndexTooSmall { min: u64, got: u64 },
    #[error("hypotheses violated: roots leave the unit disk (not a product of cyclotomic polynomials)")]
    NotCyclotomicProduct,
    #[error("root 1 is excluded: the factor T-1 cannot be represented")]
    RootOneExcluded,
    #[error("polynomial must be non-constant")]
    ConstantPolynomial,
    #[error("polynomial must be squarefree")]
    NotSquarefree,
    #[error("empty interval: lower endpoint exceeds upper endpoint")]
    EmptyInterval,
    #[error("graph is not a simple tree")]
    NotATree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid size for {family}: {size}")]
    InvalidGraphSize { family: &'static str, size: usize },
    #[error("invalid weight type: {0}")]
    InvalidWeights(String),
    #[error("recursion requires p_t >= 2")]
    RecursionNeedsWeightTwo,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
