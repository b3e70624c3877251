use thiserror::Error;

/// Errors produced by the semigroup, pattern, admission and variety routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {gcd}; their closure is not cofinite")]
    NotCofinite { gcd: u64 },
    #[error("conductor would exceed the limit of {limit}")]
    ConductorTooLarge { limit: u64 },
    #[error("member set is not closed under addition: {x} + {y} is missing")]
    NotAdditivelyClosed { x: u64, y: u64 },
    #[error("{0} is not a nonzero member of the semigroup")]
    NotMember(i64),
    #[error("the semigroup is the full set of nonnegative integers")]
    IsFullSet,
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u64),
    #[error("pattern coefficients must be nonzero and at least one variable is required")]
    InvalidPattern,
    #[error("pattern is not admissible")]
    NotAdmissible,
    #[error("leading coefficient {0} is below 1")]
    NegativeLead(i64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search space of {volume} candidates exceeds the ceiling {ceiling}")]
    SearchTooLarge { volume: u128, ceiling: u128 },
    #[error("tree enumeration exceeded the node ceiling {ceiling}")]
    NodeCeilingExceeded { ceiling: usize },
    #[error("gcd(m, a0) = 1; the variety is finite")]
    GcdIsOne,
    #[error("element {element} lies strictly between 0 and the multiplicity {multiplicity}")]
    ElementBelowMultiplicity { element: u64, multiplicity: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
