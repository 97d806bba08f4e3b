use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("subspace is not contained in the larger space")]
    NotContained,
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("associativity fails at (e{i} e{j}) e{k}")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("unit law fails at basis element e{0}")]
    BadUnit(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("zero relations leave infinitely many nonzero paths")]
    InfinitePaths,
    #[error("radical not supported: {0}")]
    RadicalUnsupported(String),
    #[error("invalid symmetrizing form: {0}")]
    InvalidForm(String),
    #[error("complex too large: {entries} matrix entries exceed the budget of {budget}")]
    BudgetExceeded { entries: u128, budget: u128 },
    #[error("degree {degree} needs compositions outside the window")]
    WindowTooSmall { degree: i32 },
    #[error("not Calabi-Yau: {0}")]
    NotCalabiYau(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
