use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("denominator of `{0}` is not invertible modulo {1}")]
    NonInvertible(String, u32),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("word `{0}` is not regular")]
    NotRegular(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("operation needs a nonzero element")]
    ZeroElement,
    #[error("leading word does not occur at position {0}")]
    InvalidOccurrence(usize),
    #[error("no special bracketing found for `{0}`")]
    LiftFailed(String),
    #[error("relator set is not reduced: {0}")]
    NotReduced(String),
    #[error("basis is not certified up to degree {0}")]
    Uncertified(usize),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("name collision: `{0}`")]
    NameCollision(String),
    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("designated element `{0}` is not in the derived subalgebra")]
    NonGenerator(String),
    #[error("bracket leaves the computed basis: {0}")]
    DegreeEscape(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("presentation has overlap ambiguities")]
    NotOverlapFree,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
