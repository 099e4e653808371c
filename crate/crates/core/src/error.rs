use thiserror::Error;

/// Errors reported by the library.
///
/// Precondition violations of individual criteria are errors; a criterion
/// whose hypotheses simply fail returns an inconclusive certificate instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("a required coefficient is zero")]
    ZeroCoefficient,
    #[error("both arguments must be nonzero")]
    ZeroArgs,
    #[error("rational intermediate did not clear to an integer")]
    NonIntegerResult,
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root iteration did not converge")]
    IterationDiverged,
    #[error("binomial input")]
    BinomialInput,
    #[error("hypothesis fails")]
    HypothesisFails,
    #[error("{0} does not divide the resultant")]
    NotADivisor(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("polynomials are not coprime in Y")]
    NotCoprimeInY,
    #[error("f(d) and g(d) have no common prime factor")]
    NoCommonPrime,
    #[error("m must be a positive non-square integer")]
    SquareM,
    #[error("coefficient constraint violated: {0}")]
    CoefficientConstraintViolated(String),
    #[error("degree order does not match the requested case")]
    DegreeOrder,
    #[error("polynomial has a nonconstant content in Q[X]")]
    ContentNotTrivial,
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("factorization oracle exceeded its budget")]
    BudgetExceeded,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown criterion id `{0}`")]
    UnknownCriterion(String),
    #[error("certificate verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
