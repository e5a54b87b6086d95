use thiserror::Error;

/// Mathematical and structural failures reported by the library.
///
/// Parse errors from the session language live in [`crate::session::ParseError`];
/// everything here is a violated precondition or an exceeded resource limit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation x{lower} < x{upper} violates natural labeling")]
    NaturalLabeling { lower: usize, upper: usize },
    #[error("relations contain a cycle through x{0}")]
    CyclicRelation(usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("too many variables ({0}); at most 64 are supported")]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("set is not an order ideal of the poset")]
    NotOrderIdeal,
    #[error("Moebius function undefined for this pair")]
    UndefinedMobiusPair,
    #[error("prime family is not closed under sums")]
    NotSumClosed,
    #[error("prime family does not contain every component prime")]
    FamilyMissingPrime,
    #[error("ideal is not Borel with respect to the given poset")]
    NotQBorel,
    #[error("ideal is not Borel with respect to the chain")]
    NotBorel,
    #[error("ideal is not Borel with respect to the Y poset")]
    NotYBorel,
    #[error("node limit of {0} exceeded")]
    NodeLimitExceeded(usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("monomial must not be 1")]
    UnitMonomial,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("monomial is not in the ideal")]
    NotInIdeal,
    #[error("no Q-maximal variable of the monomial has a strictly smaller variable in its support")]
    NoStrictLowerPart,
    #[error("last variable divides no generator")]
    LastVariableUnused,
    #[error("ideal contains a pure power of the last variable")]
    PurePowerOfLastVariable,
    #[error("hypotheses violated: {0}")]
    HypothesesViolated(String),
    #[error("no linear quotients at index {0}")]
    NoLinearQuotients(usize),
    #[error("negative exponent in factorization")]
    NegativeExponent,
    #[error("exponent vector describes the zero ideal")]
    AllInfinite,
    #[error("chain-map lift has no solution at level {level} in degree {degree}")]
    LiftFailed { level: usize, degree: String },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
