use std::fmt;

use num_rational::BigRational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Pipeline stage an error was raised in, attached by [`crate::report::analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Input,
    MilnorNumber,
    Monodromy,
    MilnorAlgebra,
    Orbifold,
    Classification,
    CrossCheck,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Input => "input",
            Stage::MilnorNumber => "milnor number",
            Stage::Monodromy => "monodromy",
            Stage::MilnorAlgebra => "milnor algebra",
            Stage::Orbifold => "orbifold analysis",
            Stage::Classification => "classification",
            Stage::CrossCheck => "cross-check",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("weight sequence needs at least two entries, got {0}")]
    TooFewWeights(usize),
    #[error("weight {value} at position {index} is not positive")]
    NonPositiveWeight { index: usize, value: i64 },
    #[error("weights are not normalized (gcd = {gcd})")]
    NotNormalized { gcd: u64 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("polynomial has no monomials")]
    EmptyPolynomial,
    #[error("polynomial is not quasi-homogeneous: weighted degrees {degrees:?}")]
    NotQuasiHomogeneous { degrees: Vec<u64> },
    #[error("declared degree {declared} differs from the weighted degree {actual}")]
    DegreeMismatch { declared: u64, actual: u64 },
    #[error("empty index subset")]
    EmptySubset,
    #[error("variable index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("divisor index must be positive")]
    NonPositiveIndex,
    #[error("Milnor number {} is not a positive integer", fmt_rational(.value))]
    NonIntegralMilnorNumber { value: BigRational },
    #[error("degree {degree} does not exceed weight {weight}")]
    DegenerateDegree { degree: u64, weight: u64 },
    #[error("characteristic divisor is not integral at index {index}: {}", fmt_rational(.coefficient))]
    IntegralityViolation {
        index: String,
        coefficient: BigRational,
    },
    #[error("divisor coefficient at index {index} is not an integer")]
    NonIntegralCoefficient { index: String },
    #[error("divisor index {index} is too large to expand")]
    IndexTooLarge { index: String },
    #[error("factored polynomial does not divide exactly")]
    InexactDivision,
    #[error("exponent {value} at position {index} must be at least 2")]
    InvalidExponent { index: usize, value: u32 },
    #[error("value {value} exceeds the configured bound {bound}")]
    BoundExceeded { value: u64, bound: u64 },
    #[error("operation needs {expected} variables, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("n = {n} is beyond the supported maximum {max}")]
    UnsupportedDimension { n: usize, max: usize },
    #[error("polynomial fails the necessary condition for an isolated singularity (variable z{variable})")]
    NotIsolated { variable: usize },
    #[error("consistency failure in {check}: {left} != {right}")]
    ConsistencyFailure {
        check: String,
        left: String,
        right: String,
    },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("monomial {monomial} cancels to zero")]
    CancelledMonomial { monomial: String },
    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },
    #[error("{stage}: {source}")]
    Stage {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn at(self, stage: Stage) -> Error {
        match self {
            e @ Error::Stage { .. } => e,
            e => Error::Stage {
                stage,
                source: Box::new(e),
            },
        }
    }

    /// The error with any stage annotation removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
