use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    InvalidCharacteristic(u64),
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("field of order {p}^{s} exceeds 2^32 elements")]
    FieldTooLarge { p: u64, s: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("x^2+1 has no useful root structure in characteristic 2")]
    CharacteristicTwoUnsupported,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("scale factor must be nonzero")]
    InvalidScale,
    #[error("{q} and {m} are not coprime")]
    NotCoprime { q: u64, m: u64 },
    #[error("root order {order} is divisible by the characteristic {p}")]
    WildRamification { order: u64, p: u64 },
    #[error("negacyclic codes coincide with cyclic codes in characteristic 2; use constant +1")]
    NegacyclicTrivialInCharTwo,
    #[error("generator does not divide x^n - a")]
    NotADivisor,
    #[error("code has dimension 0")]
    EmptyCode,
    #[error("length has the wrong shape: {0}")]
    ShapeMismatch(String),
    #[error("no square root of -1 exists in the field")]
    NoSquareRootOfMinusOne,
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("oracle range exceeded: {0}")]
    OracleRangeExceeded(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{count} results exceed the enumeration limit of {limit}")]
    EnumerationTooLarge { count: u128, limit: u128 },
    #[error("count does not fit in 128 bits")]
    CountOverflow,
    #[error("catalog line {line}: {message}")]
    CorruptCatalog { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
