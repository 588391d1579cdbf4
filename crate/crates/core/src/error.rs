use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, found 0 at index {index}")]
    NonPositivePart { index: usize },
    #[error("partition parts must be nonincreasing, found {prev} then {next}")]
    IncreasingParts { prev: u64, next: u64 },
    #[error("beta-set elements must be positive")]
    NonPositiveBeta,
    #[error("beta-set element {0} appears more than once")]
    DuplicateBeta(u64),
    #[error("core specification must forbid at least one hook length")]
    EmptyCoreSpec,
    #[error("invalid core specification: {0}")]
    InvalidCoreSpec(String),
    #[error("{t1} and {t2} are not coprime")]
    NotCoprime { t1: u64, t2: u64 },
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("modulus must be at least {min}, got {t}")]
    ModulusTooSmall { t: u64, min: u64 },
    #[error("eta vector for t = {t} must have {expected} entries, got {got}")]
    EtaLength { t: u64, expected: usize, got: usize },
    #[error("partition is not a {t}-core")]
    NotACore { t: u64 },
    #[error("{x} is not an element of the beta-set")]
    NotInBetaSet { x: u64 },
    #[error("closed form is only available for t in {{2, 3, 4}}, got {t}")]
    NoClosedForm { t: u64 },
    #[error("series limits differ: {left} vs {right}")]
    LimitMismatch { left: usize, right: usize },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("sequence {name} disagrees at t = {t}: definition gives {definition}, recurrence gives {recurrence}")]
    SequenceMismatch {
        name: &'static str,
        t: u64,
        definition: u128,
        recurrence: u128,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
