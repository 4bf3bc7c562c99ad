use alloc::string::String;

/// Errors raised by structural misuse of the API.
///
/// Failed mathematical checks (a product that is not the full twist, a
/// budget that ran out) are reported through result values, not here.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("generator {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("malformed {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("exponent s={0} is not one of 1, 2, 3")]
    BadExponent(i64),
    #[error("index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("factorization does not validate against its target")]
    NotValidated,
    #[error("targets differ")]
    TargetMismatch,
    #[error("operation needs a cuspidal factorization")]
    NotCuspidal,
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("lines {0} and {1} are proportional")]
    ProportionalLines(usize, usize),
    #[error("degenerate homogeneous triple")]
    ZeroTriple,
    #[error("m must be at least 1")]
    BadM,
    #[error("not a permutation")]
    NotAPermutation,
}

pub type Result<T> = core::result::Result<T, Error>;
