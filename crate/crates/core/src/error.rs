use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the machine-readable error names printed by the
/// command-line tool, so keep them stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotGaussianPrime: {0} is not a Gaussian prime over a rational prime p = 1 (mod 4)")]
    NotGaussianPrime(String),
    #[error("NoCanonicalForm: {0} has |re| = |im|")]
    NoCanonicalForm(String),
    #[error("ZeroHasNoCoset: the zero element lies in no coset of the unit group")]
    ZeroHasNoCoset,
    #[error("RankDeficient: matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("ZeroDualCode: the dual of the full space is the zero code")]
    ZeroDualCode,
    #[error("SearchTooLarge: {what} needs {needed} steps, budget is {budget}")]
    SearchTooLarge {
        what: &'static str,
        needed: u128,
        budget: u64,
    },
    #[error("ZeroVector: operation needs a nonzero vector")]
    ZeroVector,
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("NotMonomial: {0}")]
    NotMonomial(String),
    #[error("BadEntries: {0}")]
    BadEntries(String),
    #[error("UnsupportedR: r = {0} is outside 1..=5")]
    UnsupportedR(u32),
    #[error("PreconditionSGeK: s = {s} is smaller than k = {k}")]
    PreconditionSGeK { s: u64, k: u64 },
    #[error("WrongContext: expected p = {expected}, got p = {actual}")]
    WrongContext { expected: u64, actual: u64 },
    #[error("NonIntegerResult: transformed enumerator has a non-integral coefficient at {0}")]
    NonIntegerResult(String),
    #[error("CatalogMismatch: {0}")]
    CatalogMismatch(String),
    #[error("LengthMismatch: expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("NotPerfect: {0}")]
    NotPerfect(String),
    #[error("NoColumnMatch: syndrome is not a unit multiple of any parity-check column")]
    NoColumnMatch,
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Short variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotGaussianPrime(_) => "NotGaussianPrime",
            Error::NoCanonicalForm(_) => "NoCanonicalForm",
            Error::ZeroHasNoCoset => "ZeroHasNoCoset",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::ZeroDualCode => "ZeroDualCode",
            Error::SearchTooLarge { .. } => "SearchTooLarge",
            Error::ZeroVector => "ZeroVector",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotMonomial(_) => "NotMonomial",
            Error::BadEntries(_) => "BadEntries",
            Error::UnsupportedR(_) => "UnsupportedR",
            Error::PreconditionSGeK { .. } => "PreconditionSGeK",
            Error::WrongContext { .. } => "WrongContext",
            Error::NonIntegerResult(_) => "NonIntegerResult",
            Error::CatalogMismatch(_) => "CatalogMismatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotPerfect(_) => "NotPerfect",
            Error::NoColumnMatch => "NoColumnMatch",
            Error::Parse(_) => "Parse",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SearchTooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default number of search steps (codewords, orbit representatives, ...)
/// any single exhaustive search may take.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub(crate) fn check_budget(what: &'static str, needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::SearchTooLarge {
            what,
            needed,
            budget,
        })
    } else {
        Ok(())
    }
}
