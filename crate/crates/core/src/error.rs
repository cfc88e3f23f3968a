use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition `{0}`")]
    MalformedPartition(String),

    #[error("malformed tableau `{0}`")]
    MalformedTableau(String),

    #[error("malformed polynomial `{0}`")]
    MalformedPolynomial(String),

    #[error("partition {shape} has more than {limit} parts")]
    TooManyParts { shape: String, limit: usize },

    #[error("crystal index {index} out of range for alphabet of size {alphabet}")]
    IndexOutOfRange { index: usize, alphabet: usize },

    #[error("alphabet size {0} is not supported (must be between 1 and 255)")]
    AlphabetSize(usize),

    #[error("partition {0} has odd size, the zero weight space is empty")]
    OddRank(String),

    #[error("truncated series compared at degree {requested} beyond the common cutoff {cutoff}")]
    CutoffExceeded { requested: u32, cutoff: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("branching rules disagree for lambda={lambda} nu={nu} n={rank}: sundaram={sundaram} kwon={kwon} c3={c3}")]
    RuleMismatch {
        lambda: String,
        nu: String,
        rank: usize,
        sundaram: usize,
        kwon: usize,
        c3: usize,
    },

    #[error("negative coefficient {coeff} at t^{degree}")]
    NegativeCoefficient { degree: u32, coeff: i64 },

    #[error("non-dominant weight: {0}")]
    NonDominant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
