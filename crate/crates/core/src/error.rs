use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter must be a positive integer, got `{0}`")]
    InvalidLetter(String),
    #[error("letter {letter} at offset {offset} is outside the alphabet {{1, 2}}")]
    LetterOutsideAlphabet { letter: u32, offset: usize },
    #[error("strip of empty word")]
    StripEmpty,
    #[error("cf of empty word")]
    CfEmpty,
    #[error("identity check needs a nonempty mu")]
    EmptyMu,
    #[error("index out of range: {p}/{q} (need 1 <= p < q)")]
    IndexOutOfRange { p: u64, q: u64 },
    #[error("malformed fraction `{0}` (expected p/q)")]
    MalformedFraction(String),
    #[error("index not reduced: {p}/{q}")]
    NotReduced { p: u32, q: u32 },
    #[error("unpairable 1-run at offset {offset}")]
    UnpairableRun { offset: usize },
    #[error("not in odd setting: {0}")]
    NotOddSetting(&'static str),
    #[error("fewer than two replacements")]
    FewerThanTwoReplacements,
    #[error("wrong first-replacement orientation")]
    WrongOrientation,
    #[error("delta not all 2s")]
    DeltaNotTwos,
    #[error("residual of the longer word is not [2]")]
    UnexpectedResidual,
    #[error("factorization does not reassemble its input words")]
    Reassembly,
    #[error("word too short for term {0}")]
    TooShort(&'static str),
    #[error("descent stalled at level {0}")]
    DescentStalled(usize),
    #[error("unknown variant `{0}`")]
    UnknownVariant(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("trace requires json or plain")]
    TraceFormat,
    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}
