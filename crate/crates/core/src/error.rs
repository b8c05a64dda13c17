use thiserror::Error;

use crate::conjugacy::Hypothesis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },

    #[error("alphabet display map must consist of 1 to 4 distinct characters")]
    InvalidAlphabet,

    #[error("operation requires a binary alphabet")]
    NonBinaryAlphabet,

    #[error("alphabet mismatch: expected size {expected}, found size {found}")]
    AlphabetMismatch { expected: usize, found: usize },

    #[error("run longer than 2 starting at position {position}")]
    RunTooLong { position: usize },

    #[error("word length {length} is not divisible by block length {k}")]
    LengthNotDivisible { length: usize, k: usize },

    #[error("block {block} at position {position} is not in the domain")]
    BlockNotInDomain { block: String, position: usize },

    #[error("block {block} is not in the declared block set")]
    BlockNotInSet { block: String },

    #[error("word of length {length} is shorter than block length {k}")]
    WordTooShort { length: usize, k: usize },

    #[error("block substitution is not block-stable")]
    NotStable,

    #[error("block lengths differ: {left} vs {right}")]
    BlockLengthMismatch { left: usize, right: usize },

    #[error("letter {letter} has an empty image")]
    ErasingImage { letter: char },

    #[error("block substitution has an empty domain")]
    EmptyDomain,

    #[error("block length must be at least 2, got {0}")]
    InvalidBlockLength(usize),

    #[error("exponent must be positive")]
    ZeroPower,

    #[error("generation stalled at length {length}")]
    GenerationStalled { length: usize },

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(Hypothesis),

    #[error("prefix of length {length} is too short; need at least {needed}")]
    PrefixTooShort { length: usize, needed: usize },

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("{name:?} is not a {expected}")]
    WrongKind { name: String, expected: &'static str },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed word equation system: {0}")]
    InvalidSystem(String),
}
