use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character other than `'0'` or `'1'` in the text form of a word.
    /// `position` is 1-based.
    #[error("invalid symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },

    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("word must start with 1")]
    NotStartingWithOne,

    /// `1^n` (including the empty word) has no critical prefix.
    #[error("word {0} has no critical prefix")]
    NoCriticalPrefix(String),

    #[error("gaps must be positive")]
    NonPositiveGap,

    #[error("jumbled query ({ones}, {zeros}) exceeds word length {len}")]
    QueryTooLong {
        ones: usize,
        zeros: usize,
        len: usize,
    },

    #[error("{what} = {requested} exceeds the budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("no generating function known for density {0}")]
    UnsupportedDensity(usize),

    #[error("family {family} is not defined for n = {n}")]
    FamilyLength { family: &'static str, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown {kind} {value:?}")]
    UnknownName { kind: &'static str, value: String },

    /// Alice's balancing strategy produced a word that is not prefix normal.
    #[error("block strategy produced non prefix normal word {0}")]
    StrategyFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
