//! Prefix normal words over `{0, 1}`.
//!
//! A binary word is *prefix normal* when no factor has more 1s than the
//! prefix of the same length. This crate provides
//!
//! - [`BinaryWord`] and the reference test [`is_prefix_normal`],
//! - the Parikh-set index and prefix normal forms ([`index`]),
//! - faster membership testers and the filter statistics ([`membership`]),
//! - enumeration, extension counts, generating functions and bounds
//!   ([`enumeration`]),
//! - exhaustive solvers for two games on prefix normal words ([`games`]).
//!
//! ```
//! use prefix_normal::{is_prefix_normal, BinaryWord};
//!
//! let w: BinaryWord = "110101".parse().unwrap();
//! assert!(is_prefix_normal(&w));
//! assert!(!is_prefix_normal(&"1011".parse().unwrap()));
//! ```

pub mod enumeration;
pub mod error;
pub mod forms;
pub mod games;
pub mod index;
pub mod membership;
pub mod word;

pub use error::{Error, Result};
pub use forms::{
    decompose_critical, to_gap_form, to_run_length, CriticalPrefix, GapForm, RunLengthForm,
};
pub use index::{build_index, pn_equivalent, pnf_one, pnf_zero, query_jumbled, ParikhIndex};
pub use membership::{member_pn, test_doubling, test_vseq, Method, Stage, TestOutcome};
pub use word::{f_table, find_violation, is_prefix_normal, parse_word, BinaryWord, Violation};

/// Exact counts. Every count this crate can produce within its budgets fits.
pub type Count = u128;

/// Size limits for the exhaustive computations. Requests beyond a limit
/// fail with [`Error::BudgetExceeded`] instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Longest word length for tree enumeration.
    pub max_enum_n: usize,
    /// Longest word length for exhaustive `2^n` filter sweeps.
    pub max_sweep_n: usize,
    /// Most cells for the free game.
    pub max_game_n: usize,
    /// Most plays or outcomes visited in the block game.
    pub max_block_plays: Count,
    /// Longest `|w| + m` for extension counting.
    pub max_ext_len: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_enum_n: 30,
            max_sweep_n: 26,
            max_game_n: 13,
            max_block_plays: 10_000_000,
            max_ext_len: 30,
        }
    }
}

/// The guide in `book/` runs as part of the doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/words.md")]
    pub struct Words;
    #[doc = include_str!("../../../book/src/index.md")]
    pub struct Index;
    #[doc = include_str!("../../../book/src/membership.md")]
    pub struct Membership;
    #[doc = include_str!("../../../book/src/enumeration.md")]
    pub struct Enumeration;
    #[doc = include_str!("../../../book/src/games.md")]
    pub struct Games;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
