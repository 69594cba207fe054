//! Two-player games on binary words where Alice wants the finished word to
//! be prefix normal.
//!
//! In the free game both players alternately set any empty cell; Alice moves
//! first. In the block game the first `4k` cells start as 1s and the rest is
//! split into blocks of `2k`; Bob half-fills a block of his choice, then
//! Alice completes it.

mod blocks;
mod solver;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::BinaryWord;

pub use blocks::{
    alice_block_strategy, block_outcome_formula, count_block_outcomes, verify_block_lemma,
    verify_block_lemma_detailed, BlockGameConfig, BlockVerification,
};
pub use solver::{solve_from, solve_game_v1, solve_unmemoized, GameResult, GameSolver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

/// Sets the cell at 0-based `position` to `bit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub bit: bool,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "position {} := {}",
            self.position + 1,
            u8::from(self.bit)
        )
    }
}

/// Partial assignment of `n` cells. The player to move is derived from the
/// number of filled cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    cells: Vec<Option<bool>>,
}

impl GameState {
    /// `n` empty cells.
    pub fn new(n: usize) -> Self {
        Self {
            cells: vec![None; n],
        }
    }

    pub fn from_cells(cells: Vec<Option<bool>>) -> Self {
        Self { cells }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Option<bool>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> Option<bool> {
        self.cells[i]
    }

    pub fn filled(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// Alice moves whenever an even number of cells is filled.
    pub fn mover(&self) -> Player {
        if self.filled().is_multiple_of(2) {
            Player::Alice
        } else {
            Player::Bob
        }
    }

    /// Legal moves: position ascending, 0 before 1.
    pub fn moves(&self) -> impl Iterator<Item = Move> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .flat_map(|(position, _)| [false, true].map(|bit| Move { position, bit }))
    }

    pub fn apply(&mut self, mv: Move) -> Result<()> {
        match self.cells.get(mv.position) {
            None => Err(Error::IndexOutOfRange {
                index: mv.position,
                len: self.n(),
            }),
            Some(Some(_)) => Err(Error::InvalidParameters(format!(
                "cell {} is already set",
                mv.position + 1
            ))),
            Some(None) => {
                self.cells[mv.position] = Some(mv.bit);
                Ok(())
            }
        }
    }

    pub fn undo(&mut self, position: usize) {
        self.cells[position] = None;
    }

    /// The finished word, if every cell is set.
    pub fn to_word(&self) -> Option<BinaryWord> {
        self.cells.iter().copied().collect()
    }

    /// Exact cell assignment as (set cells, values) bit masks.
    pub(crate) fn key(&self) -> (u64, u64) {
        self.cells
            .iter()
            .enumerate()
            .fold((0, 0), |(set, val), (i, c)| match c {
                None => (set, val),
                Some(b) => (set | 1 << i, val | u64::from(*b) << i),
            })
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            f.write_str(match c {
                None => "_",
                Some(false) => "0",
                Some(true) => "1",
            })?;
        }
        Ok(())
    }
}

/// Parses cells written as `0`, `1` and `_`, e.g. `10_0_`.
impl FromStr for GameState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(Some(false)),
                '1' => Ok(Some(true)),
                '_' => Ok(None),
                found => Err(Error::InvalidSymbol {
                    position: i + 1,
                    found,
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(GameState::from_cells)
    }
}
