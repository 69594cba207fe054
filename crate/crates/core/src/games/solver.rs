//! Exact minimax for the free game.

use std::collections::HashMap;

use super::{GameState, Move, Player};
use crate::error::{Error, Result};
use crate::word::{is_prefix_normal, BinaryWord};
use crate::Budget;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameResult {
    pub winner: Player,
    /// Moves from the solved position to a finished word. The winner always
    /// plays a winning move; the loser plays its first legal move.
    pub principal_variation: Vec<Move>,
    pub final_word: BinaryWord,
}

impl GameResult {
    /// Alice's first move along the principal variation, when she wins and
    /// is the one to move.
    pub fn winning_first_move(&self, start: &GameState) -> Option<Move> {
        (self.winner == Player::Alice && start.mover() == Player::Alice)
            .then(|| self.principal_variation.first().copied())
            .flatten()
    }
}

/// Memoized solver; the table is keyed on the exact cell assignment.
#[derive(Debug, Default)]
pub struct GameSolver {
    memo: HashMap<(u64, u64), bool>,
}

impl GameSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Positions solved so far.
    pub fn table_size(&self) -> usize {
        self.memo.len()
    }

    /// Whether Alice can force a prefix normal word from `state`.
    pub fn alice_wins(&mut self, state: &mut GameState) -> bool {
        if let Some(word) = state.to_word() {
            return is_prefix_normal(&word);
        }
        let key = state.key();
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let alice = state.mover() == Player::Alice;
        let moves: Vec<Move> = state.moves().collect();
        let mut result = !alice;
        for mv in moves {
            state.apply(mv).expect("legal move");
            let child = self.alice_wins(state);
            state.undo(mv.position);
            if child == alice {
                result = alice;
                break;
            }
        }
        self.memo.insert(key, result);
        result
    }

    pub fn solve(&mut self, start: &GameState) -> GameResult {
        let mut state = start.clone();
        let alice_wins = self.alice_wins(&mut state);
        let winner = if alice_wins {
            Player::Alice
        } else {
            Player::Bob
        };
        let mut pv = Vec::new();
        while !state.is_complete() {
            let mover = state.mover();
            let moves: Vec<Move> = state.moves().collect();
            let chosen = if mover == winner {
                *moves
                    .iter()
                    .find(|&&mv| {
                        state.apply(mv).expect("legal move");
                        let ok = self.alice_wins(&mut state) == alice_wins;
                        state.undo(mv.position);
                        ok
                    })
                    .expect("the winner has a winning move")
            } else {
                moves[0]
            };
            state.apply(chosen).expect("legal move");
            pv.push(chosen);
        }
        GameResult {
            winner,
            principal_variation: pv,
            final_word: state.to_word().expect("complete"),
        }
    }
}

fn check_budget(n: usize, budget: &Budget) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("the game needs n >= 1".into()));
    }
    if n > budget.max_game_n.min(63) {
        return Err(Error::BudgetExceeded {
            what: "game length",
            requested: n as u128,
            limit: budget.max_game_n.min(63) as u128,
        });
    }
    Ok(())
}

/// Solves the free game on `n` empty cells.
pub fn solve_game_v1(n: usize, budget: &Budget) -> Result<GameResult> {
    solve_from(&GameState::new(n), budget)
}

/// Solves the free game from an arbitrary position.
pub fn solve_from(state: &GameState, budget: &Budget) -> Result<GameResult> {
    check_budget(state.n(), budget)?;
    Ok(GameSolver::new().solve(state))
}

/// Plain minimax without a table; the winner from `state`. Meant for
/// cross-checking the memoized solver on small boards.
pub fn solve_unmemoized(state: &GameState) -> Player {
    fn rec(state: &mut GameState) -> bool {
        if let Some(word) = state.to_word() {
            return is_prefix_normal(&word);
        }
        let alice = state.mover() == Player::Alice;
        let moves: Vec<Move> = state.moves().collect();
        for mv in moves {
            state.apply(mv).expect("legal move");
            let child = rec(state);
            state.undo(mv.position);
            if child == alice {
                return alice;
            }
        }
        !alice
    }
    if rec(&mut state.clone()) {
        Player::Alice
    } else {
        Player::Bob
    }
}
