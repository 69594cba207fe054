//! The block game and Alice's balancing strategy.

use std::collections::HashSet;
use std::ops::Range;

use super::{GameState, Move};
use crate::error::{Error, Result};
use crate::word::{is_prefix_normal, BinaryWord};
use crate::{Budget, Count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockGameConfig {
    n: usize,
    k: usize,
}

impl BlockGameConfig {
    /// Requires `k >= 1`, `2k | n` and `n >= 4k`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || !n.is_multiple_of(2 * k) || n < 4 * k {
            return Err(Error::InvalidParameters(format!(
                "block game needs k >= 1, 2k | n and n >= 4k (n={n}, k={k})"
            )));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of free blocks of length `2k`.
    pub fn blocks(&self) -> usize {
        (self.n - 4 * self.k) / (2 * self.k)
    }

    /// Cells of free block `b`, 0-based.
    pub fn block_range(&self, b: usize) -> Range<usize> {
        let start = 4 * self.k + 2 * self.k * b;
        start..start + 2 * self.k
    }

    /// `1^(4k)` followed by empty cells.
    pub fn initial_state(&self) -> GameState {
        let mut cells = vec![None; self.n];
        for c in &mut cells[..4 * self.k] {
            *c = Some(true);
        }
        GameState::from_cells(cells)
    }
}

/// Alice's reply once Bob has set `k` cells of `block`: enough 1s to bring
/// the block to exactly `k` ones, placed leftmost among the empty cells,
/// then 0s.
pub fn alice_block_strategy(
    state: &GameState,
    config: &BlockGameConfig,
    block: usize,
) -> Result<Vec<Move>> {
    if block >= config.blocks() || state.n() != config.n() {
        return Err(Error::InvalidParameters(format!(
            "block {block} does not exist for n={}, k={}",
            config.n(),
            config.k()
        )));
    }
    let range = config.block_range(block);
    let empty: Vec<usize> = range.clone().filter(|&i| state.cell(i).is_none()).collect();
    if empty.len() != config.k() {
        return Err(Error::InvalidParameters(format!(
            "block {block} has {} empty cells, expected {}",
            empty.len(),
            config.k()
        )));
    }
    let placed_ones = range.filter(|&i| state.cell(i) == Some(true)).count();
    let needed = config.k() - placed_ones;
    Ok(empty
        .into_iter()
        .enumerate()
        .map(|(j, position)| Move {
            position,
            bit: j < needed,
        })
        .collect())
}

fn binomial(n: usize, k: usize) -> Count {
    (0..k).fold(1, |acc: Count, i| acc * (n - i) as Count / (i + 1) as Count)
}

/// `binom(2k, k)^((n - 4k) / 2k)`.
pub fn block_outcome_formula(config: &BlockGameConfig) -> Option<Count> {
    binomial(2 * config.k(), config.k()).checked_pow(config.blocks() as u32)
}

fn over_budget(requested: Option<Count>, budget: &Budget, what: &'static str) -> Result<Count> {
    match requested {
        Some(r) if r <= budget.max_block_plays => Ok(r),
        r => Err(Error::BudgetExceeded {
            what,
            requested: r.unwrap_or(Count::MAX),
            limit: budget.max_block_plays,
        }),
    }
}

/// Result of replaying Alice's strategy against every Bob play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockVerification {
    /// Complete plays examined.
    pub plays: Count,
    /// First finished word that is not prefix normal.
    pub counterexample: Option<BinaryWord>,
}

impl BlockVerification {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Number of plays: block orders times `(binom(2k, k) 2^k)` per block.
fn play_count(config: &BlockGameConfig) -> Option<Count> {
    let per_block =
        binomial(2 * config.k(), config.k()).checked_mul(1u128.checked_shl(config.k() as u32)?)?;
    let orders = (1..=config.blocks() as Count).try_fold(1u128, |acc, i| acc.checked_mul(i))?;
    orders.checked_mul(per_block.checked_pow(config.blocks() as u32)?)
}

/// All `k`-subsets of `cells`, lexicographically.
fn subsets(cells: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(cells: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for (i, &c) in cells.iter().enumerate() {
            if cells.len() - i < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(&cells[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(cells, k, &mut Vec::new(), &mut out);
    out
}

/// Plays Alice's strategy against every Bob play: every block order, every
/// choice of `k` cells in the block and every assignment to them.
pub fn verify_block_lemma_detailed(
    config: &BlockGameConfig,
    budget: &Budget,
) -> Result<BlockVerification> {
    over_budget(play_count(config), budget, "block game plays")?;
    let mut state = config.initial_state();
    let mut remaining: Vec<usize> = (0..config.blocks()).collect();
    let mut result = BlockVerification {
        plays: 0,
        counterexample: None,
    };
    verify_rec(config, &mut state, &mut remaining, &mut result)?;
    Ok(result)
}

fn verify_rec(
    config: &BlockGameConfig,
    state: &mut GameState,
    remaining: &mut Vec<usize>,
    result: &mut BlockVerification,
) -> Result<()> {
    if remaining.is_empty() {
        result.plays += 1;
        let word = state.to_word().expect("all blocks filled");
        if result.counterexample.is_none() && !is_prefix_normal(&word) {
            result.counterexample = Some(word);
        }
        return Ok(());
    }
    let k = config.k();
    for idx in 0..remaining.len() {
        let block = remaining.remove(idx);
        let cells: Vec<usize> = config.block_range(block).collect();
        for chosen in subsets(&cells, k) {
            for values in 0..1u64 << k {
                for (j, &position) in chosen.iter().enumerate() {
                    state.apply(Move {
                        position,
                        bit: values >> j & 1 == 1,
                    })?;
                }
                for mv in alice_block_strategy(state, config, block)? {
                    state.apply(mv)?;
                }
                verify_rec(config, state, remaining, result)?;
                for position in cells.iter().copied() {
                    state.undo(position);
                }
            }
        }
        remaining.insert(idx, block);
    }
    Ok(())
}

/// Whether Alice's balancing strategy wins against every Bob play.
pub fn verify_block_lemma(config: &BlockGameConfig, budget: &Budget) -> Result<bool> {
    Ok(verify_block_lemma_detailed(config, budget)?.holds())
}

/// Distinct finished words when Bob places exactly `k` zeros in each block
/// and Alice fills the rest with 1s. Fails if any of them is not prefix
/// normal.
pub fn count_block_outcomes(config: &BlockGameConfig, budget: &Budget) -> Result<Count> {
    over_budget(block_outcome_formula(config), budget, "block game outcomes")?;
    let k = config.k();
    let mut words: HashSet<BinaryWord> = HashSet::new();
    let mut state = config.initial_state();
    outcomes_rec(config, 0, k, &mut state, &mut words)?;
    Ok(words.len() as Count)
}

fn outcomes_rec(
    config: &BlockGameConfig,
    block: usize,
    k: usize,
    state: &mut GameState,
    words: &mut HashSet<BinaryWord>,
) -> Result<()> {
    if block == config.blocks() {
        let word = state.to_word().expect("all blocks filled");
        if !is_prefix_normal(&word) {
            return Err(Error::StrategyFailed(word.to_string()));
        }
        words.insert(word);
        return Ok(());
    }
    let cells: Vec<usize> = config.block_range(block).collect();
    for zeros in subsets(&cells, k) {
        for &position in &zeros {
            state.apply(Move {
                position,
                bit: false,
            })?;
        }
        for mv in alice_block_strategy(state, config, block)? {
            state.apply(mv)?;
        }
        outcomes_rec(config, block + 1, k, state, words)?;
        for &position in &cells {
            state.undo(position);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, k: usize) -> BlockGameConfig {
        BlockGameConfig::new(n, k).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(BlockGameConfig::new(6, 0).is_err());
        assert!(BlockGameConfig::new(7, 1).is_err());
        assert!(BlockGameConfig::new(4, 2).is_err());
        assert_eq!(cfg(12, 2).blocks(), 1);
        assert_eq!(cfg(8, 1).block_range(1), 6..8);
    }

    #[test]
    fn strategy_replies() {
        let c = cfg(12, 2);
        let mut s = c.initial_state();
        for position in [8, 9] {
            s.apply(Move {
                position,
                bit: true,
            })
            .unwrap();
        }
        let reply = alice_block_strategy(&s, &c, 0).unwrap();
        assert_eq!(
            reply.iter().map(|m| m.bit).collect::<Vec<_>>(),
            [false, false]
        );

        let mut s = c.initial_state();
        s.apply(Move {
            position: 8,
            bit: true,
        })
        .unwrap();
        s.apply(Move {
            position: 10,
            bit: false,
        })
        .unwrap();
        let reply = alice_block_strategy(&s, &c, 0).unwrap();
        assert_eq!(
            reply,
            [
                Move {
                    position: 9,
                    bit: true
                },
                Move {
                    position: 11,
                    bit: false
                }
            ]
        );

        let c = cfg(6, 1);
        let mut s = c.initial_state();
        s.apply(Move {
            position: 4,
            bit: false,
        })
        .unwrap();
        assert_eq!(
            alice_block_strategy(&s, &c, 0).unwrap(),
            [Move {
                position: 5,
                bit: true
            }]
        );
        // Untouched block is not half filled.
        assert!(alice_block_strategy(&c.initial_state(), &c, 0).is_err());
        assert!(alice_block_strategy(&s, &c, 1).is_err());
    }

    #[test]
    fn lemma_and_counts() {
        let b = Budget::default();
        for (n, k) in [(4, 1), (6, 1), (8, 1), (8, 2), (12, 2)] {
            assert!(verify_block_lemma(&cfg(n, k), &b).unwrap(), "n={n} k={k}");
        }
        let v = verify_block_lemma_detailed(&cfg(8, 1), &b).unwrap();
        assert_eq!(v.plays, 2 * 16);
        assert_eq!(count_block_outcomes(&cfg(8, 1), &b).unwrap(), 4);
        assert_eq!(count_block_outcomes(&cfg(12, 1), &b).unwrap(), 16);
        assert_eq!(count_block_outcomes(&cfg(8, 2), &b).unwrap(), 1);
        assert_eq!(block_outcome_formula(&cfg(16, 2)), Some(36));
        let tight = Budget {
            max_block_plays: 10,
            ..Budget::default()
        };
        assert!(verify_block_lemma(&cfg(8, 1), &tight).is_err());
    }
}
