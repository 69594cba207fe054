//! The Parikh index of a binary word and its two prefix normal forms.
//!
//! For every length `k` the ones-counts of the length-`k` substrings form a
//! contiguous interval `[min_ones(k), max_ones(k)]`, so two count sequences
//! describe the whole Parikh set and answer any jumbled query in constant
//! time. Read as binary words, the increments of the upper and lower
//! sequences are the prefix normal forms w.r.t. 1 and w.r.t. 0.

use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// Per-length minimum and maximum ones-counts over all substrings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhIndex {
    max_ones: Vec<u32>,
    min_ones: Vec<u32>,
}

impl ParikhIndex {
    /// Builds the index by walking every suffix from a common origin and
    /// keeping the upper and lower envelope of the ones-count walks.
    ///
    /// Suffixes are swept longest first. Quadratic time, linear extra space.
    pub fn suffix_sweep(w: &BinaryWord) -> Self {
        let n = w.len();
        let bits = w.to_bytes();
        let mut max_ones = vec![0u32; n + 1];
        // A length-k walk never exceeds k ones.
        let mut min_ones: Vec<u32> = (0..=n as u32).collect();
        for start in 0..n {
            let mut ones = 0u32;
            let walk = &bits[start..];
            let upper = &mut max_ones[1..=walk.len()];
            let lower = &mut min_ones[1..=walk.len()];
            for ((&bit, hi), lo) in walk.iter().zip(upper).zip(lower) {
                ones += bit as u32;
                *hi = (*hi).max(ones);
                *lo = (*lo).min(ones);
            }
        }
        Self { max_ones, min_ones }
    }

    /// Word length `n`.
    pub fn len(&self) -> usize {
        self.max_ones.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn density(&self) -> usize {
        self.max_ones[self.len()] as usize
    }

    /// `F(w, k)`.
    pub fn max_ones(&self, k: usize) -> usize {
        self.max_ones[k] as usize
    }

    pub fn min_ones(&self, k: usize) -> usize {
        self.min_ones[k] as usize
    }

    pub fn max_ones_table(&self) -> Vec<usize> {
        self.max_ones.iter().map(|&c| c as usize).collect()
    }

    pub fn min_ones_table(&self) -> Vec<usize> {
        self.min_ones.iter().map(|&c| c as usize).collect()
    }

    /// `PNF_1(w)`: symbol `k` is 1 iff the maximum grows from `k-1` to `k`.
    pub fn pnf_one(&self) -> BinaryWord {
        increments(&self.max_ones)
    }

    /// `PNF_0(w)`: symbol `k` is 1 iff the minimum grows from `k-1` to `k`.
    pub fn pnf_zero(&self) -> BinaryWord {
        increments(&self.min_ones)
    }

    /// Does some substring have exactly `ones` 1s and `zeros` 0s?
    pub fn query(&self, ones: usize, zeros: usize) -> Result<JumbledAnswer> {
        let k = ones + zeros;
        if k > self.len() {
            return Err(Error::QueryTooLong {
                ones,
                zeros,
                len: self.len(),
            });
        }
        let (min_ones, max_ones) = (self.min_ones(k), self.max_ones(k));
        Ok(JumbledAnswer {
            present: min_ones <= ones && ones <= max_ones,
            min_ones,
            max_ones,
        })
    }
}

/// Answer to a jumbled query, with the interval it was decided from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumbledAnswer {
    pub present: bool,
    pub min_ones: usize,
    pub max_ones: usize,
}

fn increments(counts: &[u32]) -> BinaryWord {
    counts.windows(2).map(|p| p[1] > p[0]).collect()
}

pub fn build_index(w: &BinaryWord) -> ParikhIndex {
    ParikhIndex::suffix_sweep(w)
}

pub fn pnf_one(w: &BinaryWord) -> BinaryWord {
    ParikhIndex::suffix_sweep(w).pnf_one()
}

pub fn pnf_zero(w: &BinaryWord) -> BinaryWord {
    ParikhIndex::suffix_sweep(w).pnf_zero()
}

/// Prefix normal equivalence w.r.t. 1: equal length and equal `F`.
pub fn pn_equivalent(u: &BinaryWord, v: &BinaryWord) -> bool {
    u.len() == v.len()
        && ParikhIndex::suffix_sweep(u).max_ones == ParikhIndex::suffix_sweep(v).max_ones
}

pub fn query_jumbled(index: &ParikhIndex, ones: usize, zeros: usize) -> Result<JumbledAnswer> {
    index.query(ones, zeros)
}
