//! Binary words, the prefix-ones function `P` and the substring-maximum
//! function `F`, and the quadratic reference test for prefix normality.
//!
//! A word is *prefix normal* when no substring carries more 1s than the
//! prefix of the same length, i.e. `F(w, i) == P(w, i)` for every `i`.
//! [`find_violation`] is the reference oracle every other tester in this
//! crate is checked against.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const BLOCK: usize = 64;

/// A finite word over `{0, 1}`, stored as packed bits.
///
/// The canonical text form is a string of ASCII `'0'` and `'1'`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    len: usize,
    blocks: Vec<u64>,
}

impl BinaryWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            len: 0,
            blocks: Vec::with_capacity(bits.div_ceil(BLOCK)),
        }
    }

    /// `0^n`.
    pub fn zeros(n: usize) -> Self {
        Self {
            len: n,
            blocks: vec![0; n.div_ceil(BLOCK)],
        }
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        let mut w = Self {
            len: n,
            blocks: vec![u64::MAX; n.div_ceil(BLOCK)],
        };
        w.clear_tail();
        w
    }

    /// `1^ones 0^zeros`.
    pub fn ones_then_zeros(ones: usize, zeros: usize) -> Self {
        let mut w = Self::ones(ones);
        w.extend_repeat(false, zeros);
        w
    }

    /// The `len` low bits of `value`, most significant bit first.
    ///
    /// This is the numbering used by exhaustive sweeps: iterating `value`
    /// over `0..2^len` visits all words of length `len` in lexicographic
    /// order.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_u64 supports at most 64 symbols");
        (0..len)
            .map(|i| (value >> (len - 1 - i)) & 1 == 1)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at 0-based position `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.blocks[i / BLOCK] >> (i % BLOCK)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % BLOCK);
        if bit {
            self.blocks[i / BLOCK] |= mask;
        } else {
            self.blocks[i / BLOCK] &= !mask;
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(BLOCK) {
            self.blocks.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, bit);
    }

    pub fn pop(&mut self) -> Option<bool> {
        if self.len == 0 {
            return None;
        }
        let bit = self.get(self.len - 1);
        self.set(self.len - 1, false);
        self.len -= 1;
        if self.len.is_multiple_of(BLOCK) {
            self.blocks.pop();
        }
        Some(bit)
    }

    pub fn extend_repeat(&mut self, bit: bool, count: usize) {
        for _ in 0..count {
            self.push(bit);
        }
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = self.clone();
        out.extend(other.iter());
        out
    }

    /// The prefix of length `len`.
    pub fn prefix(&self, len: usize) -> BinaryWord {
        assert!(len <= self.len);
        self.iter().take(len).collect()
    }

    /// The suffix starting at 0-based position `start`.
    pub fn suffix(&self, start: usize) -> BinaryWord {
        assert!(start <= self.len);
        self.iter().skip(start).collect()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Number of 1s, `|w|_1`.
    pub fn density(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// `P(w, i)`: number of 1s among the first `i` symbols.
    pub fn prefix_ones(&self, i: usize) -> Result<usize> {
        if i > self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        let full = i / BLOCK;
        let mut count: usize = self.blocks[..full]
            .iter()
            .map(|b| b.count_ones() as usize)
            .sum();
        let rest = i % BLOCK;
        if rest > 0 {
            count += (self.blocks[full] & ((1u64 << rest) - 1)).count_ones() as usize;
        }
        Ok(count)
    }

    /// `sums[i] = P(w, i)` for `i = 0..=n`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.len + 1);
        sums.push(0);
        let mut acc = 0;
        for bit in self.iter() {
            acc += bit as usize;
            sums.push(acc);
        }
        sums
    }

    /// Symbols as a byte vector of 0s and 1s.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    fn clear_tail(&mut self) {
        let rest = self.len % BLOCK;
        if rest > 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rest) - 1;
            }
        }
    }
}

impl FromIterator<bool> for BinaryWord {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let iter = iter.into_iter();
        let mut w = BinaryWord::with_capacity(iter.size_hint().0);
        for bit in iter {
            w.push(bit);
        }
        w
    }
}

impl Extend<bool> for BinaryWord {
    fn extend<I: IntoIterator<Item = bool>>(&mut self, iter: I) {
        for bit in iter {
            self.push(bit);
        }
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut w = BinaryWord::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => w.push(false),
                '1' => w.push(true),
                found => {
                    return Err(Error::InvalidSymbol {
                        position: i + 1,
                        found,
                    })
                }
            }
        }
        Ok(w)
    }
}

/// Parses the canonical text form.
pub fn parse_word(text: &str) -> Result<BinaryWord> {
    text.parse()
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

/// Lexicographic order of the text form (a proper prefix sorts first).
impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `F(w, 0..=n)`: the maximum number of 1s over all substrings of each
/// length, by a sliding window per length.
pub fn f_table(w: &BinaryWord) -> Vec<usize> {
    let sums = w.prefix_sums();
    let n = w.len();
    let mut f = vec![0; n + 1];
    for (k, slot) in f.iter_mut().enumerate().skip(1) {
        *slot = (0..=n - k)
            .map(|s| sums[s + k] - sums[s])
            .max()
            .unwrap_or(0);
    }
    f
}

/// A substring with more 1s than the prefix of the same length.
///
/// `start` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub start: usize,
    pub length: usize,
    pub ones: usize,
    pub prefix_ones: usize,
}

impl Violation {
    /// Recounts both sides against `w`.
    pub fn holds_in(&self, w: &BinaryWord) -> bool {
        if self.length == 0 || self.start + self.length > w.len() {
            return false;
        }
        let ones = (self.start..self.start + self.length)
            .filter(|&i| w.get(i))
            .count();
        let prefix = (0..self.length).filter(|&i| w.get(i)).count();
        ones == self.ones && prefix == self.prefix_ones && ones > prefix
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "substring at {} of length {} has {} ones, prefix has {}",
            self.start + 1,
            self.length,
            self.ones,
            self.prefix_ones
        )
    }
}

/// Finds the violation with the smallest length, then the smallest start,
/// or `None` when `w` is prefix normal.
///
/// Quadratic in the worst case; stops at the first offending length.
pub fn find_violation(w: &BinaryWord) -> Option<Violation> {
    let n = w.len();
    let d = w.density();
    if d == 0 || d == n {
        return None;
    }
    let sums = w.prefix_sums();
    find_violation_in_sums(&sums)
}

pub(crate) fn find_violation_in_sums(sums: &[usize]) -> Option<Violation> {
    let n = sums.len() - 1;
    for length in 1..=n {
        let prefix_ones = sums[length];
        for start in 1..=n - length {
            let ones = sums[start + length] - sums[start];
            if ones > prefix_ones {
                return Some(Violation {
                    start,
                    length,
                    ones,
                    prefix_ones,
                });
            }
        }
    }
    None
}

/// The reference quadratic test.
pub fn is_prefix_normal(w: &BinaryWord) -> bool {
    find_violation(w).is_none()
}
