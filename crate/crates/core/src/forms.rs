//! Structural decompositions of a binary word: the critical prefix
//! `1^s 0^t γ`, the run-length form over maximal `1*0*` blocks, and the gap
//! form `1 0^(r1-1) 1 0^(r2-1) ... 1 0^(rd-1)` with its prefix-normality
//! characterization.

use crate::error::{Error, Result};
use crate::word::{BinaryWord, Violation};

/// `w = 1^s 0^t γ` with `t > 0` and `γ` empty or starting with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPrefix {
    pub s: usize,
    pub t: usize,
    pub gamma: BinaryWord,
}

impl CriticalPrefix {
    pub fn recompose(&self) -> BinaryWord {
        let mut w = BinaryWord::ones_then_zeros(self.s, self.t);
        w.extend(self.gamma.iter());
        w
    }

    /// Length of the critical prefix `1^s 0^t`.
    pub fn len(&self) -> usize {
        self.s + self.t
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Splits `w` into its critical prefix and the remainder.
///
/// Fails on `1^n`, including the empty word.
pub fn decompose_critical(w: &BinaryWord) -> Result<CriticalPrefix> {
    let n = w.len();
    let s = w.iter().take_while(|&b| b).count();
    if s == n {
        return Err(Error::NoCriticalPrefix(w.to_string()));
    }
    let t = w.iter().skip(s).take_while(|&b| !b).count();
    Ok(CriticalPrefix {
        s,
        t,
        gamma: w.suffix(s + t),
    })
}

/// One maximal `1^ones 0^zeros` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunBlock {
    pub ones: usize,
    pub zeros: usize,
}

/// Decomposition into maximal `1*0*` blocks `(s_1,t_1)...(s_c,t_c)`.
///
/// Only the first block may have no 1s, only the last may have no 0s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunLengthForm {
    blocks: Vec<RunBlock>,
}

impl RunLengthForm {
    pub fn from_word(w: &BinaryWord) -> Self {
        let mut blocks = Vec::new();
        push_run_blocks(w.iter(), &mut blocks);
        Self { blocks }
    }

    /// Validates the block invariants.
    pub fn from_blocks(blocks: Vec<RunBlock>) -> Result<Self> {
        let c = blocks.len();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 && b.ones == 0 {
                return Err(Error::InvalidParameters(format!(
                    "block {} has no ones",
                    i + 1
                )));
            }
            if i + 1 < c && b.zeros == 0 {
                return Err(Error::InvalidParameters(format!(
                    "block {} has no zeros",
                    i + 1
                )));
            }
        }
        if c == 1 && blocks[0].ones == 0 && blocks[0].zeros == 0 {
            return Err(Error::InvalidParameters("empty block".into()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[RunBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.ones + b.zeros).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn to_word(&self) -> BinaryWord {
        let mut w = BinaryWord::with_capacity(self.len());
        for b in &self.blocks {
            w.extend_repeat(true, b.ones);
            w.extend_repeat(false, b.zeros);
        }
        w
    }
}

/// Appends the `1*0*` blocks of `bits` to `out` (which the caller clears).
pub(crate) fn push_run_blocks(bits: impl Iterator<Item = bool>, out: &mut Vec<RunBlock>) {
    let mut current: Option<RunBlock> = None;
    for bit in bits {
        match (&mut current, bit) {
            (None, true) => current = Some(RunBlock { ones: 1, zeros: 0 }),
            (None, false) => current = Some(RunBlock { ones: 0, zeros: 1 }),
            (Some(b), true) if b.zeros == 0 => b.ones += 1,
            (Some(b), true) => {
                out.push(*b);
                current = Some(RunBlock { ones: 1, zeros: 0 });
            }
            (Some(b), false) => b.zeros += 1,
        }
    }
    out.extend(current);
}

pub fn to_run_length(w: &BinaryWord) -> RunLengthForm {
    RunLengthForm::from_word(w)
}

/// `w = 1 0^(r1-1) 1 0^(r2-1) ... 1 0^(rd-1)`: the distances between
/// consecutive 1s, with the last gap running to the end of the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapForm {
    len: usize,
    gaps: Vec<usize>,
}

impl GapForm {
    pub fn from_word(w: &BinaryWord) -> Result<Self> {
        if w.is_empty() || !w.get(0) {
            return Err(Error::NotStartingWithOne);
        }
        let ones: Vec<usize> = (0..w.len()).filter(|&i| w.get(i)).collect();
        let mut gaps: Vec<usize> = ones.windows(2).map(|p| p[1] - p[0]).collect();
        gaps.push(w.len() - ones[ones.len() - 1]);
        Ok(Self { len: w.len(), gaps })
    }

    pub fn from_gaps(gaps: Vec<usize>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::InvalidParameters(
                "gap form needs density > 0".into(),
            ));
        }
        if gaps.contains(&0) {
            return Err(Error::NonPositiveGap);
        }
        Ok(Self {
            len: gaps.iter().sum(),
            gaps,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn density(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn to_word(&self) -> BinaryWord {
        let mut w = BinaryWord::with_capacity(self.len);
        for &r in &self.gaps {
            w.push(true);
            w.extend_repeat(false, r - 1);
        }
        w
    }

    /// First failing inequality `r1+..+rm <= rj+..+r(j+m-1)` as `(m, j)`
    /// (both 1-based), scanning `m = 1..=d-2` and `j = 2..=d-m`.
    pub fn first_failed_inequality(&self) -> Option<(usize, usize)> {
        let d = self.gaps.len();
        let mut sums = Vec::with_capacity(d + 1);
        sums.push(0);
        for &r in &self.gaps {
            sums.push(sums[sums.len() - 1] + r);
        }
        for m in 1..d.saturating_sub(1) {
            let head = sums[m];
            for j in 2..=d - m {
                if sums[j + m - 1] - sums[j - 1] < head {
                    return Some((m, j));
                }
            }
        }
        None
    }

    pub fn is_prefix_normal(&self) -> bool {
        self.first_failed_inequality().is_none()
    }

    /// The substring spanning `m + 1` ones that is shorter than the
    /// shortest prefix holding that many.
    pub fn violation(&self) -> Option<Violation> {
        let (m, j) = self.first_failed_inequality()?;
        let start: usize = self.gaps[..j - 1].iter().sum();
        let length = self.gaps[j - 1..j - 1 + m].iter().sum::<usize>() + 1;
        // The prefix of that length ends before the (m+1)-th one.
        let mut prefix_ones = 0;
        let mut pos = 0;
        for &r in &self.gaps {
            if pos >= length {
                break;
            }
            prefix_ones += 1;
            pos += r;
        }
        Some(Violation {
            start,
            length,
            ones: m + 1,
            prefix_ones,
        })
    }
}

pub fn to_gap_form(w: &BinaryWord) -> Result<GapForm> {
    GapForm::from_word(w)
}

/// Gap-form prefix-normality test.
pub fn is_prefix_normal_gaps(g: &GapForm) -> bool {
    g.is_prefix_normal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_prefix_normal;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn gap_form_examples() {
        let g = to_gap_form(&w("110100010")).unwrap();
        assert_eq!(g.density(), 4);
        assert_eq!(g.gaps(), &[1, 2, 4, 2]);
        assert_eq!(g.to_word(), w("110100010"));

        let one = to_gap_form(&w("1")).unwrap();
        assert_eq!(one.gaps(), &[1]);
        assert!(is_prefix_normal_gaps(&one));

        let bad = to_gap_form(&w("101100")).unwrap();
        assert_eq!(bad.gaps(), &[2, 1, 3]);
        assert_eq!(bad.first_failed_inequality(), Some((1, 2)));
        assert!(!is_prefix_normal(&w("101100")));
        let v = bad.violation().unwrap();
        assert!(v.holds_in(&w("101100")), "{v:?}");

        assert_eq!(to_gap_form(&w("0110")), Err(Error::NotStartingWithOne));
        assert_eq!(to_gap_form(&w("")), Err(Error::NotStartingWithOne));
        assert_eq!(GapForm::from_gaps(vec![1, 0]), Err(Error::NonPositiveGap));
    }

    #[test]
    fn run_length_examples() {
        let rl = to_run_length(&w("11100101011100110"));
        let pairs: Vec<_> = rl.blocks().iter().map(|b| (b.ones, b.zeros)).collect();
        assert_eq!(pairs, vec![(3, 2), (1, 1), (1, 1), (3, 2), (2, 1)]);
        assert_eq!(rl.to_word(), w("11100101011100110"));

        let zeros = to_run_length(&w("0000"));
        assert_eq!(zeros.blocks(), &[RunBlock { ones: 0, zeros: 4 }]);
        assert!(to_run_length(&w("")).is_empty());
        assert!(RunLengthForm::from_blocks(vec![
            RunBlock { ones: 1, zeros: 0 },
            RunBlock { ones: 1, zeros: 1 }
        ])
        .is_err());
    }

    #[test]
    fn critical_prefix_examples() {
        let c = decompose_critical(&w("110100101")).unwrap();
        assert_eq!((c.s, c.t), (2, 1));
        assert_eq!(c.gamma, w("100101"));
        assert_eq!(c.recompose(), w("110100101"));

        let z = decompose_critical(&w("00000")).unwrap();
        assert_eq!((z.s, z.t, z.gamma.len()), (0, 5, 0));

        assert!(matches!(
            decompose_critical(&w("111")),
            Err(Error::NoCriticalPrefix(_))
        ));
        assert!(decompose_critical(&w("")).is_err());
    }
}
