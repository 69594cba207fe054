//! Exhaustive enumeration and counting of prefix normal words.
//!
//! Prefix normal words are closed under taking prefixes, and `w0` is prefix
//! normal whenever `w` is, so they form a tree searched depth first from the
//! empty word. Only the child `w1` needs a test: since `w` is prefix normal,
//! `F(w, ·)` coincides with the prefix counts along the path, and `w1` is
//! prefix normal iff none of its suffixes carries more 1s than the prefix of
//! the same length.

pub mod bounds;
pub mod ext;
pub mod gf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::BinaryWord;
use crate::{Budget, Count};

/// `sums[i]` = ones among the first `i` symbols of a prefix normal word.
/// Returns whether appending a 1 keeps it prefix normal.
#[inline]
pub(crate) fn one_extends(sums: &[u32]) -> bool {
    let len = sums.len() - 1;
    let total = sums[len];
    (1..=len).all(|k| 1 + total - sums[len + 1 - k] <= sums[k])
}

/// Calls `visit` on every prefix normal word of length `n`, in
/// lexicographic order.
pub fn for_each_prefix_normal(n: usize, mut visit: impl FnMut(&BinaryWord)) {
    let mut word = BinaryWord::with_capacity(n);
    let mut sums = Vec::with_capacity(n + 1);
    sums.push(0u32);
    visit_rec(n, &mut word, &mut sums, &mut visit);
}

fn visit_rec(
    n: usize,
    word: &mut BinaryWord,
    sums: &mut Vec<u32>,
    visit: &mut impl FnMut(&BinaryWord),
) {
    if word.len() == n {
        visit(word);
        return;
    }
    let total = sums[sums.len() - 1];
    let extends = one_extends(sums);
    word.push(false);
    sums.push(total);
    visit_rec(n, word, sums, visit);
    word.pop();
    sums.pop();
    if extends {
        word.push(true);
        sums.push(total + 1);
        visit_rec(n, word, sums, visit);
        word.pop();
        sums.pop();
    }
}

/// All prefix normal words of length `n`, in lexicographic order.
pub fn enumerate_pn(n: usize) -> Vec<BinaryWord> {
    let mut out = Vec::new();
    for_each_prefix_normal(n, |w| out.push(w.clone()));
    out
}

/// Per-length counts gathered by one depth-first sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumCounts {
    max_n: usize,
    pnw: Vec<Count>,
    crit: Vec<Count>,
    density: Vec<Vec<Count>>,
}

/// `pnw(n, d)` for `d = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityTable {
    pub n: usize,
    pub counts: Vec<Count>,
}

impl DensityTable {
    pub fn total(&self) -> Count {
        self.counts.iter().sum()
    }
}

/// One row of the extension-critical ratio series.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumRecord {
    pub n: usize,
    pub pnw: Count,
    pub crit: Count,
    /// `crit / pnw`.
    pub ratio: f64,
    /// `ratio * n / ln n`.
    pub scaled_ratio: f64,
}

impl EnumCounts {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn pnw(&self, n: usize) -> Count {
        self.pnw[n]
    }

    /// Prefix normal words `w` of length `n` with `w1` not prefix normal.
    pub fn crit(&self, n: usize) -> Count {
        self.crit[n]
    }

    pub fn pnw_density(&self, n: usize, d: usize) -> Count {
        self.density[n].get(d).copied().unwrap_or(0)
    }

    pub fn density_table(&self, n: usize) -> DensityTable {
        DensityTable {
            n,
            counts: self.density[n].clone(),
        }
    }

    /// Rows for `n = 2..=max_n`.
    pub fn records(&self) -> Vec<EnumRecord> {
        (2..=self.max_n)
            .map(|n| {
                let (pnw, crit) = (self.pnw[n], self.crit[n]);
                let ratio = crit as f64 / pnw as f64;
                EnumRecord {
                    n,
                    pnw,
                    crit,
                    ratio,
                    scaled_ratio: ratio * n as f64 / (n as f64).ln(),
                }
            })
            .collect()
    }

    /// `2 * prod_{i=1}^{n-1} (2 - crit(i)/pnw(i))` in exact arithmetic.
    pub fn crit_product(&self, n: usize) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        (1..n).fold(two.clone(), |acc, i| {
            let ratio = BigRational::new(BigInt::from(self.crit[i]), BigInt::from(self.pnw[i]));
            acc * (&two - ratio)
        })
    }
}

#[derive(Clone)]
struct Tally {
    pnw: Vec<u64>,
    crit: Vec<u64>,
    density: Vec<Vec<u64>>,
}

impl Tally {
    fn new(max_n: usize) -> Self {
        Self {
            pnw: vec![0; max_n + 1],
            crit: vec![0; max_n + 1],
            density: (0..=max_n).map(|n| vec![0; n + 1]).collect(),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.pnw.iter_mut().zip(&other.pnw) {
            *a += b;
        }
        for (a, b) in self.crit.iter_mut().zip(&other.crit) {
            *a += b;
        }
        for (row, other_row) in self.density.iter_mut().zip(&other.density) {
            for (a, b) in row.iter_mut().zip(other_row) {
                *a += b;
            }
        }
        self
    }
}

fn count_rec(max_n: usize, sums: &mut Vec<u32>, tally: &mut Tally) {
    let len = sums.len() - 1;
    let total = sums[len];
    tally.pnw[len] += 1;
    tally.density[len][total as usize] += 1;
    let extends = one_extends(sums);
    if !extends {
        tally.crit[len] += 1;
    }
    if len == max_n {
        return;
    }
    sums.push(total);
    count_rec(max_n, sums, tally);
    sums.pop();
    if extends {
        sums.push(total + 1);
        count_rec(max_n, sums, tally);
        sums.pop();
    }
}

/// Tallies nodes shallower than `depth` and collects the nodes at `depth`.
fn collect_roots(depth: usize, sums: &mut Vec<u32>, tally: &mut Tally, roots: &mut Vec<Vec<u32>>) {
    let len = sums.len() - 1;
    if len == depth {
        roots.push(sums.clone());
        return;
    }
    let total = sums[len];
    tally.pnw[len] += 1;
    tally.density[len][total as usize] += 1;
    let extends = one_extends(sums);
    if !extends {
        tally.crit[len] += 1;
    }
    sums.push(total);
    collect_roots(depth, sums, tally, roots);
    sums.pop();
    if extends {
        sums.push(total + 1);
        collect_roots(depth, sums, tally, roots);
        sums.pop();
    }
}

const SPLIT_DEPTH: usize = 12;

fn check_budget(n: usize, budget: &Budget) -> Result<()> {
    if n > budget.max_enum_n {
        return Err(Error::BudgetExceeded {
            what: "enumeration length",
            requested: n as u128,
            limit: budget.max_enum_n as u128,
        });
    }
    Ok(())
}

/// Counts `pnw`, `crit` and `pnw(n, d)` for every length up to `max_n`.
///
/// Subtrees below depth 12 are counted independently and merged; totals do
/// not depend on the number of worker threads.
pub fn count_prefix_normal(max_n: usize, budget: &Budget) -> Result<EnumCounts> {
    check_budget(max_n, budget)?;
    let depth = SPLIT_DEPTH.min(max_n);
    let mut tally = Tally::new(max_n);
    let mut roots = Vec::new();
    collect_roots(depth, &mut vec![0], &mut tally, &mut roots);
    let tally = roots
        .into_par_iter()
        .map(|mut root| {
            let mut local = Tally::new(max_n);
            count_rec(max_n, &mut root, &mut local);
            local
        })
        .reduce(|| Tally::new(max_n), Tally::merge)
        .merge(tally);
    let widen = |v: &[u64]| v.iter().map(|&c| c as Count).collect::<Vec<_>>();
    Ok(EnumCounts {
        max_n,
        pnw: widen(&tally.pnw),
        crit: widen(&tally.crit),
        density: tally.density.iter().map(|row| widen(row)).collect(),
    })
}

pub fn pnw_count(n: usize, budget: &Budget) -> Result<Count> {
    Ok(count_prefix_normal(n, budget)?.pnw(n))
}

pub fn pnw_density(n: usize, d: usize, budget: &Budget) -> Result<Count> {
    Ok(count_prefix_normal(n, budget)?.pnw_density(n, d))
}

pub fn crit_count(n: usize, budget: &Budget) -> Result<Count> {
    Ok(count_prefix_normal(n, budget)?.crit(n))
}

/// `n, pnw, crit, crit/pnw, (crit/pnw) n / ln n` for `n = 2..=max_n`.
pub fn ratio_series(max_n: usize, budget: &Budget) -> Result<Vec<EnumRecord>> {
    Ok(count_prefix_normal(max_n, budget)?.records())
}
