//! Membership testers for prefix normal words.
//!
//! - [`filter_run_of_ones`] and [`filter_blocks`]: linear-time rejection
//!   filters. Both are sound: they never reject a prefix normal word.
//! - [`test_vseq`]: walks from `1^d 0^(n-d)` to `w` one swap at a time and
//!   checks each intermediate word at a single length.
//! - [`test_doubling`]: the same tester on prefixes of length 2, 4, 8, ...
//! - [`member_pn`]: both filters, then an exact second phase.
//!
//! Every tester returns a [`TestOutcome`] whose witness (on rejection) is a
//! genuine violation in the tested word.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forms::{push_run_blocks, GapForm, RunBlock, RunLengthForm};
use crate::index::ParikhIndex;
use crate::word::{find_violation, BinaryWord, Violation};

/// Which part of a tester decided the outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    TrivialCase,
    RunFilter,
    BlockFilter,
    VSeq,
    Naive,
    GapForm,
    PnfEquality,
}

impl Stage {
    pub fn label(self) -> &'static str {
        match self {
            Stage::TrivialCase => "trivial-case",
            Stage::RunFilter => "run-filter",
            Stage::BlockFilter => "block-filter",
            Stage::VSeq => "vseq",
            Stage::Naive => "naive",
            Stage::GapForm => "gaps",
            Stage::PnfEquality => "pnf-eq",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TestOutcome {
    pub accepted: bool,
    pub witness: Option<Violation>,
    pub decided_by: Stage,
}

impl TestOutcome {
    fn accept(decided_by: Stage) -> Self {
        Self {
            accepted: true,
            witness: None,
            decided_by,
        }
    }

    fn reject(witness: Violation, decided_by: Stage) -> Self {
        Self {
            accepted: false,
            witness: Some(witness),
            decided_by,
        }
    }
}

/// `n = 0`, density 0 and density `n` are prefix normal.
fn is_degenerate(w: &BinaryWord) -> bool {
    let d = w.density();
    d == 0 || d == w.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterVerdict {
    Pass,
    Reject(Violation),
}

impl FilterVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, FilterVerdict::Pass)
    }
}

/// Index of the first block whose 1-run is longer than the leading one.
fn run_filter_hit(blocks: &[RunBlock]) -> Option<usize> {
    let lead = blocks.first()?.ones;
    blocks.iter().position(|b| b.ones > lead)
}

/// First `i` (0-based, `i >= 1`) with
/// `s[i-1] + t[i-1] + s[i] <= s[0] + t[0]` and `s[i-1] + s[i] > s[0]`.
fn block_filter_hit(blocks: &[RunBlock]) -> Option<usize> {
    let first = blocks.first()?;
    let (s1, crit) = (first.ones, first.ones + first.zeros);
    (1..blocks.len()).find(|&i| {
        let (prev, cur) = (blocks[i - 1], blocks[i]);
        prev.ones + prev.zeros + cur.ones <= crit && prev.ones + cur.ones > s1
    })
}

fn block_start(blocks: &[RunBlock], i: usize) -> usize {
    blocks[..i].iter().map(|b| b.ones + b.zeros).sum()
}

fn prefix_ones_of_blocks(blocks: &[RunBlock], len: usize) -> usize {
    let mut ones = 0;
    let mut pos = 0;
    for b in blocks {
        if pos >= len {
            break;
        }
        ones += b.ones.min(len - pos);
        pos += b.ones + b.zeros;
    }
    ones
}

/// Rejects iff some run of 1s is strictly longer than the leading run.
pub fn filter_run_of_ones(w: &BinaryWord) -> FilterVerdict {
    let rl = RunLengthForm::from_word(w);
    let blocks = rl.blocks();
    match run_filter_hit(blocks) {
        None => FilterVerdict::Pass,
        Some(i) => {
            let length = blocks[i].ones;
            FilterVerdict::Reject(Violation {
                start: block_start(blocks, i),
                length,
                ones: length,
                prefix_ones: prefix_ones_of_blocks(blocks, length),
            })
        }
    }
}

/// Rejects iff a substring `1^a 0^b 1^c` spanning two consecutive blocks is
/// no longer than the critical prefix yet has more 1s than it.
pub fn filter_blocks(rl: &RunLengthForm) -> FilterVerdict {
    let blocks = rl.blocks();
    match block_filter_hit(blocks) {
        None => FilterVerdict::Pass,
        Some(i) => {
            let (prev, cur) = (blocks[i - 1], blocks[i]);
            let length = prev.ones + prev.zeros + cur.ones;
            FilterVerdict::Reject(Violation {
                start: block_start(blocks, i - 1),
                length,
                ones: prev.ones + cur.ones,
                prefix_ones: prefix_ones_of_blocks(blocks, length),
            })
        }
    }
}

/// Decides whether the child `1^(s-1) 0^i 1 0^(t-i) γ` of a prefix normal
/// word `1^s 0^t γ` is prefix normal, from two numbers only:
///
/// - `gamma_max_ones`: `F(γ, k)` for the child's critical length `k = s-1+i`
///   (the density of `γ` when `k > |γ|`),
/// - `z`: the 1s in the part of `γ` covered by the length-`k` window that
///   starts at the moved 1.
///
/// The child's prefix of length `k` holds `s - 1` ones; the child is prefix
/// normal iff neither window beats that.
pub fn childpnf_check(s: usize, gamma_max_ones: usize, z: usize) -> bool {
    s >= 1 && gamma_max_ones < s && z + 1 < s
}

/// One swap step `1^s 0^t γ -> 1^(s-1) 0^offset 1 0^(t-offset) γ`, with the
/// check inputs computed from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChildStep {
    s: usize,
    t: usize,
    offset: usize,
    gamma: BinaryWord,
}

impl ChildStep {
    pub fn new(s: usize, t: usize, offset: usize, gamma: BinaryWord) -> Result<Self> {
        if s == 0 || offset == 0 || offset > t {
            return Err(Error::InvalidParameters(format!(
                "need s >= 1 and 1 <= offset <= t (s={s}, t={t}, offset={offset})"
            )));
        }
        if !gamma.is_empty() && !gamma.get(0) {
            return Err(Error::InvalidParameters("gamma must start with 1".into()));
        }
        Ok(Self {
            s,
            t,
            offset,
            gamma,
        })
    }

    pub fn parent(&self) -> BinaryWord {
        let mut w = BinaryWord::ones_then_zeros(self.s, self.t);
        w.extend(self.gamma.iter());
        w
    }

    pub fn child(&self) -> BinaryWord {
        let mut w = BinaryWord::ones_then_zeros(self.s - 1, self.offset);
        w.push(true);
        w.extend_repeat(false, self.t - self.offset);
        w.extend(self.gamma.iter());
        w
    }

    /// Critical prefix length of the child, `s - 1 + offset`.
    pub fn critical_len(&self) -> usize {
        self.s - 1 + self.offset
    }

    pub fn gamma_max_ones(&self) -> usize {
        let k = self.critical_len();
        let g = self.gamma.to_bytes();
        if k >= g.len() {
            return self.gamma.density();
        }
        g.windows(k)
            .map(|win| win.iter().map(|&b| b as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn z(&self) -> usize {
        let covered = (self.s + 2 * self.offset).saturating_sub(self.t + 2);
        let covered = covered.min(self.gamma.len());
        self.gamma.iter().take(covered).filter(|&b| b).count()
    }

    pub fn child_is_prefix_normal(&self) -> bool {
        childpnf_check(self.s, self.gamma_max_ones(), self.z())
    }
}

/// State of one v-sequence step, as seen just before checking the next
/// word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSeqStep {
    /// The current word `v_i = 1^s 0^* γ`.
    pub word: BinaryWord,
    pub front_ones: usize,
    /// 0-based start of `γ` (equal to `n` when `γ` is empty).
    pub gamma_start: usize,
    /// Critical prefix length of the next word.
    pub critical_len: usize,
    pub gamma_max_ones: usize,
    pub z: usize,
    /// `F(γ, 1..=critical_len)`.
    pub gamma_f: Vec<usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSeqTrace {
    pub steps: Vec<VSeqStep>,
    pub outcome: TestOutcome,
    pub target: BinaryWord,
}

impl VSeqTrace {
    /// The words `v_0, v_1, ...` that were generated; ends with the target
    /// when every check passed.
    pub fn words(&self) -> Vec<BinaryWord> {
        let mut words: Vec<BinaryWord> = self.steps.iter().map(|s| s.word.clone()).collect();
        if self.outcome.accepted {
            words.push(self.target.clone());
        }
        words
    }
}

struct StepView<'a> {
    front_ones: usize,
    gamma_start: usize,
    critical_len: usize,
    gamma_max_ones: usize,
    z: usize,
    gamma_f: &'a [usize],
    passed: bool,
}

fn run_vseq(w: &BinaryWord, mut on_step: impl FnMut(&StepView<'_>)) -> TestOutcome {
    if is_degenerate(w) {
        return TestOutcome::accept(Stage::TrivialCase);
    }
    let n = w.len();
    let sums = w.prefix_sums();
    // 1-based positions of the 1s.
    let ones: Vec<usize> = (0..n).filter(|&i| w.get(i)).map(|i| i + 1).collect();
    let leading = w.iter().take_while(|&b| b).count();

    let mut s = ones.len();
    // 1-based start of γ; n + 1 while γ is empty.
    let mut g = n + 1;
    let first_k = ones[s - 1] - 1;
    let mut f = vec![0usize; first_k + 1];
    let mut f_start = vec![n; first_k + 1];

    while s > leading {
        let q = ones[s - 1];
        let k = q - 1;
        let gamma_max = f[k];
        let covered = (2 * q - 1).saturating_sub(g);
        let z = sums[(g - 1 + covered).min(n)] - sums[g - 1];

        #[cfg(debug_assertions)]
        debug_recount(&sums, g, k, gamma_max, z);

        let passed = childpnf_check(s, gamma_max, z);
        on_step(&StepView {
            front_ones: s,
            gamma_start: g - 1,
            critical_len: k,
            gamma_max_ones: gamma_max,
            z,
            gamma_f: &f[1..=k],
            passed,
        });
        if !passed {
            // The child agrees with `w` from position q on, and the first
            // k symbols of `w` hold exactly s - 1 ones.
            let from = if gamma_max >= s { f_start[k] } else { q };
            let start = (from - 1).min(n - k);
            let violation = Violation {
                start,
                length: k,
                ones: sums[start + k] - sums[start],
                prefix_ones: sums[k],
            };
            debug_assert!(violation.ones > violation.prefix_ones);
            debug_assert_eq!(violation.prefix_ones, s - 1);
            return TestOutcome::reject(violation, Stage::VSeq);
        }

        // Prepend w[q..g-1] to γ, keeping F only up to the next critical
        // length, which is strictly smaller than k.
        let next_k = if s - 1 > leading { ones[s - 2] - 1 } else { 0 };
        for p in (q..g).rev() {
            let base = sums[p - 1];
            for l in 1..=next_k {
                let ones_in = sums[(p - 1 + l).min(n)] - base;
                if ones_in > f[l] {
                    f[l] = ones_in;
                    f_start[l] = p;
                }
            }
        }
        g = q;
        s -= 1;
    }
    TestOutcome::accept(Stage::VSeq)
}

#[cfg(debug_assertions)]
fn debug_recount(sums: &[usize], g: usize, k: usize, gamma_max: usize, z: usize) {
    let n = sums.len() - 1;
    let gamma_len = n + 1 - g;
    let expected = if k >= gamma_len {
        sums[n] - sums[g - 1]
    } else {
        (g - 1..=n - k)
            .map(|a| sums[a + k] - sums[a])
            .max()
            .unwrap_or(0)
    };
    assert_eq!(gamma_max, expected, "incremental F(gamma, {k}) out of sync");
    assert!(z <= sums[n] - sums[g - 1]);
}

/// The v-sequence tester.
pub fn test_vseq(w: &BinaryWord) -> TestOutcome {
    run_vseq(w, |_| {})
}

/// [`test_vseq`] recording every intermediate word and check input.
pub fn trace_vseq(w: &BinaryWord) -> VSeqTrace {
    let n = w.len();
    let mut steps = Vec::new();
    let outcome = run_vseq(w, |step| {
        let mut word =
            BinaryWord::ones_then_zeros(step.front_ones, step.gamma_start - step.front_ones);
        word.extend((step.gamma_start..n).map(|i| w.get(i)));
        steps.push(VSeqStep {
            word,
            front_ones: step.front_ones,
            gamma_start: step.gamma_start,
            critical_len: step.critical_len,
            gamma_max_ones: step.gamma_max_ones,
            z: step.z,
            gamma_f: step.gamma_f.to_vec(),
            passed: step.passed,
        });
    });
    VSeqTrace {
        steps,
        outcome,
        target: w.clone(),
    }
}

/// Prefix lengths tried by [`test_doubling`]: `2, 4, 8, ...` below `n`,
/// then `n`.
pub fn doubling_lengths(n: usize) -> Vec<usize> {
    let mut lengths: Vec<usize> = std::iter::successors(Some(2usize), |&l| l.checked_mul(2))
        .take_while(|&l| l < n)
        .collect();
    lengths.push(n);
    lengths
}

/// Runs [`test_vseq`] on growing prefixes; also returns the prefix length
/// at which the decision was made.
pub fn test_doubling_detailed(w: &BinaryWord) -> (TestOutcome, usize) {
    if is_degenerate(w) {
        return (TestOutcome::accept(Stage::TrivialCase), w.len());
    }
    for len in doubling_lengths(w.len()) {
        let prefix = if len == w.len() {
            w.clone()
        } else {
            w.prefix(len)
        };
        let outcome = test_vseq(&prefix);
        if !outcome.accepted {
            // A violation in a prefix is a violation in the word.
            return (
                TestOutcome {
                    decided_by: Stage::VSeq,
                    ..outcome
                },
                len,
            );
        }
    }
    (TestOutcome::accept(Stage::VSeq), w.len())
}

pub fn test_doubling(w: &BinaryWord) -> TestOutcome {
    test_doubling_detailed(w).0
}

/// Exact tester used after the filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseTwo {
    #[default]
    VSeq,
    Naive,
}

/// Two-phase tester: run filter, block filter, then an exact phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MemberPn {
    pub phase_two: PhaseTwo,
}

impl MemberPn {
    pub fn test(&self, w: &BinaryWord) -> TestOutcome {
        if is_degenerate(w) {
            return TestOutcome::accept(Stage::TrivialCase);
        }
        if let FilterVerdict::Reject(v) = filter_run_of_ones(w) {
            return TestOutcome::reject(v, Stage::RunFilter);
        }
        if let FilterVerdict::Reject(v) = filter_blocks(&RunLengthForm::from_word(w)) {
            return TestOutcome::reject(v, Stage::BlockFilter);
        }
        match self.phase_two {
            PhaseTwo::VSeq => test_vseq(w),
            PhaseTwo::Naive => naive_outcome(w),
        }
    }
}

pub fn member_pn(w: &BinaryWord) -> TestOutcome {
    MemberPn::default().test(w)
}

fn naive_outcome(w: &BinaryWord) -> TestOutcome {
    match find_violation(w) {
        None => TestOutcome::accept(Stage::Naive),
        Some(v) => TestOutcome::reject(v, Stage::Naive),
    }
}

fn gaps_outcome(w: &BinaryWord) -> TestOutcome {
    if is_degenerate(w) {
        return TestOutcome::accept(Stage::TrivialCase);
    }
    if !w.get(0) {
        let first_one = w.iter().position(|b| b).expect("density > 0");
        return TestOutcome::reject(
            Violation {
                start: first_one,
                length: 1,
                ones: 1,
                prefix_ones: 0,
            },
            Stage::GapForm,
        );
    }
    let g = GapForm::from_word(w).expect("starts with 1");
    match g.violation() {
        None => TestOutcome::accept(Stage::GapForm),
        Some(v) => TestOutcome::reject(v, Stage::GapForm),
    }
}

fn pnf_eq_outcome(w: &BinaryWord) -> TestOutcome {
    if is_degenerate(w) {
        return TestOutcome::accept(Stage::TrivialCase);
    }
    let index = ParikhIndex::suffix_sweep(w);
    if index.pnf_one() == *w {
        return TestOutcome::accept(Stage::PnfEquality);
    }
    let sums = w.prefix_sums();
    let k = (1..=w.len())
        .find(|&k| index.max_ones(k) > sums[k])
        .expect("w differs from its prefix normal form");
    let start = (0..=w.len() - k)
        .find(|&a| sums[a + k] - sums[a] == index.max_ones(k))
        .expect("maximum is attained");
    TestOutcome::reject(
        Violation {
            start,
            length: k,
            ones: index.max_ones(k),
            prefix_ones: sums[k],
        },
        Stage::PnfEquality,
    )
}

/// Selector over every membership tester in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    VSeq,
    Doubling,
    Member,
    Gaps,
    PnfEq,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Naive,
        Method::VSeq,
        Method::Doubling,
        Method::Member,
        Method::Gaps,
        Method::PnfEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::VSeq => "vseq",
            Method::Doubling => "doubling",
            Method::Member => "member",
            Method::Gaps => "gaps",
            Method::PnfEq => "pnf-eq",
        }
    }

    pub fn test(self, w: &BinaryWord) -> TestOutcome {
        match self {
            Method::Naive => {
                if is_degenerate(w) {
                    TestOutcome::accept(Stage::TrivialCase)
                } else {
                    naive_outcome(w)
                }
            }
            Method::VSeq => test_vseq(w),
            Method::Doubling => test_doubling(w),
            Method::Member => member_pn(w),
            Method::Gaps => gaps_outcome(w),
            Method::PnfEq => pnf_eq_outcome(w),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "method",
                value: s.to_string(),
            })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which rejection filters make up phase one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterPhase {
    TrivialOnly,
    BothFilters,
}

/// Phase-one survivors over all `2^n` words of length `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterStats {
    pub n: usize,
    pub total: u128,
    pub survivors: u128,
    /// `n * survivors / 2^n`.
    pub ratio: f64,
}

impl FilterStats {
    fn new(n: usize, survivors: u128) -> Self {
        let total = 1u128 << n;
        Self {
            n,
            total,
            survivors,
            ratio: n as f64 * survivors as f64 / total as f64,
        }
    }

    /// The ratio with three decimals, as printed in tables.
    pub fn ratio_display(&self) -> String {
        format!("{:.3}", self.ratio)
    }
}

/// Fills `out` with the `1*0*` blocks of the `n` low bits of `x`, most
/// significant bit first.
fn blocks_of_bits(x: u64, n: usize, out: &mut Vec<RunBlock>) {
    out.clear();
    if n == 0 {
        return;
    }
    let mut v = x << (64 - n);
    let mut remaining = n;
    while remaining > 0 {
        let ones = (v.leading_ones() as usize).min(remaining);
        v = v.checked_shl(ones as u32).unwrap_or(0);
        remaining -= ones;
        let zeros = (v.leading_zeros() as usize).min(remaining);
        v = v.checked_shl(zeros as u32).unwrap_or(0);
        remaining -= zeros;
        out.push(RunBlock { ones, zeros });
    }
}

/// Largest `n` accepted by [`survivor_counts`].
pub const MAX_SWEEP_N: usize = 32;

/// Survivors of the run filter alone and of both filters, over all words
/// of length `n`.
pub fn survivor_counts(n: usize, max_n: usize) -> Result<(FilterStats, FilterStats)> {
    let limit = max_n.min(MAX_SWEEP_N);
    if n > limit {
        return Err(Error::BudgetExceeded {
            what: "sweep length",
            requested: n as u128,
            limit: limit as u128,
        });
    }
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(8);
    let (trivial, both) = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut blocks = Vec::with_capacity(n + 1);
            let (mut trivial, mut both) = (0u64, 0u64);
            for x in c * chunk..((c + 1) * chunk).min(total) {
                blocks_of_bits(x, n, &mut blocks);
                if run_filter_hit(&blocks).is_none() {
                    trivial += 1;
                    if block_filter_hit(&blocks).is_none() {
                        both += 1;
                    }
                }
            }
            (trivial, both)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok((
        FilterStats::new(n, trivial as u128),
        FilterStats::new(n, both as u128),
    ))
}

/// Phase-one survivor ratio `n * M / 2^n`.
pub fn survivor_ratio(n: usize, phase: FilterPhase, max_n: usize) -> Result<FilterStats> {
    let (trivial, both) = survivor_counts(n, max_n)?;
    Ok(match phase {
        FilterPhase::TrivialOnly => trivial,
        FilterPhase::BothFilters => both,
    })
}

#[doc(hidden)]
pub fn run_blocks_of_word(w: &BinaryWord) -> Vec<RunBlock> {
    let mut out = Vec::new();
    push_run_blocks(w.iter(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_prefix_normal;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn run_filter_examples() {
        let r = filter_run_of_ones(&w("101111"));
        match r {
            FilterVerdict::Reject(v) => {
                assert_eq!((v.start, v.length, v.ones), (2, 4, 4));
                assert!(v.holds_in(&w("101111")));
            }
            FilterVerdict::Pass => panic!("expected rejection"),
        }
        assert!(!is_prefix_normal(&w("101111")));
        assert!(filter_run_of_ones(&w("110100")).passed());
        assert!(filter_run_of_ones(&w("000000")).passed());
        assert!(filter_run_of_ones(&w("")).passed());
    }

    #[test]
    fn block_filter_examples() {
        let x = w("11100101011100110");
        match filter_blocks(&RunLengthForm::from_word(&x)) {
            FilterVerdict::Reject(v) => {
                // Blocks 3 and 4: 1+1+3 <= 5 and 1+3 > 3, substring 10111.
                assert_eq!((v.start, v.length, v.ones, v.prefix_ones), (7, 5, 4, 3));
                assert!(v.holds_in(&x));
            }
            FilterVerdict::Pass => panic!("expected rejection"),
        }
        assert!(filter_blocks(&RunLengthForm::from_word(&BinaryWord::ones(8))).passed());
        assert!(filter_blocks(&RunLengthForm::from_word(&w("110100"))).passed());
    }

    #[test]
    fn child_check_examples() {
        // v5 -> v6 of 110101101100100.
        let step = ChildStep::new(4, 2, 2, w("101100100")).unwrap();
        assert_eq!(step.parent(), w("111100101100100"));
        assert_eq!(step.child(), w("111001101100100"));
        assert_eq!(step.z(), 3);
        assert!(!step.child_is_prefix_normal());
        assert!(!is_prefix_normal(&step.child()));

        // Empty gamma with s - 1 >= 1.
        for (s, t) in [(2, 1), (3, 4), (5, 5)] {
            for i in 1..=t {
                let step = ChildStep::new(s, t, i, BinaryWord::new()).unwrap();
                assert!(step.child_is_prefix_normal());
                assert!(is_prefix_normal(&step.child()));
            }
        }

        // 111000101 -> 110100101 and 111100001 -> 111000101.
        let step = ChildStep::new(3, 3, 1, w("101")).unwrap();
        assert_eq!(step.child(), w("110100101"));
        assert!(step.child_is_prefix_normal());
        let step = ChildStep::new(4, 4, 3, w("1")).unwrap();
        assert_eq!(step.child(), w("111000101"));
        assert!(step.child_is_prefix_normal());

        assert!(ChildStep::new(0, 1, 1, BinaryWord::new()).is_err());
        assert!(ChildStep::new(2, 1, 2, BinaryWord::new()).is_err());
        assert!(ChildStep::new(2, 1, 1, w("01")).is_err());
    }

    #[test]
    fn vseq_trace_accepting() {
        let trace = trace_vseq(&w("110100101"));
        assert!(trace.outcome.accepted);
        let words: Vec<String> = trace.words().iter().map(|x| x.to_string()).collect();
        assert_eq!(words, ["111110000", "111100001", "111000101", "110100101"]);
    }

    #[test]
    fn vseq_trace_rejecting() {
        let x = w("110101101100100");
        let trace = trace_vseq(&x);
        assert!(!trace.outcome.accepted);
        let rows: Vec<(String, usize, usize, usize)> = trace
            .steps
            .iter()
            .map(|s| (s.word.to_string(), s.critical_len, s.gamma_max_ones, s.z))
            .collect();
        let expected = [
            ("111111110000000", 12, 0, 0),
            ("111111100000100", 9, 1, 1),
            ("111111000100100", 8, 2, 2),
            ("111110001100100", 6, 3, 2),
            ("111100101100100", 5, 3, 3),
        ];
        assert_eq!(rows.len(), expected.len());
        for (row, exp) in rows.iter().zip(expected) {
            assert_eq!((row.0.as_str(), row.1, row.2, row.3), exp);
        }
        let f_columns: Vec<String> = trace
            .steps
            .iter()
            .map(|s| s.gamma_f.iter().map(|c| c.to_string()).collect())
            .collect();
        assert_eq!(
            f_columns,
            ["000000000000", "111111111", "11122222", "122233", "12233"]
        );
        let last = trace.steps.last().unwrap();
        assert_eq!((last.z + 1, last.front_ones - 1), (4, 3));
        assert!(trace.outcome.witness.unwrap().holds_in(&x));
    }

    #[test]
    fn vseq_sorted_word_needs_no_steps() {
        let trace = trace_vseq(&BinaryWord::ones_then_zeros(4, 3));
        assert!(trace.outcome.accepted);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn doubling_examples() {
        for n in 2..12 {
            let mut x = w("10");
            x.extend_repeat(true, n);
            let (outcome, at) = test_doubling_detailed(&x);
            assert!(!outcome.accepted);
            assert_eq!(at, 4);
        }
        assert!(test_doubling(&BinaryWord::ones(13)).accepted);
        let (outcome, at) = test_doubling_detailed(&w("111010100110110011"));
        assert!(!outcome.accepted);
        assert_eq!(at, 18);
        assert_eq!(doubling_lengths(18), vec![2, 4, 8, 16, 18]);
        assert_eq!(doubling_lengths(16), vec![2, 4, 8, 16]);
        assert_eq!(doubling_lengths(1), vec![1]);
    }

    #[test]
    fn member_examples() {
        let r = member_pn(&w("101111"));
        assert_eq!((r.accepted, r.decided_by), (false, Stage::RunFilter));
        let r = member_pn(&w("11100101011100110"));
        assert_eq!((r.accepted, r.decided_by), (false, Stage::BlockFilter));
        let r = member_pn(&w("110011"));
        assert_eq!((r.accepted, r.decided_by), (true, Stage::VSeq));
        let naive = MemberPn {
            phase_two: PhaseTwo::Naive,
        };
        assert_eq!(naive.test(&w("110011")).decided_by, Stage::Naive);
        assert_eq!(member_pn(&w("")).decided_by, Stage::TrivialCase);
        assert_eq!(member_pn(&w("0000")).decided_by, Stage::TrivialCase);
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn bit_blocks_match_word_blocks() {
        let mut buf = Vec::new();
        for n in 0..=10 {
            for x in 0..(1u64 << n) {
                blocks_of_bits(x, n, &mut buf);
                assert_eq!(buf, run_blocks_of_word(&BinaryWord::from_u64(x, n)));
            }
        }
    }

    #[test]
    fn survivor_small() {
        let s = survivor_ratio(1, FilterPhase::TrivialOnly, 26).unwrap();
        assert_eq!((s.survivors, s.total), (2, 2));
        assert_eq!(s.ratio, 1.0);
        let (a, b) = survivor_counts(10, 26).unwrap();
        assert_eq!(
            (a.ratio_display().as_str(), b.ratio_display().as_str()),
            ("2.500", "2.168")
        );
        assert!(survivor_ratio(27, FilterPhase::BothFilters, 26).is_err());
    }
}
