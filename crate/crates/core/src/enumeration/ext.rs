//! Extension counts `ext(w, m)`: how many words `w'` of length `m` make
//! `ww'` prefix normal.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::one_extends;
use crate::error::{Error, Result};
use crate::word::{is_prefix_normal, BinaryWord};
use crate::{Budget, Count};

fn check_budget(len: usize, budget: &Budget) -> Result<()> {
    if len > budget.max_ext_len {
        return Err(Error::BudgetExceeded {
            what: "extended word length",
            requested: len as u128,
            limit: budget.max_ext_len as u128,
        });
    }
    Ok(())
}

fn sums_u32(w: &BinaryWord) -> Vec<u32> {
    w.prefix_sums().into_iter().map(|c| c as u32).collect()
}

fn count_rec(sums: &mut Vec<u32>, remaining: usize, density: Option<usize>) -> Count {
    let total = sums[sums.len() - 1] as usize;
    if let Some(d) = density {
        if total > d || total + remaining < d {
            return 0;
        }
    }
    if remaining == 0 {
        return 1;
    }
    let extends = one_extends(sums);
    sums.push(total as u32);
    let mut count = count_rec(sums, remaining - 1, density);
    sums.pop();
    if extends {
        sums.push(total as u32 + 1);
        count += count_rec(sums, remaining - 1, density);
        sums.pop();
    }
    count
}

fn ext_impl(w: &BinaryWord, m: usize, density: Option<usize>, budget: &Budget) -> Result<Count> {
    check_budget(w.len() + m, budget)?;
    if !is_prefix_normal(w) {
        return Ok(0);
    }
    Ok(count_rec(&mut sums_u32(w), m, density))
}

/// `ext(w, m)`.
pub fn ext_count(w: &BinaryWord, m: usize, budget: &Budget) -> Result<Count> {
    ext_impl(w, m, None, budget)
}

/// `ext(w, m, d)`: extensions whose result has density `d`.
pub fn ext_count_density(w: &BinaryWord, m: usize, d: usize, budget: &Budget) -> Result<Count> {
    ext_impl(w, m, Some(d), budget)
}

/// Word families with a closed form for `ext(w, |w|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtFamily {
    /// `0^n`
    Zeros,
    /// `1^n`
    Ones,
    /// `1^(n-1) 0`
    OnesThenZero,
    /// `1^(n-2) 0 1`
    OnesZeroOne,
    /// `1^(n-2) 0 0`
    OnesZeroZero,
    /// `(10)^(n/2)`, `n` even
    Alternating,
    /// `(10)^((n-1)/2) 1`, `n` odd
    AlternatingOne,
    /// `1 0^(n-2) 1`
    OneZerosOne,
    /// `1 0^(n-1)`
    OneZeros,
}

impl ExtFamily {
    pub const ALL: [ExtFamily; 9] = [
        ExtFamily::Zeros,
        ExtFamily::Ones,
        ExtFamily::OnesThenZero,
        ExtFamily::OnesZeroOne,
        ExtFamily::OnesZeroZero,
        ExtFamily::Alternating,
        ExtFamily::AlternatingOne,
        ExtFamily::OneZerosOne,
        ExtFamily::OneZeros,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtFamily::Zeros => "zeros",
            ExtFamily::Ones => "ones",
            ExtFamily::OnesThenZero => "ones-zero",
            ExtFamily::OnesZeroOne => "ones-zero-one",
            ExtFamily::OnesZeroZero => "ones-zero-zero",
            ExtFamily::Alternating => "alternating",
            ExtFamily::AlternatingOne => "alternating-one",
            ExtFamily::OneZerosOne => "one-zeros-one",
            ExtFamily::OneZeros => "one-zeros",
        }
    }

    /// Whether the closed form applies at length `n`.
    ///
    /// Besides the parity conditions, three families collapse into another
    /// shape at small `n` (`01`, `1`, `11`) where their formula fails, so
    /// they start at `n = 3`.
    pub fn is_defined(self, n: usize) -> bool {
        match self {
            ExtFamily::Zeros | ExtFamily::Ones => true,
            ExtFamily::OnesThenZero | ExtFamily::OneZeros => n >= 1,
            ExtFamily::OnesZeroZero => n >= 2,
            ExtFamily::OnesZeroOne | ExtFamily::OneZerosOne => n >= 3,
            ExtFamily::Alternating => n.is_multiple_of(2),
            ExtFamily::AlternatingOne => n % 2 == 1 && n >= 3,
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if self.is_defined(n) {
            Ok(())
        } else {
            Err(Error::FamilyLength {
                family: self.name(),
                n,
            })
        }
    }

    /// The member of length `n`.
    pub fn word(self, n: usize) -> Result<BinaryWord> {
        self.check(n)?;
        let mut w = BinaryWord::with_capacity(n);
        match self {
            ExtFamily::Zeros => w.extend_repeat(false, n),
            ExtFamily::Ones => w.extend_repeat(true, n),
            ExtFamily::OnesThenZero => {
                w.extend_repeat(true, n - 1);
                w.push(false);
            }
            ExtFamily::OnesZeroOne => {
                w.extend_repeat(true, n - 2);
                w.extend([false, true]);
            }
            ExtFamily::OnesZeroZero => {
                w.extend_repeat(true, n - 2);
                w.extend([false, false]);
            }
            ExtFamily::Alternating | ExtFamily::AlternatingOne => {
                for _ in 0..n / 2 {
                    w.extend([true, false]);
                }
                if n % 2 == 1 {
                    w.push(true);
                }
            }
            ExtFamily::OneZerosOne => {
                w.push(true);
                w.extend_repeat(false, n - 2);
                w.push(true);
            }
            ExtFamily::OneZeros => {
                w.push(true);
                w.extend_repeat(false, n - 1);
            }
        }
        Ok(w)
    }

    /// Closed form of `ext(word(n), n)`.
    pub fn closed_form(self, n: usize) -> Result<Count> {
        self.check(n)?;
        let pow = |e: usize| -> Result<Count> {
            1u128
                .checked_shl(e as u32)
                .filter(|_| e < 128)
                .ok_or(Error::InvalidParameters(format!(
                    "2^{e} does not fit in 128 bits"
                )))
        };
        Ok(match self {
            ExtFamily::Zeros => 1,
            ExtFamily::Ones => pow(n)?,
            ExtFamily::OnesThenZero => pow(n)? - 1,
            ExtFamily::OnesZeroOne => pow(n)? - 5,
            ExtFamily::OnesZeroZero => pow(n)? - (n as Count + 1),
            ExtFamily::Alternating => fibonacci(n + 2),
            ExtFamily::AlternatingOne => fibonacci(n + 1),
            ExtFamily::OneZerosOne => 3,
            ExtFamily::OneZeros => n as Count + 1,
        })
    }
}

impl FromStr for ExtFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExtFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "family",
                value: s.to_string(),
            })
    }
}

impl fmt::Display for ExtFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn closed_form_ext(family: ExtFamily, n: usize) -> Result<Count> {
    family.closed_form(n)
}

/// `F(1) = F(2) = 1`.
pub fn fibonacci(n: usize) -> Count {
    let (mut a, mut b): (Count, Count) = (0, 1);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Inserts a 0 before every 1 except the first symbol.
pub fn insert_zero_before_ones(w: &BinaryWord) -> BinaryWord {
    let mut out = BinaryWord::with_capacity(2 * w.len());
    for (i, bit) in w.iter().enumerate() {
        if bit && i > 0 {
            out.push(false);
        }
        out.push(bit);
    }
    out
}

/// Both sides of `ext(10, n+d-3, d) = pnw(n, d)`, and whether the
/// zero-insertion map is a bijection between the two sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ext10Check {
    pub pnw: Count,
    pub ext: Count,
    pub bijection: bool,
}

impl Ext10Check {
    pub fn holds(&self) -> bool {
        self.pnw == self.ext && self.bijection
    }
}

/// Computes `pnw(n, d)` by enumeration and `ext(10, n+d-3, d)` by
/// extension counting, then maps every counted word through
/// [`insert_zero_before_ones`] and checks the images with the reference
/// test.
///
/// `(n, d) = (1, 1)` has no extension length and is rejected.
pub fn verify_ext10_bijection(n: usize, d: usize, budget: &Budget) -> Result<Ext10Check> {
    if d == 0 || d > n || n + d < 3 {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d <= n and n + d >= 3 (n={n}, d={d})"
        )));
    }
    check_budget(n + d - 1, budget)?;
    let m = n + d - 3;
    let prefix: BinaryWord = "10".parse().expect("valid");
    let ext = ext_count_density(&prefix, m, d, budget)?;

    let mut pnw: Count = 0;
    let mut images = HashSet::new();
    let mut images_ok = true;
    super::for_each_prefix_normal(n, |w| {
        if w.density() != d {
            return;
        }
        pnw += 1;
        let image = insert_zero_before_ones(w);
        images_ok &= image.len() == n + d - 1
            && image.density() == d
            && image.prefix(2) == prefix
            && is_prefix_normal(&image);
        images.insert(image);
    });
    let bijection = images_ok && images.len() as Count == pnw && pnw == ext;
    Ok(Ext10Check {
        pnw,
        ext,
        bijection,
    })
}

/// Outcome of searching for a word in exactly one of two extension
/// languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    /// `v w'` and `w w'` disagree on prefix normality.
    Found(BinaryWord),
    /// No separating extension up to the search depth.
    NoneFound { max_m: usize },
}

/// Default depth for [`ext_lang_distinct`].
pub const DEFAULT_SEPARATION_DEPTH: usize = 20;

/// Shortest (then lexicographically smallest) `w'` with `|w'| <= max_m`
/// such that exactly one of `v w'`, `w w'` is prefix normal.
pub fn ext_lang_distinct(v: &BinaryWord, w: &BinaryWord, max_m: usize) -> Result<Separation> {
    for (name, x) in [("v", v), ("w", w)] {
        if x.is_empty() || !x.get(0) || !is_prefix_normal(x) {
            return Err(Error::InvalidParameters(format!(
                "{name} = {x} must be prefix normal and start with 1"
            )));
        }
    }
    if v == w {
        return Err(Error::InvalidParameters("v and w must differ".into()));
    }
    let mut suffix = BinaryWord::new();
    for m in 0..=max_m {
        let mut sv = sums_u32(v);
        let mut sw = sums_u32(w);
        if separate_rec(m, &mut suffix, (&mut sv, true), (&mut sw, true)) {
            return Ok(Separation::Found(suffix));
        }
    }
    Ok(Separation::NoneFound { max_m })
}

/// Depth-limited search; `suffix` holds the separator when it returns true.
fn separate_rec(
    remaining: usize,
    suffix: &mut BinaryWord,
    v: (&mut Vec<u32>, bool),
    w: (&mut Vec<u32>, bool),
) -> bool {
    let (sv, in_v) = v;
    let (sw, in_w) = w;
    if remaining == 0 {
        return in_v != in_w;
    }
    if in_v != in_w {
        return false;
    }
    let (tv, tw) = (sv[sv.len() - 1], sw[sw.len() - 1]);
    let (v_one, w_one) = (one_extends(sv), one_extends(sw));
    for (bit, next_v, next_w) in [(false, true, true), (true, v_one, w_one)] {
        suffix.push(bit);
        sv.push(tv + bit as u32);
        sw.push(tw + bit as u32);
        let found = separate_rec(remaining - 1, suffix, (sv, next_v), (sw, next_w));
        sv.pop();
        sw.pop();
        if found {
            return true;
        }
        suffix.pop();
    }
    false
}
