//! Numeric values of the asymptotic upper and lower bounds on `pnw(n)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValues {
    pub n: usize,
    /// Largest `k` with `2^k k^2 ln 2 <= n`.
    pub upper_k: usize,
    /// `(1 - 2^-k)^ceil(n/k) + 2^-k`, an upper bound on `pnw(n) / 2^n`.
    pub upper_ratio: f64,
    /// `floor(sqrt(n ln n))`.
    pub lower_k: usize,
    /// `log2` of `binom(2k, k)^((n - 4k) / 2k)`.
    pub lower_log2: f64,
}

impl BoundValues {
    pub fn lower_count(&self) -> f64 {
        self.lower_log2.exp2()
    }
}

pub fn upper_bound_k(n: usize) -> usize {
    let fits = |k: usize| (1u128 << k) as f64 * (k * k) as f64 * std::f64::consts::LN_2 <= n as f64;
    let mut k = 1;
    while k < 100 && fits(k + 1) {
        k += 1;
    }
    k
}

fn ln_central_binomial(k: usize) -> f64 {
    (1..=k).map(|i| ((k + i) as f64 / i as f64).ln()).sum()
}

pub fn bound_values(n: usize) -> Result<BoundValues> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "bounds need n >= 2, got {n}"
        )));
    }
    let upper_k = upper_bound_k(n);
    let blocks = n.div_ceil(upper_k);
    let tail = (-(upper_k as f64)).exp2();
    let upper_ratio = (1.0 - tail).powi(blocks as i32) + tail;

    let nf = n as f64;
    let lower_k = ((nf * nf.ln()).sqrt().floor() as usize).max(1);
    let exponent = (nf - 4.0 * lower_k as f64) / (2.0 * lower_k as f64);
    let lower_log2 = exponent * ln_central_binomial(lower_k) / std::f64::consts::LN_2;
    Ok(BoundValues {
        n,
        upper_k,
        upper_ratio,
        lower_k,
        lower_log2,
    })
}

/// Exact check of `count / 2^n <= (1 - 2^-k)^c + 2^-k` with the upper-bound
/// choice of `k` and `c = ceil(n / k)`.
pub fn upper_bound_holds(n: usize, count: Count) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "bounds need n >= 2, got {n}"
        )));
    }
    let k = upper_bound_k(n);
    let c = n.div_ceil(k);
    let one = BigUint::one();
    let base = (&one << k) - &one;
    // Multiply both sides by 2^(n + kc).
    let lhs = BigUint::from(count) << (k * c);
    let rhs = (base.pow(c as u32) + (&one << (k * (c - 1)))) << n;
    Ok(lhs <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_choice() {
        assert_eq!(upper_bound_k(2), 1);
        assert_eq!(upper_bound_k(11), 1);
        // 2^2 * 4 * ln 2 = 11.09
        assert_eq!(upper_bound_k(12), 2);
        assert_eq!(upper_bound_k(50), 3);
        // 2^3 * 9 * ln 2 = 49.9
        assert_eq!(upper_bound_k(49), 2);
        assert_eq!(upper_bound_k(1000), 5);
    }

    #[test]
    fn values() {
        let b = bound_values(2).unwrap();
        assert_eq!(b.upper_ratio, 0.75);
        // Equality at n = 2 and 3: pnw = 3 and 5.
        assert!(upper_bound_holds(2, 3).unwrap());
        assert!(!upper_bound_holds(2, 4).unwrap());
        assert!(upper_bound_holds(3, 5).unwrap());
        assert!(!upper_bound_holds(3, 6).unwrap());
        assert!(bound_values(1).is_err());
        let big = bound_values(10_000).unwrap();
        assert!(big.lower_log2 > 0.0 && big.upper_ratio < 0.1);
    }
}
