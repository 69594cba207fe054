//! Rational generating functions `f_d(x) = sum_n pnw(n, d) x^n` for
//! densities `d <= 6`, expanded with exact integer arithmetic.

use crate::error::{Error, Result};
use crate::Count;

/// Numerator coefficients and the exponents `a` of the `(1 - x^a)` factors
/// of the denominator.
fn closed_form(d: usize) -> Result<(&'static [Count], &'static [usize])> {
    Ok(match d {
        0 => (&[1], &[1]),
        1 => (&[0, 1], &[1]),
        2 => (&[0, 0, 1], &[1, 1]),
        3 => (&[0, 0, 0, 1], &[2, 1, 1]),
        4 => (&[0, 0, 0, 0, 1], &[3, 1, 1, 1]),
        5 => (&[0, 0, 0, 0, 0, 1, 1, 1], &[4, 2, 2, 1, 1]),
        6 => (&[0, 0, 0, 0, 0, 0, 1, 1, 1, 1], &[5, 3, 2, 1, 1, 1]),
        _ => return Err(Error::UnsupportedDensity(d)),
    })
}

/// Coefficients of `x^0..=x^max_n` in `f_d`.
pub fn gf_coefficients(d: usize, max_n: usize) -> Result<Vec<Count>> {
    let (numerator, factors) = closed_form(d)?;
    let mut c = vec![0; max_n + 1];
    for (slot, &a) in c.iter_mut().zip(numerator) {
        *slot = a;
    }
    // Dividing by (1 - x^a) is a running sum with stride a.
    for &a in factors {
        for i in a..=max_n {
            c[i] += c[i - a];
        }
    }
    Ok(c)
}

pub fn gf_coefficient(d: usize, n: usize) -> Result<Count> {
    Ok(gf_coefficients(d, n)?[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_densities() {
        assert!(gf_coefficients(0, 20).unwrap().iter().all(|&c| c == 1));
        for n in 2..30 {
            assert_eq!(gf_coefficient(2, n).unwrap(), n as Count - 1);
        }
        assert_eq!(gf_coefficient(3, 5).unwrap(), 4);
        assert_eq!(gf_coefficient(1, 0).unwrap(), 0);
        assert_eq!(gf_coefficient(1, 7).unwrap(), 1);
        assert_eq!(gf_coefficient(7, 10), Err(Error::UnsupportedDensity(7)));
    }
}
