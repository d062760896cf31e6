use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const GENERATING_POLYNOMIAL_MAX_N: u32 = 12;

/// Largest `n` accepted by [`inversion_histogram`].
pub const BRUTE_FORCE_MAX_N: u32 = 9;

/// Polynomial in `q` with integer coefficients, lowest power first. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coefficients };
        while p.coefficients.last().is_some_and(Zero::is_zero) {
            p.coefficients.pop();
        }
        p
    }

    pub fn from_u64(coefficients: &[u64]) -> Self {
        IntPolynomial::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.coefficients.is_empty() || rhs.coefficients.is_empty() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coefficients.iter().join(", "))
    }
}

/// `1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); n as usize])
}

/// Number of pairs `i < j` with `sigma(i) > sigma(j)`, for a permutation of
/// `1..=n` written in one-line notation.
pub fn inversion_count(sigma: &[usize]) -> Result<u64> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &s in sigma {
        if s == 0 || s > n {
            return Err(Error::InvalidPermutation {
                reason: format!("entry {s} is outside 1..={n}"),
            });
        }
        if std::mem::replace(&mut seen[s - 1], true) {
            return Err(Error::InvalidPermutation {
                reason: format!("entry {s} repeats"),
            });
        }
    }
    Ok(count_unchecked(sigma))
}

fn count_unchecked(sigma: &[usize]) -> u64 {
    sigma
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .count() as u64
}

/// `R_n(q) = sum_k N_n(k) q^k`, built inductively as
/// `R_n = R_(n-1) (1 + q + ... + q^(n-1))`.
pub fn inversion_generating_polynomial(n: u32) -> Result<IntPolynomial> {
    if n == 0 || n > GENERATING_POLYNOMIAL_MAX_N {
        return Err(Error::OutOfRange {
            what: "permutation size",
            value: i64::from(n),
            range: "1..=12",
        });
    }
    Ok((2..=n).fold(IntPolynomial::one(), |acc, k| &acc * &q_integer(k)))
}

/// Inversion counts tallied over all `n!` permutations of `1..=n`.
pub fn inversion_histogram(n: u32) -> Result<IntPolynomial> {
    if n == 0 || n > BRUTE_FORCE_MAX_N {
        return Err(Error::OutOfRange {
            what: "brute-force permutation size",
            value: i64::from(n),
            range: "1..=9",
        });
    }
    let n = n as usize;
    let mut counts = vec![0u64; n * (n - 1) / 2 + 1];
    for sigma in (1..=n).permutations(n) {
        counts[count_unchecked(&sigma) as usize] += 1;
    }
    Ok(IntPolynomial::from_u64(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_examples() {
        assert_eq!(inversion_count(&[1, 2, 3, 4]).unwrap(), 0);
        assert_eq!(inversion_count(&[5, 4, 3, 2, 1]).unwrap(), 10);
        assert_eq!(inversion_count(&[2, 1, 4, 3]).unwrap(), 2);
        assert_eq!(inversion_count(&[]).unwrap(), 0);
        assert!(inversion_count(&[1, 1]).is_err());
        assert!(inversion_count(&[0, 1]).is_err());
        assert!(inversion_count(&[1, 3]).is_err());
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(
            inversion_generating_polynomial(1).unwrap(),
            IntPolynomial::one()
        );
        assert_eq!(
            inversion_generating_polynomial(3).unwrap(),
            IntPolynomial::from_u64(&[1, 2, 2, 1])
        );
        let r4 = inversion_generating_polynomial(4).unwrap();
        assert_eq!(r4.coefficient_sum(), BigInt::from(24));
        assert_eq!(r4.degree(), Some(6));
        assert!(r4.is_palindromic());
        assert!(inversion_generating_polynomial(0).is_err());
        assert!(inversion_generating_polynomial(13).is_err());
    }

    #[test]
    fn histogram_matches_for_small_n() {
        for n in 1..=6 {
            assert_eq!(
                inversion_histogram(n).unwrap(),
                inversion_generating_polynomial(n).unwrap()
            );
        }
    }

    #[test]
    fn trimming_and_display() {
        let p = IntPolynomial::from_u64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.to_string(), "[1, 2]");
        assert_eq!(IntPolynomial::from_u64(&[0]).degree(), None);
    }
}
