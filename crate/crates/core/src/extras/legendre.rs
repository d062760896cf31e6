use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const LEGENDRE_MAX_DEGREE: u32 = 30;

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

fn check_degree(n: u32) -> Result<()> {
    if n > LEGENDRE_MAX_DEGREE {
        return Err(Error::OutOfRange {
            what: "legendre degree",
            value: i64::from(n),
            range: "0..=30",
        });
    }
    Ok(())
}

/// `P_n = (sum_j N_j x^j) / D` with integer `N_j`, lowest power first.
fn integer_form(n: u32) -> (Vec<BigInt>, BigInt) {
    // (x^2 - 1)^n = sum_k C(n, k) (-1)^(n - k) x^(2k)
    let binom = binomial_row(n);
    let mut expanded = vec![BigInt::zero(); 2 * n as usize + 1];
    for (k, c) in binom.iter().enumerate() {
        let sign = if (n as usize - k).is_multiple_of(2) {
            1
        } else {
            -1
        };
        expanded[2 * k] = c * sign;
    }
    // n-th derivative: x^m -> m! / (m - n)! x^(m - n)
    let falling = |m: usize| -> BigInt { ((m - n as usize + 1)..=m).map(BigInt::from).product() };
    let numerators = (n as usize..=2 * n as usize)
        .map(|m| &expanded[m] * falling(m))
        .collect();
    let denom = BigInt::from(2).pow(n) * (1..=n as usize).map(BigInt::from).product::<BigInt>();
    (numerators, denom)
}

/// Exact coefficients of `P_n`, lowest power first, from
/// `P_n(x) = 1 / (2^n n!) d^n/dx^n (x^2 - 1)^n`.
pub fn legendre_coefficients(n: u32) -> Result<Vec<BigRational>> {
    check_degree(n)?;
    let (numerators, denom) = integer_form(n);
    Ok(numerators
        .into_iter()
        .map(|c| BigRational::new(c, denom.clone()))
        .collect())
}

/// `P_n(x)`. The polynomial is evaluated exactly at the binary value of `x`
/// and rounded once at the end.
pub fn legendre(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "legendre argument",
        });
    }
    check_degree(n)?;
    let (numerators, denom) = integer_form(n);
    // x = m / 2^k exactly
    let (mantissa, exponent, sign) = x.integer_decode();
    let mut m = BigInt::from(mantissa) * i64::from(sign);
    let mut k = 0u32;
    if exponent >= 0 {
        m <<= exponent as usize;
    } else {
        k = exponent.unsigned_abs() as u32;
    }
    // sum_j N_j m^j 2^(k (d - j)) by Horner, over D 2^(k d)
    let d = numerators.len() - 1;
    let mut acc = BigInt::zero();
    for (j, c) in numerators.iter().enumerate().rev() {
        acc = acc * &m + (c << (k as usize * (d - j)));
    }
    let value = BigRational::new(acc, denom << (k as usize * d));
    Ok(value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    }))
}
