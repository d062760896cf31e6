//! Two further formulas from Rodrigues' work: Legendre polynomials through
//! the derivative formula, and the generating polynomial of permutation
//! inversions.

mod legendre;
mod permutations;

pub use legendre::{legendre, legendre_coefficients, LEGENDRE_MAX_DEGREE};
pub use permutations::{
    inversion_count, inversion_generating_polynomial, inversion_histogram, q_integer,
    IntPolynomial, BRUTE_FORCE_MAX_N, GENERATING_POLYNOMIAL_MAX_N,
};
