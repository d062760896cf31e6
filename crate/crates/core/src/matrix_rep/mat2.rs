use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::complex::Complex;

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2C {
    pub m: [[Complex; 2]; 2],
}

impl Mat2C {
    pub const IDENTITY: Mat2C =
        Mat2C::new(Complex::ONE, Complex::ZERO, Complex::ZERO, Complex::ONE);
    pub const ZERO: Mat2C = Mat2C::new(Complex::ZERO, Complex::ZERO, Complex::ZERO, Complex::ZERO);

    pub const fn new(m11: Complex, m12: Complex, m21: Complex, m22: Complex) -> Self {
        Mat2C {
            m: [[m11, m12], [m21, m22]],
        }
    }

    /// Builds a matrix from `(re, im)` pairs, row-major.
    pub const fn from_pairs(e: [(f64, f64); 4]) -> Self {
        Mat2C::new(
            Complex::new(e[0].0, e[0].1),
            Complex::new(e[1].0, e[1].1),
            Complex::new(e[2].0, e[2].1),
            Complex::new(e[3].0, e[3].1),
        )
    }

    /// `s E2` for a complex scalar `s`.
    pub const fn scalar(s: Complex) -> Self {
        Mat2C::new(s, Complex::ZERO, Complex::ZERO, s)
    }

    pub fn det(&self) -> Complex {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex {
        self.m[0][0] + self.m[1][1]
    }

    pub fn adjoint(&self) -> Mat2C {
        Mat2C::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn scale(&self, s: Complex) -> Mat2C {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Mat2C {
        self.map(|z| z.scale(s))
    }

    fn map(&self, f: impl Fn(Complex) -> Complex) -> Mat2C {
        Mat2C::new(
            f(self.m[0][0]),
            f(self.m[0][1]),
            f(self.m[1][0]),
            f(self.m[1][1]),
        )
    }

    fn zip(&self, o: &Mat2C, f: impl Fn(Complex, Complex) -> Complex) -> Mat2C {
        Mat2C::new(
            f(self.m[0][0], o.m[0][0]),
            f(self.m[0][1], o.m[0][1]),
            f(self.m[1][0], o.m[1][0]),
            f(self.m[1][1], o.m[1][1]),
        )
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2C) -> f64 {
        let d = *self - *other;
        d.m.iter()
            .flatten()
            .fold(0.0_f64, |acc, z| acc.max(z.abs()))
    }

    /// Largest entry modulus of `X - X^*` and `|tr X|`.
    pub fn hermitian_traceless_deviation(&self) -> f64 {
        let herm = self.max_abs_diff(&self.adjoint());
        herm.max(self.trace().abs())
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.is_finite())
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, o: Mat2C) -> Mat2C {
        self.zip(&o, |a, b| a + b)
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, o: Mat2C) -> Mat2C {
        self.zip(&o, |a, b| a - b)
    }
}

impl Neg for Mat2C {
    type Output = Mat2C;
    fn neg(self) -> Mat2C {
        self.map(|z| -z)
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, o: Mat2C) -> Mat2C {
        let a = &self.m;
        let b = &o.m;
        Mat2C::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl fmt::Display for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}, {}), ({}, {}))",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}
