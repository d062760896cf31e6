use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::quaternion::Vector3;

/// Default tolerance for accepting a matrix as an element of SO(3).
pub const SO3_TOLERANCE: f64 = 1e-8;

/// A real 3x3 matrix acting on column vectors from the left.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3R {
    /// `m[row][col]`
    pub m: [[f64; 3]; 3],
}

impl Mat3R {
    pub const IDENTITY: Mat3R = Mat3R {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub const fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Mat3R { m }
    }

    pub fn from_cols(cols: [Vector3; 3]) -> Self {
        let mut m = [[0.0; 3]; 3];
        for (j, c) in cols.iter().enumerate() {
            let c = c.to_array();
            for i in 0..3 {
                m[i][j] = c[i];
            }
        }
        Mat3R { m }
    }

    pub fn from_row_major(v: [f64; 9]) -> Self {
        Mat3R {
            m: [[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]],
        }
    }

    pub fn to_row_major(&self) -> [f64; 9] {
        let m = &self.m;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn col(&self, j: usize) -> Vector3 {
        Vector3::new(self.m[0][j], self.m[1][j], self.m[2][j])
    }

    pub fn transpose(&self) -> Mat3R {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = *v;
            }
        }
        Mat3R { m: t }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn mul_vec(&self, v: Vector3) -> Vector3 {
        let r = |i: usize| self.m[i][0] * v.x + self.m[i][1] * v.y + self.m[i][2] * v.z;
        Vector3::new(r(0), r(1), r(2))
    }

    pub fn max_abs_diff(&self, other: &Mat3R) -> f64 {
        self.to_row_major()
            .iter()
            .zip(other.to_row_major().iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// `max |U^T U - E3|` entrywise.
    pub fn orthogonality_residual(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Mat3R::IDENTITY)
    }

    pub fn is_finite(&self) -> bool {
        self.to_row_major().iter().all(|v| v.is_finite())
    }

    /// Rejects anything that is not in SO(3) to within `tol`.
    pub fn check_rotation(&self, tol: f64) -> Result<()> {
        if !self.is_finite() {
            return Err(Error::NonFinite { what: "matrix" });
        }
        let orth = self.orthogonality_residual();
        if orth > tol {
            return Err(Error::NotRotation {
                reason: format!("U^T U deviates from E3 by {orth:e}"),
            });
        }
        let det = self.det();
        if (det - 1.0).abs() > tol {
            return Err(Error::NotRotation {
                reason: format!("det U = {det} (expected 1)"),
            });
        }
        Ok(())
    }
}

impl Mul for Mat3R {
    type Output = Mat3R;
    fn mul(self, o: Mat3R) -> Mat3R {
        let mut p = [[0.0; 3]; 3];
        for (i, row) in p.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        Mat3R { m: p }
    }
}

impl Mul<Vector3> for Mat3R {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        self.mul_vec(v)
    }
}

impl fmt::Display for Mat3R {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "(({}, {}, {}), ({}, {}, {}), ({}, {}, {}))",
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]
        )
    }
}
