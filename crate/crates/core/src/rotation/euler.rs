use std::f64::consts::PI;

use crate::error::Result;
use crate::matrix_rep::{Mat3R, SO3_TOLERANCE};

/// `sin(theta)` at or below which the z-y-z chart is treated as degenerate.
pub const GIMBAL_EPS: f64 = 1e-12;

/// z-y-z Euler angles: the rotation `g3(phi) g2(theta) g3(psi)`.
///
/// [`matrix_to_euler`] returns `-pi < phi, psi <= pi` and `0 <= theta <= pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerZYZ {
    pub phi: f64,
    pub theta: f64,
    pub psi: f64,
}

impl EulerZYZ {
    pub const fn new(phi: f64, theta: f64, psi: f64) -> Self {
        EulerZYZ { phi, theta, psi }
    }

    pub fn is_finite(&self) -> bool {
        self.phi.is_finite() && self.theta.is_finite() && self.psi.is_finite()
    }

    /// Largest angle difference, with `phi` and `psi` compared modulo `2 pi`.
    pub fn max_deviation(&self, other: &EulerZYZ) -> f64 {
        wrapped_diff(self.phi, other.phi)
            .max((self.theta - other.theta).abs())
            .max(wrapped_diff(self.psi, other.psi))
    }
}

fn wrapped_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let w = (a + PI).rem_euclid(2.0 * PI) - PI;
    if w <= -PI {
        w + 2.0 * PI
    } else {
        w
    }
}

/// Right-handed rotation by `t` about `e1`.
pub fn g1(t: f64) -> Mat3R {
    let (s, c) = t.sin_cos();
    Mat3R::from_rows([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
}

/// Right-handed rotation by `t` about `e2`.
pub fn g2(t: f64) -> Mat3R {
    let (s, c) = t.sin_cos();
    Mat3R::from_rows([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
}

/// Right-handed rotation by `t` about `e3`.
pub fn g3(t: f64) -> Mat3R {
    let (s, c) = t.sin_cos();
    Mat3R::from_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

/// The expanded product `g3(phi) g2(theta) g3(psi)`.
pub fn euler_to_matrix(e: &EulerZYZ) -> Mat3R {
    let (sf, cf) = e.phi.sin_cos();
    let (st, ct) = e.theta.sin_cos();
    let (sp, cp) = e.psi.sin_cos();
    Mat3R::from_rows([
        [cf * ct * cp - sf * sp, -cf * ct * sp - sf * cp, cf * st],
        [sf * ct * cp + cf * sp, -sf * ct * sp + cf * cp, sf * st],
        [-st * cp, st * sp, ct],
    ])
}

/// z-y-z angles of a rotation matrix.
///
/// The sum `phi + psi` is read from the upper 2x2 block, which stays well
/// conditioned as `theta -> 0`; the difference `phi - psi` likewise for
/// `theta -> pi`. When `sin(theta) <= GIMBAL_EPS` only that combination is
/// determined and `psi = 0` is chosen.
pub fn matrix_to_euler(u: &Mat3R) -> Result<EulerZYZ> {
    u.check_rotation(SO3_TOLERANCE)?;
    let m = &u.m;
    let sin_t = m[0][2].hypot(m[1][2]);
    let theta = sin_t.atan2(m[2][2]);
    // (1 + cos t) sin(phi + psi) = U21 - U12, (1 + cos t) cos(phi + psi) = U11 + U22
    let sum = (m[1][0] - m[0][1]).atan2(m[0][0] + m[1][1]);
    // (1 - cos t) sin(phi - psi) = -(U21 + U12), (1 - cos t) cos(phi - psi) = U22 - U11
    let diff = (-(m[1][0] + m[0][1])).atan2(m[1][1] - m[0][0]);

    let (phi, psi) = if sin_t <= GIMBAL_EPS {
        if m[2][2] > 0.0 {
            (sum, 0.0)
        } else {
            (diff, 0.0)
        }
    } else if m[2][2] >= 0.0 {
        let psi = m[2][1].atan2(-m[2][0]);
        (sum - psi, psi)
    } else {
        let phi = m[1][2].atan2(m[0][2]);
        (phi, phi - diff)
    };
    Ok(EulerZYZ {
        phi: wrap_angle(phi),
        theta,
        psi: wrap_angle(psi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Vector3;
    use crate::rotation::{to_matrix, AxisAngle};
    use std::f64::consts::FRAC_PI_3;

    #[test]
    fn zero_angles_give_identity() {
        assert_eq!(
            euler_to_matrix(&EulerZYZ::new(0.0, 0.0, 0.0)),
            Mat3R::IDENTITY
        );
    }

    #[test]
    fn expansion_matches_elementary_product() {
        for (f, t, p) in [(0.3, 1.1, -2.0), (-2.9, 2.5, 0.7), (1.0, 0.0, 1.0)] {
            let prod = g3(f) * g2(t) * g3(p);
            let expanded = euler_to_matrix(&EulerZYZ::new(f, t, p));
            assert!(prod.max_abs_diff(&expanded) < 1e-15);
        }
    }

    #[test]
    fn pure_z_rotation_is_gimbal_degenerate() {
        let u = to_matrix(&AxisAngle::new(FRAC_PI_3, Vector3::E3).unwrap());
        let e = matrix_to_euler(&u).unwrap();
        assert!((e.phi - FRAC_PI_3).abs() < 1e-15);
        assert_eq!(e.theta, 0.0);
        assert_eq!(e.psi, 0.0);
    }

    #[test]
    fn flipped_pole_is_gimbal_degenerate() {
        let u = euler_to_matrix(&EulerZYZ::new(0.4, PI, -0.9));
        let e = matrix_to_euler(&u).unwrap();
        assert_eq!(e.psi, 0.0);
        assert!((e.theta - PI).abs() < 1e-15);
        assert!(euler_to_matrix(&e).max_abs_diff(&u) < 1e-15);
    }

    #[test]
    fn canonical_ranges() {
        let e = matrix_to_euler(&euler_to_matrix(&EulerZYZ::new(PI, 1.0, -PI))).unwrap();
        assert!(e.phi > -PI && e.phi <= PI);
        assert!(e.psi > -PI && e.psi <= PI);
        assert!(e.max_deviation(&EulerZYZ::new(PI, 1.0, PI)) < 1e-12);
        assert_eq!(wrap_angle(-PI), PI);
        assert_eq!(wrap_angle(3.0 * PI), PI);
    }

    #[test]
    fn rejects_non_rotation() {
        let m = Mat3R::from_rows([[2.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(matrix_to_euler(&m).is_err());
    }
}
