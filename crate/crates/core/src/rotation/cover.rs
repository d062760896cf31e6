//! The two-to-one covering `T: B -> SO(3)`.

use crate::error::Result;
use crate::matrix_rep::{Mat3R, SO3_TOLERANCE};
use crate::quaternion::{Quaternion, UnitQuaternion, Vector3};

/// Below this magnitude the scalar part counts as zero for the sign rule.
const FIBRE_TIE_EPS: f64 = 1e-15;

/// Matrix of `T(q): x -> q x conj(q)`, assembled column by column from the
/// images of `e1, e2, e3`.
pub fn conjugation_matrix(q: UnitQuaternion) -> Mat3R {
    Mat3R::from_cols(Vector3::basis().map(|e| q.act(e)))
}

/// The fibre `{q, -q}` of the covering over `U`.
///
/// The first element has nonnegative scalar part; when the scalar part is
/// zero, its first nonzero vector component is positive. Uses Shepperd's
/// largest-pivot extraction, independent of [`super::from_matrix`].
pub fn double_cover_fibre(u: &Mat3R) -> Result<(UnitQuaternion, UnitQuaternion)> {
    u.check_rotation(SO3_TOLERANCE)?;
    let m = &u.m;
    let tr = u.trace();
    let pivots = [tr, m[0][0], m[1][1], m[2][2]];
    let k = (0..4)
        .max_by(|&i, &j| pivots[i].total_cmp(&pivots[j]))
        .unwrap_or(0);
    let q = match k {
        0 => {
            let s = 2.0 * (1.0 + tr).sqrt();
            Quaternion::new(
                0.25 * s,
                (m[2][1] - m[1][2]) / s,
                (m[0][2] - m[2][0]) / s,
                (m[1][0] - m[0][1]) / s,
            )
        }
        1 => {
            let s = 2.0 * (1.0 + m[0][0] - m[1][1] - m[2][2]).sqrt();
            Quaternion::new(
                (m[2][1] - m[1][2]) / s,
                0.25 * s,
                (m[0][1] + m[1][0]) / s,
                (m[0][2] + m[2][0]) / s,
            )
        }
        2 => {
            let s = 2.0 * (1.0 - m[0][0] + m[1][1] - m[2][2]).sqrt();
            Quaternion::new(
                (m[0][2] - m[2][0]) / s,
                (m[0][1] + m[1][0]) / s,
                0.25 * s,
                (m[1][2] + m[2][1]) / s,
            )
        }
        _ => {
            let s = 2.0 * (1.0 - m[0][0] - m[1][1] + m[2][2]).sqrt();
            Quaternion::new(
                (m[1][0] - m[0][1]) / s,
                (m[0][2] + m[2][0]) / s,
                (m[1][2] + m[2][1]) / s,
                0.25 * s,
            )
        }
    };
    let q = UnitQuaternion::normalize(canonical_sign(q))?;
    Ok((q, -q))
}

fn canonical_sign(q: Quaternion) -> Quaternion {
    if q.a.abs() > FIBRE_TIE_EPS {
        return if q.a < 0.0 { -q } else { q };
    }
    let q = Quaternion::new(0.0, q.b, q.c, q.d);
    match [q.b, q.c, q.d]
        .into_iter()
        .find(|c| c.abs() > FIBRE_TIE_EPS)
    {
        Some(c) if c < 0.0 => -q,
        _ => q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{to_matrix, AxisAngle};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn identity_fibre_is_plus_minus_one() {
        let (q, nq) = double_cover_fibre(&Mat3R::IDENTITY).unwrap();
        assert_eq!(q.quaternion(), Quaternion::ONE);
        assert_eq!(nq.quaternion(), -Quaternion::ONE);
    }

    #[test]
    fn quarter_turn_fibre() {
        let u = to_matrix(&AxisAngle::new(FRAC_PI_2, Vector3::E3).unwrap());
        let (q, nq) = double_cover_fibre(&u).unwrap();
        let expect = Quaternion::new(FRAC_PI_4.cos(), 0.0, 0.0, FRAC_PI_4.sin());
        assert!(q.quaternion().max_abs_diff(expect) < 1e-15);
        assert_eq!(nq.quaternion(), -q.quaternion());
    }

    #[test]
    fn half_turn_tie_break() {
        let u = to_matrix(&AxisAngle::new(PI, Vector3::new(0.0, -0.6, 0.8)).unwrap());
        let (q, _) = double_cover_fibre(&u).unwrap();
        assert!(
            q.quaternion()
                .max_abs_diff(Quaternion::new(0.0, 0.0, 0.6, -0.8))
                < 1e-15
        );
        assert!(conjugation_matrix(q).max_abs_diff(&u) < 1e-15);
    }

    #[test]
    fn conjugation_matrix_of_k_is_half_turn() {
        let q = UnitQuaternion::new(Quaternion::K).unwrap();
        let expect = Mat3R::from_rows([[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(conjugation_matrix(q), expect);
    }
}
