//! Spherical trigonometry on the unit sphere and the spherical-triangle
//! construction of a product of two rotations.
//!
//! Given rotations `(phi_A, n_A)` (applied first) and `(phi_B, n_B)`, put
//! `A = n_A`, `B = n_B` on the sphere. Turning the great circle `AB` about
//! `n_A` by `-phi_A / 2` and about `n_B` by `+phi_B / 2` gives two great
//! circles meeting at `C`. The triangle `ABC` has angles `phi_A / 2` at `A`
//! and `phi_B / 2` at `B`; `C` is the axis of the product and its exterior
//! angle at `C` is half the product's angle. Only spherical trigonometry and
//! plane rotations are used here, so the result is an independent check on
//! the quaternion formula.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quaternion::{cross, dot, Vector3};
use crate::rotation::AxisAngle;

/// Residual tolerance for every formula family.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Solutions with `|cos(gamma)| >= 1 - DEGENERATE_EPS` are rejected.
const DEGENERATE_EPS: f64 = 1e-12;

/// Axes with `|<n_A, n_B>| >= 1 - PARALLEL_EPS` are treated as parallel.
const PARALLEL_EPS: f64 = 1e-10;

/// A triangle on the unit sphere: sides `a, b, c` (arc lengths) opposite the
/// interior angles `alpha, beta, gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalTriangle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

fn in_open_range(v: f64) -> bool {
    v > 0.0 && v < PI
}

impl SphericalTriangle {
    /// Builds a triangle from all six parts, checking only that each lies in
    /// `(0, pi)`. Use [`verify_formula_families`] to test consistency.
    pub fn new(a: f64, b: f64, c: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let parts = [a, b, c, alpha, beta, gamma];
        if let Some(v) = parts.iter().find(|v| !in_open_range(**v)) {
            return Err(Error::DegenerateTriangle {
                reason: format!("part {v} is outside (0, pi)"),
            });
        }
        Ok(SphericalTriangle {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    }

    /// `alpha + beta + gamma - pi`, the area on the unit sphere.
    pub fn excess(&self) -> f64 {
        self.alpha + self.beta + self.gamma - PI
    }
}

/// `cos(gamma) = -cos(alpha) cos(beta) + sin(alpha) sin(beta) cos(c)`.
pub fn angle_cosine_rule(alpha: f64, beta: f64, c: f64) -> f64 {
    -alpha.cos() * beta.cos() + alpha.sin() * beta.sin() * c.cos()
}

/// Completes a triangle from two angles and the side between them.
///
/// `gamma` comes from the angle cosine rule. The remaining sides use the
/// same rule solved for `cos(a)` paired with the sine rule for `sin(a)`,
/// combined through `atan2`.
pub fn solve_from_two_angles_and_included_side(
    alpha: f64,
    beta: f64,
    c: f64,
) -> Result<SphericalTriangle> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("c", c)] {
        if !in_open_range(v) {
            return Err(Error::DegenerateTriangle {
                reason: format!("{name} = {v} is outside (0, pi)"),
            });
        }
    }
    let cos_gamma = angle_cosine_rule(alpha, beta, c);
    if cos_gamma.abs() >= 1.0 - DEGENERATE_EPS {
        return Err(Error::DegenerateTriangle {
            reason: format!("cos(gamma) = {cos_gamma}"),
        });
    }
    let gamma = cos_gamma.acos();
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let sc = c.sin();
    // sin(a) sin(beta) sin(gamma) = sin(c) sin(alpha) sin(beta)
    // cos(a) sin(beta) sin(gamma) = cos(alpha) + cos(beta) cos(gamma)
    let a = (sc * sa * sb).atan2(ca + cb * cos_gamma);
    let b = (sc * sb * sa).atan2(cb + cos_gamma * ca);
    SphericalTriangle::new(a, b, c, alpha, beta, gamma)
}

/// Largest absolute residual of each formula family on one triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaResiduals {
    /// `sin a / sin alpha = sin b / sin beta = sin c / sin gamma`
    pub sine: f64,
    /// `cos a = cos b cos c + sin b sin c cos alpha` and cyclic
    pub side_cosine: f64,
    /// `cos alpha = -cos beta cos gamma + sin beta sin gamma cos a` and cyclic
    pub angle_cosine: f64,
    /// `sin a cos beta = cos b sin c - sin b cos c cos alpha` and cyclic
    pub sine_cosine: f64,
    /// The spherical excess; positive for a proper triangle.
    pub excess: f64,
}

impl FormulaResiduals {
    pub fn max(&self) -> f64 {
        self.sine
            .max(self.side_cosine)
            .max(self.angle_cosine)
            .max(self.sine_cosine)
    }

    pub fn all_within(&self, tol: f64) -> bool {
        self.max() <= tol && self.excess > 0.0
    }
}

/// Evaluates the four formula families of spherical trigonometry.
pub fn verify_formula_families(t: &SphericalTriangle) -> FormulaResiduals {
    let (sa, ca) = t.a.sin_cos();
    let (sb, cb) = t.b.sin_cos();
    let (sc, cc) = t.c.sin_cos();
    let (s_al, c_al) = t.alpha.sin_cos();
    let (s_be, c_be) = t.beta.sin_cos();
    let (s_ga, c_ga) = t.gamma.sin_cos();

    let ratios = [sa / s_al, sb / s_be, sc / s_ga];
    let sine = (ratios[0] - ratios[1])
        .abs()
        .max((ratios[1] - ratios[2]).abs())
        .max((ratios[2] - ratios[0]).abs());

    let side_cosine = [
        ca - (cb * cc + sb * sc * c_al),
        cb - (cc * ca + sc * sa * c_be),
        cc - (ca * cb + sa * sb * c_ga),
    ]
    .iter()
    .fold(0.0_f64, |m, r| m.max(r.abs()));

    let angle_cosine = [
        c_al - (-c_be * c_ga + s_be * s_ga * ca),
        c_be - (-c_ga * c_al + s_ga * s_al * cb),
        c_ga - (-c_al * c_be + s_al * s_be * cc),
    ]
    .iter()
    .fold(0.0_f64, |m, r| m.max(r.abs()));

    let sine_cosine = [
        sa * c_be - (cb * sc - sb * cc * c_al),
        sb * c_ga - (cc * sa - sc * ca * c_be),
        sc * c_al - (ca * sb - sa * cb * c_ga),
    ]
    .iter()
    .fold(0.0_f64, |m, r| m.max(r.abs()));

    FormulaResiduals {
        sine,
        side_cosine,
        angle_cosine,
        sine_cosine,
        excess: t.excess(),
    }
}

/// Rotates `v` (orthogonal to the unit vector `n`) by `angle` about `n`.
fn turn_tangent(n: Vector3, v: Vector3, angle: f64) -> Vector3 {
    let (s, c) = angle.sin_cos();
    v * c + cross(n, v) * s
}

fn arc(u: Vector3, v: Vector3) -> f64 {
    cross(u, v).norm().atan2(dot(u, v))
}

/// Every piece of the construction, for inspection and reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricConstruction {
    pub vertex_a: Vector3,
    pub vertex_b: Vector3,
    /// Intersection of the two turned great circles; the product's axis.
    pub vertex_c: Vector3,
    /// Half-angles at `A` and `B` after reducing the inputs mod `2 pi`.
    pub alpha: f64,
    pub beta: f64,
    /// Arc `AB`.
    pub side_c: f64,
    /// Interior angle at `C` from the angle cosine rule.
    pub gamma: f64,
    /// `(2 (pi - gamma), C)`.
    pub rotation: AxisAngle,
}

impl GeometricConstruction {
    /// The triangle with sides measured from the constructed vertices.
    pub fn triangle(&self) -> Result<SphericalTriangle> {
        SphericalTriangle::new(
            arc(self.vertex_b, self.vertex_c),
            arc(self.vertex_a, self.vertex_c),
            self.side_c,
            self.alpha,
            self.beta,
            self.gamma,
        )
    }
}

/// Builds the spherical triangle for "apply `pa`, then `pb`".
///
/// Angles are reduced mod `2 pi` first: the triangle sees only half-angles
/// in `[0, pi)`, so whole turns are not represented.
pub fn geometric_construction(pa: &AxisAngle, pb: &AxisAngle) -> Result<GeometricConstruction> {
    let (na, nb) = (pa.axis(), pb.axis());
    let cos_c = dot(na, nb);
    if cos_c.abs() >= 1.0 - PARALLEL_EPS {
        return Err(Error::ParallelAxes);
    }
    let alpha = 0.5 * pa.theta().rem_euclid(2.0 * PI);
    let beta = 0.5 * pb.theta().rem_euclid(2.0 * PI);
    let side_c = arc(na, nb);

    // unit tangents at A towards B and at B towards A
    let ta = (nb - na * cos_c) / (nb - na * cos_c).norm();
    let tb = (na - nb * cos_c) / (na - nb * cos_c).norm();
    let ta = turn_tangent(na, ta, -alpha);
    let tb = turn_tangent(nb, tb, beta);
    // poles of the two turned great circles
    let pole_a = cross(na, ta);
    let pole_b = cross(nb, tb);
    let line = cross(pole_a, pole_b);

    let cos_gamma = angle_cosine_rule(alpha, beta, side_c).clamp(-1.0, 1.0);
    let gamma = cos_gamma.acos();

    let vertex_c = match line.normalized() {
        Some(c) => {
            // C lies on the turned arcs leaving A and B, not on their antipodes
            if dot(c, ta) + dot(c, tb) < 0.0 {
                -c
            } else {
                c
            }
        }
        // both half-angles vanish: the product is the identity
        None => Vector3::E3,
    };
    let rotation = AxisAngle::new(2.0 * (PI - gamma), vertex_c)?;
    Ok(GeometricConstruction {
        vertex_a: na,
        vertex_b: nb,
        vertex_c,
        alpha,
        beta,
        side_c,
        gamma,
        rotation,
    })
}

/// Product of two rotations (`pa` first) from the spherical construction.
///
/// Fails with [`Error::ParallelAxes`] for coaxial inputs, where the great
/// circle `AB` is undefined; use
/// [`compose_rodrigues`](crate::rotation::compose_rodrigues) there.
pub fn compose_geometric(pa: &AxisAngle, pb: &AxisAngle) -> Result<AxisAngle> {
    geometric_construction(pa, pb).map(|g| g.rotation)
}
