//! Hamilton's quaternions and the pure-quaternion model of Euclidean 3-space.
//!
//! Components are stored scalar-first: `q = a + b i + c j + d k`. A [`Vector3`]
//! is identified with the pure quaternion `0 + x i + y j + z k`, which is how
//! every rotation in this crate acts on points.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Drift from unit norm that [`UnitQuaternion::new`] silently absorbs.
pub const UNIT_RENORMALIZE_TOLERANCE: f64 = 1e-6;

/// Real multiplications in one [`hamilton_product`].
pub const HAMILTON_MULTIPLICATIONS: usize = 16;
/// Real additions and subtractions in one [`hamilton_product`].
pub const HAMILTON_ADDITIONS: usize = 12;

/// Below this angle `exp_pure` evaluates `sin(t)/t` from its Taylor series.
const SINC_SERIES_THRESHOLD: f64 = 1e-4;

/// The Hamilton product on scalar-first 4-tuples.
///
/// Written once, generically, so the arithmetic count can be audited with an
/// instrumented scalar type: 16 multiplications and 12 additions/subtractions.
#[inline]
pub fn hamilton_product<T>(p: [T; 4], q: [T; 4]) -> [T; 4]
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// A vector of `E^3`, equivalently a pure quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const ZERO: Vector3 = Vector3::new(0.0, 0.0, 0.0);
    pub const E1: Vector3 = Vector3::new(1.0, 0.0, 0.0);
    pub const E2: Vector3 = Vector3::new(0.0, 1.0, 0.0);
    pub const E3: Vector3 = Vector3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    pub const fn from_array(v: [f64; 3]) -> Self {
        Vector3::new(v[0], v[1], v[2])
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Standard basis vectors `e1, e2, e3`.
    pub const fn basis() -> [Vector3; 3] {
        [Vector3::E1, Vector3::E2, Vector3::E3]
    }

    pub fn dot(self, other: Vector3) -> f64 {
        dot(self, other)
    }

    pub fn cross(self, other: Vector3) -> Vector3 {
        cross(self, other)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// `self / |self|`, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vector3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    /// Accepts a vector whose norm is within `tol` of 1 and renormalizes it.
    pub fn unit_checked(self, tol: f64) -> Result<Vector3> {
        let n = self.norm();
        if !n.is_finite() {
            return Err(Error::NonFinite { what: "vector" });
        }
        if (n - 1.0).abs() > tol {
            return Err(Error::NotUnitVector { norm: n });
        }
        Ok(self / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(self, other: Vector3) -> f64 {
        let d = self - other;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }

    /// The pure quaternion `x i + y j + z k`.
    pub fn to_quaternion(self) -> Quaternion {
        Quaternion::from_scalar_vector(0.0, self)
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, o: Vector3) -> Vector3 {
        Vector3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vector3 {
    fn add_assign(&mut self, o: Vector3) {
        *self = *self + o;
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, o: Vector3) -> Vector3 {
        Vector3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vector3> for f64 {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        v * self
    }
}

impl Div<f64> for Vector3 {
    type Output = Vector3;
    fn div(self, s: f64) -> Vector3 {
        Vector3::new(self.x / s, self.y / s, self.z / s)
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Euclidean inner product `u . v`.
pub fn dot(u: Vector3, v: Vector3) -> f64 {
    u.x * v.x + u.y * v.y + u.z * v.z
}

/// Vector product `u x v`, the expansion of the determinant with rows
/// `(i, u1, v1), (j, u2, v2), (k, u3, v3)`.
pub fn cross(u: Vector3, v: Vector3) -> Vector3 {
    Vector3::new(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )
}

/// An element `a + b i + c j + d k` of the quaternion field.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub const fn from_scalar_vector(s: f64, v: Vector3) -> Self {
        Quaternion::new(s, v.x, v.y, v.z)
    }

    pub const fn from_array(q: [f64; 4]) -> Self {
        Quaternion::new(q[0], q[1], q[2], q[3])
    }

    /// Scalar-first component array.
    pub const fn to_array(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn scalar(self) -> f64 {
        self.a
    }

    pub fn vector(self) -> Vector3 {
        Vector3::new(self.b, self.c, self.d)
    }

    pub fn conjugate(self) -> Quaternion {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn norm_squared(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(self) -> f64 {
        self.a.hypot(self.b).hypot(self.c.hypot(self.d))
    }

    /// `q^-1 = |q|^-2 conj(q)`.
    pub fn inverse(self) -> Result<Quaternion> {
        let n2 = self.norm_squared();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conjugate() * (1.0 / n2))
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        let d = self - other;
        d.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::from_array(hamilton_product(self.to_array(), r.to_array()))
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl From<Vector3> for Quaternion {
    fn from(v: Vector3) -> Quaternion {
        v.to_quaternion()
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

/// Free-function form of the quaternion product.
pub fn multiply(q: Quaternion, r: Quaternion) -> Quaternion {
    q * r
}

/// A quaternion of norm one: an element of the unit ball group `B`.
///
/// Construction renormalizes, so `| |q| - 1 |` stays at rounding level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion(Quaternion::ONE);

    /// Accepts `q` if its norm is within [`UNIT_RENORMALIZE_TOLERANCE`] of 1.
    pub fn new(q: Quaternion) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::NonFinite { what: "quaternion" });
        }
        let n = q.norm();
        if (n - 1.0).abs() > UNIT_RENORMALIZE_TOLERANCE {
            return Err(Error::NotUnitQuaternion { norm: n });
        }
        Ok(UnitQuaternion(q * (1.0 / n)))
    }

    /// Projects any nonzero finite quaternion onto the unit sphere.
    pub fn normalize(q: Quaternion) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::NonFinite { what: "quaternion" });
        }
        let n = q.norm();
        if n == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(UnitQuaternion(q * (1.0 / n)))
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }

    pub fn scalar(self) -> f64 {
        self.0.a
    }

    pub fn vector(self) -> Vector3 {
        self.0.vector()
    }

    /// For unit quaternions the inverse is the conjugate.
    pub fn inverse(self) -> UnitQuaternion {
        UnitQuaternion(self.0.conjugate())
    }

    /// The conjugation action `T(q): x -> q x conj(q)` on pure quaternions.
    pub fn act(self, x: Vector3) -> Vector3 {
        (self.0 * x.to_quaternion() * self.0.conjugate()).vector()
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, r: UnitQuaternion) -> UnitQuaternion {
        let p = self.0 * r.0;
        UnitQuaternion(p * (1.0 / p.norm()))
    }
}

impl Neg for UnitQuaternion {
    type Output = UnitQuaternion;
    fn neg(self) -> UnitQuaternion {
        UnitQuaternion(-self.0)
    }
}

impl From<UnitQuaternion> for Quaternion {
    fn from(q: UnitQuaternion) -> Quaternion {
        q.0
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `sin(t)/t`, by series near zero.
pub(crate) fn sinc(t: f64) -> f64 {
    if t.abs() < SINC_SERIES_THRESHOLD {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

/// Exponential of a pure quaternion: `exp(t w) = cos t + sin t w` for unit `w`.
pub fn exp_pure(x: Vector3) -> UnitQuaternion {
    let t = x.norm();
    let q = Quaternion::from_scalar_vector(t.cos(), x * sinc(t));
    UnitQuaternion(q * (1.0 / q.norm()))
}
