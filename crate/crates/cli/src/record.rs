//! Line-delimited rotation records.
//!
//! One JSON object per line, tagged by `type`:
//!
//! ```text
//! {"type":"axis_angle","theta":..,"w":[x,y,z]}
//! {"type":"quaternion","a":..,"b":..,"c":..,"d":..}
//! {"type":"matrix","m":[m11,m12,m13,m21,..,m33]}
//! {"type":"euler_zyz","phi":..,"theta":..,"psi":..}
//! ```
//!
//! Records are written in a canonical form: fields in the order above and
//! every number as `{:.16e}`, which round-trips any `f64` exactly. Parsing a
//! canonical line and writing it back gives the same bytes.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use rodrigues_core::matrix_rep::{Mat3R, SO3_TOLERANCE};
use rodrigues_core::rotation::{
    conjugation_matrix, double_cover_fibre, euler_to_matrix, from_matrix, matrix_to_euler,
    to_matrix, EulerZYZ,
};
use rodrigues_core::{AxisAngle, Quaternion, UnitQuaternion, Vector3};
use serde::Deserialize;

/// Shortest decimal form that keeps all 17 significant digits.
pub fn canonical_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn canonical_list(v: &[f64]) -> String {
    v.iter()
        .map(|x| canonical_number(*x))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    AxisAngle,
    Quaternion,
    Matrix,
    EulerZyz,
}

impl Representation {
    pub const ALL: [Representation; 4] = [
        Representation::AxisAngle,
        Representation::Quaternion,
        Representation::Matrix,
        Representation::EulerZyz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::AxisAngle => "axis_angle",
            Representation::Quaternion => "quaternion",
            Representation::Matrix => "matrix",
            Representation::EulerZyz => "euler_zyz",
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Representation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown representation '{s}' (expected axis_angle, quaternion, matrix or euler_zyz)"))
    }
}

/// A rotation as read from or written to a file. Field values are kept
/// exactly as given; [`RotationRecord::validate`] checks them.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum RotationRecord {
    AxisAngle { theta: f64, w: [f64; 3] },
    Quaternion { a: f64, b: f64, c: f64, d: f64 },
    Matrix { m: [f64; 9] },
    EulerZyz { phi: f64, theta: f64, psi: f64 },
}

impl RotationRecord {
    pub fn representation(&self) -> Representation {
        match self {
            RotationRecord::AxisAngle { .. } => Representation::AxisAngle,
            RotationRecord::Quaternion { .. } => Representation::Quaternion,
            RotationRecord::Matrix { .. } => Representation::Matrix,
            RotationRecord::EulerZyz { .. } => Representation::EulerZyz,
        }
    }

    /// Parses one line and checks the record's invariants.
    pub fn parse(line: &str) -> Result<Self> {
        let record: RotationRecord = serde_json::from_str(line.trim())
            .with_context(|| format!("malformed rotation record: {}", line.trim()))?;
        record.validate()?;
        Ok(record)
    }

    /// Checks the invariant of the record's representation: a unit axis, a
    /// unit quaternion, a proper orthogonal matrix or finite Euler angles.
    pub fn validate(&self) -> Result<()> {
        let kind = self.representation();
        let check = match *self {
            RotationRecord::AxisAngle { theta, w } => {
                AxisAngle::new(theta, Vector3::from_array(w)).map(|_| ())
            }
            RotationRecord::Quaternion { a, b, c, d } => {
                UnitQuaternion::new(Quaternion::new(a, b, c, d)).map(|_| ())
            }
            RotationRecord::Matrix { m } => Mat3R::from_row_major(m).check_rotation(SO3_TOLERANCE),
            RotationRecord::EulerZyz { phi, theta, psi } => {
                if EulerZYZ::new(phi, theta, psi).is_finite() {
                    Ok(())
                } else {
                    Err(rodrigues_core::Error::NonFinite {
                        what: "Euler angles",
                    })
                }
            }
        };
        check.with_context(|| format!("invalid {kind} record"))
    }

    /// Scales the angle fields by `factor` (degrees <-> radians).
    pub fn scale_angles(&self, factor: f64) -> RotationRecord {
        match *self {
            RotationRecord::AxisAngle { theta, w } => RotationRecord::AxisAngle {
                theta: theta * factor,
                w,
            },
            RotationRecord::EulerZyz { phi, theta, psi } => RotationRecord::EulerZyz {
                phi: phi * factor,
                theta: theta * factor,
                psi: psi * factor,
            },
            other => other,
        }
    }

    pub fn from_axis_angle(p: &AxisAngle) -> Self {
        RotationRecord::AxisAngle {
            theta: p.theta(),
            w: p.axis().to_array(),
        }
    }

    pub fn from_quaternion(q: UnitQuaternion) -> Self {
        let [a, b, c, d] = q.quaternion().to_array();
        RotationRecord::Quaternion { a, b, c, d }
    }

    pub fn from_matrix(m: &Mat3R) -> Self {
        RotationRecord::Matrix {
            m: m.to_row_major(),
        }
    }

    pub fn from_euler(e: &EulerZYZ) -> Self {
        RotationRecord::EulerZyz {
            phi: e.phi,
            theta: e.theta,
            psi: e.psi,
        }
    }

    /// The record in another representation, with the representations
    /// passed through on the way.
    pub fn convert(&self, target: Representation) -> Result<(RotationRecord, Vec<Representation>)> {
        use Representation as R;
        let source = self.representation();
        if source == target {
            return Ok((*self, vec![source]));
        }
        let m = || self.to_matrix();
        let (out, path) = match (self, target) {
            (RotationRecord::AxisAngle { .. }, R::Quaternion) => (
                Self::from_quaternion(self.to_axis_angle()?.to_quaternion()),
                vec![source, target],
            ),
            (RotationRecord::Quaternion { .. }, R::AxisAngle) => (
                Self::from_axis_angle(&self.to_axis_angle()?),
                vec![source, target],
            ),
            (_, R::Matrix) => (Self::from_matrix(&m()?), vec![source, target]),
            (RotationRecord::Matrix { .. }, R::AxisAngle) => (
                Self::from_axis_angle(&from_matrix(&m()?)?),
                vec![source, target],
            ),
            (RotationRecord::Matrix { .. }, R::Quaternion) => (
                Self::from_quaternion(double_cover_fibre(&m()?)?.0),
                vec![source, target],
            ),
            (_, R::EulerZyz) => {
                let path = if source == R::Matrix {
                    vec![source, target]
                } else {
                    vec![source, R::Matrix, target]
                };
                (Self::from_euler(&matrix_to_euler(&m()?)?), path)
            }
            (RotationRecord::EulerZyz { .. }, R::AxisAngle) => (
                Self::from_axis_angle(&from_matrix(&m()?)?),
                vec![source, R::Matrix, target],
            ),
            (RotationRecord::EulerZyz { .. }, R::Quaternion) => (
                Self::from_quaternion(double_cover_fibre(&m()?)?.0),
                vec![source, R::Matrix, target],
            ),
            _ => bail!("no conversion from {source} to {target}"),
        };
        Ok((out, path))
    }

    /// The rotation as an axis-angle parameter. Quaternions map exactly
    /// (angle in `[0, 2 pi]`); matrices and Euler angles give `[0, pi]`.
    pub fn to_axis_angle(&self) -> Result<AxisAngle> {
        Ok(match *self {
            RotationRecord::AxisAngle { theta, w } => {
                AxisAngle::new(theta, Vector3::from_array(w))?
            }
            RotationRecord::Quaternion { a, b, c, d } => {
                AxisAngle::from_quaternion(UnitQuaternion::new(Quaternion::new(a, b, c, d))?)
            }
            _ => from_matrix(&self.to_matrix()?)?,
        })
    }

    pub fn to_matrix(&self) -> Result<Mat3R> {
        Ok(match *self {
            RotationRecord::AxisAngle { .. } => to_matrix(&self.to_axis_angle()?),
            RotationRecord::Quaternion { a, b, c, d } => {
                conjugation_matrix(UnitQuaternion::new(Quaternion::new(a, b, c, d))?)
            }
            RotationRecord::Matrix { m } => {
                let m = Mat3R::from_row_major(m);
                m.check_rotation(SO3_TOLERANCE)?;
                m
            }
            RotationRecord::EulerZyz { phi, theta, psi } => {
                euler_to_matrix(&EulerZYZ::new(phi, theta, psi))
            }
        })
    }

    /// Canonical JSON members after the `type` tag, without braces.
    fn json_fields(&self) -> String {
        match *self {
            RotationRecord::AxisAngle { theta, w } => {
                format!(
                    "\"theta\":{},\"w\":[{}]",
                    canonical_number(theta),
                    canonical_list(&w)
                )
            }
            RotationRecord::Quaternion { a, b, c, d } => format!(
                "\"a\":{},\"b\":{},\"c\":{},\"d\":{}",
                canonical_number(a),
                canonical_number(b),
                canonical_number(c),
                canonical_number(d)
            ),
            RotationRecord::Matrix { m } => format!("\"m\":[{}]", canonical_list(&m)),
            RotationRecord::EulerZyz { phi, theta, psi } => format!(
                "\"phi\":{},\"theta\":{},\"psi\":{}",
                canonical_number(phi),
                canonical_number(theta),
                canonical_number(psi)
            ),
        }
    }

    /// The canonical one-line JSON form.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"type\":\"{}\",{}}}",
            self.representation(),
            self.json_fields()
        )
    }

    /// Canonical JSON with a leading time field, for trajectory files.
    pub fn to_json_at(&self, t: f64) -> String {
        format!(
            "{{\"type\":\"{}\",\"t\":{},{}}}",
            self.representation(),
            canonical_number(t),
            self.json_fields()
        )
    }

    /// A whitespace-separated line for terminals.
    pub fn to_text(&self) -> String {
        let nums = |v: &[f64]| {
            v.iter()
                .map(|x| canonical_number(*x))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match *self {
            RotationRecord::AxisAngle { theta, w } => format!(
                "axis_angle theta {} w {}",
                canonical_number(theta),
                nums(&w)
            ),
            RotationRecord::Quaternion { a, b, c, d } => {
                format!("quaternion {}", nums(&[a, b, c, d]))
            }
            RotationRecord::Matrix { m } => format!("matrix {}", nums(&m)),
            RotationRecord::EulerZyz { phi, theta, psi } => format!(
                "euler_zyz phi {} theta {} psi {}",
                canonical_number(phi),
                canonical_number(theta),
                canonical_number(psi)
            ),
        }
    }
}
