//! Exact checks of the defining relations of the classical 2x2 generator
//! triplets. All entries are in `{0, +-1, +-i}`, so products are computed
//! without rounding and compared with `==`.

use std::fmt;

use super::complex::Complex;
use super::mat2::Mat2C;
use super::{CARTAN_H1, CARTAN_H2, CARTAN_H3, PSI_I, PSI_J, PSI_K};

/// Schur's `F = E2`.
pub const SCHUR_F: Mat2C = Mat2C::IDENTITY;
/// Schur's `A = ((0,1),(1,0))`.
pub const SCHUR_A: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
/// Schur's `B = ((0,1),(-1,0))`.
pub const SCHUR_B: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 0.0)]);
/// Schur's `C = ((1,0),(0,-1))`.
pub const SCHUR_C: Mat2C = Mat2C::from_pairs([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]);

/// Pauli `s_x`.
pub const PAULI_X: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
/// Pauli `s_y`.
pub const PAULI_Y: Mat2C = Mat2C::from_pairs([(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)]);
/// Pauli `s_z`.
pub const PAULI_Z: Mat2C = Mat2C::from_pairs([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]);

/// Which generator triplet to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Schur,
    Pauli,
    CartanH,
    CartanI,
    HamiltonIJK,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::Schur,
        GeneratorKind::Pauli,
        GeneratorKind::CartanH,
        GeneratorKind::CartanI,
        GeneratorKind::HamiltonIJK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Schur => "schur",
            GeneratorKind::Pauli => "pauli",
            GeneratorKind::CartanH => "cartan_h",
            GeneratorKind::CartanI => "cartan_i",
            GeneratorKind::HamiltonIJK => "hamilton_ijk",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub kind: GeneratorKind,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

struct Checker {
    checks: Vec<RelationCheck>,
}

impl Checker {
    fn eq(&mut self, relation: &str, lhs: Mat2C, rhs: Mat2C) {
        self.checks.push(RelationCheck {
            relation: relation.to_string(),
            pass: lhs == rhs,
        });
    }
}

fn scalar(re: f64, im: f64) -> Mat2C {
    Mat2C::scalar(Complex::new(re, im))
}

fn minus_i_times(m: Mat2C) -> Mat2C {
    m.scale(Complex::new(0.0, -1.0))
}

/// Cartan's second triplet `I_j = -i H_j`.
pub fn cartan_i() -> [Mat2C; 3] {
    [CARTAN_H1, CARTAN_H2, CARTAN_H3].map(minus_i_times)
}

/// Checks every displayed relation of the chosen triplet.
pub fn verify_generator_relations(kind: GeneratorKind) -> RelationReport {
    let mut c = Checker { checks: Vec::new() };
    let one = Mat2C::IDENTITY;
    match kind {
        GeneratorKind::Schur => {
            let (f, a, b, cm) = (SCHUR_F, SCHUR_A, SCHUR_B, SCHUR_C);
            c.eq("A^2 = F", a * a, f);
            c.eq("B^2 = -F", b * b, -f);
            c.eq("C^2 = F", cm * cm, f);
            c.eq("CBA = F", cm * b * a, f);
            c.eq("AB = -C", a * b, -cm);
            c.eq("BA = C", b * a, cm);
            c.eq("BC = -A", b * cm, -a);
            c.eq("CB = A", cm * b, a);
            c.eq("CA = B", cm * a, b);
            c.eq("AC = -B", a * cm, -b);
        }
        GeneratorKind::Pauli => {
            let (x, y, z) = (PAULI_X, PAULI_Y, PAULI_Z);
            let two_i = Complex::new(0.0, 2.0);
            c.eq("[s_x, s_y] = 2i s_z", x * y - y * x, z.scale(two_i));
            c.eq("[s_y, s_z] = 2i s_x", y * z - z * y, x.scale(two_i));
            c.eq("[s_z, s_x] = 2i s_y", z * x - x * z, y.scale(two_i));
        }
        GeneratorKind::CartanH => {
            let h = [CARTAN_H1, CARTAN_H2, CARTAN_H3];
            for (j, hj) in h.iter().enumerate() {
                c.eq(&format!("H{}^2 = 1", j + 1), *hj * *hj, one);
            }
            for (j, k) in [(0, 1), (1, 2), (2, 0)] {
                c.eq(
                    &format!("H{}H{} = -H{}H{}", j + 1, k + 1, k + 1, j + 1),
                    h[j] * h[k],
                    -(h[k] * h[j]),
                );
            }
            c.eq("H1H2H3 = i", h[0] * h[1] * h[2], scalar(0.0, 1.0));
        }
        GeneratorKind::CartanI => {
            let i = cartan_i();
            for (j, ij) in i.iter().enumerate() {
                c.eq(&format!("I{}^2 = -1", j + 1), *ij * *ij, -one);
            }
            for (j, k) in [(0, 1), (1, 2), (2, 0)] {
                c.eq(
                    &format!("I{}I{} = -I{}I{}", j + 1, k + 1, k + 1, j + 1),
                    i[j] * i[k],
                    -(i[k] * i[j]),
                );
            }
            c.eq("I1I2I3 = -1", i[0] * i[1] * i[2], -one);
        }
        GeneratorKind::HamiltonIJK => {
            let (i, j, k) = (PSI_I, PSI_J, PSI_K);
            c.eq("I^2 = -1", i * i, -one);
            c.eq("J^2 = -1", j * j, -one);
            c.eq("K^2 = -1", k * k, -one);
            c.eq("IJK = -1", i * j * k, -one);
            c.eq("IJ = K", i * j, k);
            c.eq("JI = -K", j * i, -k);
            c.eq("JK = I", j * k, i);
            c.eq("KJ = -I", k * j, -i);
            c.eq("KI = J", k * i, j);
            c.eq("IK = -J", i * k, -j);
        }
    }
    RelationReport {
        kind,
        checks: c.checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_triplet_satisfies_its_relations() {
        for kind in GeneratorKind::ALL {
            let report = verify_generator_relations(kind);
            assert!(!report.checks.is_empty());
            for check in &report.checks {
                assert!(check.pass, "{kind}: {} failed", check.relation);
            }
        }
    }

    #[test]
    fn relation_counts() {
        let count = |k| verify_generator_relations(k).checks.len();
        assert_eq!(count(GeneratorKind::Schur), 10);
        assert_eq!(count(GeneratorKind::Pauli), 3);
        assert_eq!(count(GeneratorKind::CartanH), 7);
        assert_eq!(count(GeneratorKind::CartanI), 7);
        assert_eq!(count(GeneratorKind::HamiltonIJK), 10);
    }

    #[test]
    fn a_wrong_sign_is_detected() {
        // H2 with the sign of the immersion's J convention would break H1H2H3 = i
        let wrong_h2 = -CARTAN_H2;
        assert_ne!(CARTAN_H1 * wrong_h2 * CARTAN_H3, scalar(0.0, 1.0));
    }
}
