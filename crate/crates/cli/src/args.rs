use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rodrigues_core::kinematics::DEFAULT_STEP;
use rodrigues_core::sampling::DEFAULT_SEED;
use rodrigues_core::verify::Suite;

use crate::record::Representation;

#[derive(Debug, Parser)]
#[command(
    name = "rodrigues",
    version,
    about = "Axis-angle rotations: conversion, composition, propagation and checks"
)]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Read and write angles in degrees (angular rates in degrees per time unit).
    #[arg(long, global = true)]
    pub degrees: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rodrigues,
    Matrix,
    Geometric,
    SmallAngle,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Rodrigues => "rodrigues",
            Method::Matrix => "matrix",
            Method::Geometric => "geometric",
            Method::SmallAngle => "small_angle",
            Method::All => "all",
        }
    }
}

/// Rotation records given inline or read from a file (`-` for stdin).
#[derive(Debug, Args)]
pub struct RecordInput {
    /// Records as JSON objects.
    pub records: Vec<String>,

    /// File with one record per line.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert records to another representation.
    Convert {
        #[command(flatten)]
        input: RecordInput,
        /// axis_angle, quaternion, matrix or euler_zyz.
        #[arg(long)]
        to: Representation,
    },
    /// Compose records left to right: the first listed is applied first.
    Compose {
        #[command(flatten)]
        input: RecordInput,
        #[arg(long, value_enum, default_value_t = Method::Rodrigues)]
        method: Method,
        /// Representation of the result.
        #[arg(long, default_value = "axis_angle")]
        to: Representation,
    },
    /// Apply a rotation to vectors.
    Rotate {
        #[command(flatten)]
        input: RecordInput,
        /// Vector as x,y,z; repeatable.
        #[arg(long, short, required = true, value_parser = parse_vector, allow_hyphen_values = true)]
        vector: Vec<[f64; 3]>,
    },
    /// Reflect in the plane normal to a unit vector; two normals give the
    /// rotation obtained by reflecting in the first, then the second.
    Reflect {
        /// Unit normal as x,y,z; give once or twice.
        #[arg(long, short, required = true, num_args = 1, value_parser = parse_vector, allow_hyphen_values = true)]
        normal: Vec<[f64; 3]>,
        /// Vector to transform, as x,y,z; repeatable.
        #[arg(long, short, value_parser = parse_vector, allow_hyphen_values = true)]
        vector: Vec<[f64; 3]>,
    },
    /// Integrate the attitude under a sampled angular velocity.
    Propagate {
        /// Initial attitude as a JSON record.
        #[arg(long)]
        initial: String,
        /// Angular-velocity series, one {"t":..,"omega":[..]} per line.
        #[arg(long)]
        omega: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t0: f64,
        #[arg(long, allow_hyphen_values = true)]
        t1: f64,
        /// Integration step.
        #[arg(long, default_value_t = DEFAULT_STEP)]
        h: f64,
        /// Write every step as a quaternion record with a `t` field.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also run with h/2 and h/4 and report the observed order.
        #[arg(long)]
        study: bool,
    },
    /// Run the numerical check batteries; exits 1 if any check fails.
    Verify {
        /// algebra, cover, composition, reflection, spherical, derivative,
        /// generators, euler, extras or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Time quaternion against Euler-angle composition and measure
    /// parameter stability near the gimbal set.
    Bench {
        /// Number of timing samples and family members (at least 100).
        #[arg(long, short, default_value_t = 1000)]
        n: usize,
    },
    /// Legendre polynomials and permutation inversions.
    Extras {
        #[command(subcommand)]
        command: ExtrasCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExtrasCommand {
    /// Evaluate P_n(x).
    Legendre {
        #[arg(long, short)]
        n: u32,
        #[arg(long, short, allow_hyphen_values = true)]
        x: f64,
    },
    /// Count inversions of a permutation of 1..n, e.g. 2,1,4,3.
    Inversions {
        #[arg(value_delimiter = ',', required = true)]
        sigma: Vec<usize>,
    },
    /// Coefficients of sum_k N_n(k) q^k.
    GeneratingPolynomial {
        #[arg(long, short)]
        n: u32,
    },
}

/// Parses `x,y,z`.
pub fn parse_vector(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z but got '{s}'"));
    }
    let mut v = [0.0f64; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("'{p}' is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("'{p}' is not finite"));
        }
    }
    Ok(v)
}
