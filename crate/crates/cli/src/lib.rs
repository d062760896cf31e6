//! Command-line front end for `rodrigues-core`.
//!
//! The binary is a thin wrapper around [`run`], which writes everything to
//! a caller-supplied writer so the commands can be driven from tests.

pub mod args;
pub mod bench;
pub mod commands;
pub mod omega;
pub mod record;

pub use args::Cli;
pub use commands::{run, Outcome};
