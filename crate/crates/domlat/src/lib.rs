//! File formats, the verification harness and the command-line front end
//! for the dominance lattice of integer partitions.

pub mod cli;
pub mod error;
pub mod formats;
pub mod range;
pub mod verify;

pub use error::CliError;
