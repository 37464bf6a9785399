//! Command-line front end for the `creator-game` solver.

pub mod commands;
pub mod error;
pub mod presets;
pub mod reproduce;
pub mod scenario;

pub use error::CliError;
