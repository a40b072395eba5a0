//! Table reproduction, parameter sweeps and distinguisher runs behind the
//! `dmc-capacity` command-line tool. Results are written as CSV.

pub mod distinguish;
mod error;
pub mod reproduce;
pub mod sweep;

pub use error::CliError;

/// Default solver accuracy in nats.
pub const DEFAULT_EPSILON: f64 = 1e-4;
