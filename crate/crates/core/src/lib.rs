//! Capacity of discrete memoryless channels for statistical cryptanalysis.
//!
//! The crate builds 2×M transition matrices whose biased row is described by
//! its Walsh-Hadamard spectrum, computes their capacity with the
//! Blahut-Arimoto iteration, compares the result with closed-form estimates
//! and the order-1/2 Rényi divergence, and runs the log-likelihood-ratio
//! distinguisher under Monte-Carlo.
//!
//! All capacities and divergences are in nats. Entropy helpers that follow
//! the usual binary-entropy convention return bits and say so.
//!
//! With the default `parallel` feature, embarrassingly parallel loops
//! (distinguisher trials, parameter sweeps, the grid oracle) run on rayon.
//! Without it they run sequentially and produce identical results.

pub mod analytic;
pub mod ba;
pub mod channel;
pub mod distinguisher;
mod error;
pub mod exec;
pub mod numeric;
pub mod walsh;

pub use analytic::EstimateComparison;
pub use ba::{ba_capacity, capacity_oracle_grid, mutual_information, CapacityResult, SolverConfig};
pub use channel::{ChannelMatrix, Distribution};
pub use distinguisher::{Decision, DistinguisherReport, SampleCounts};
pub use error::{Error, Result};
pub use exec::Execution;
pub use walsh::WalshSpectrum;

/// Absolute tolerance for sum-to-one and non-negativity checks.
pub const PROB_TOLERANCE: f64 = 1e-12;
