//! Capacity sweeps over (k, d) for 2×2ⁿ channels whose biased row has `k`
//! Walsh coefficients equal to `d`.

use std::io::{Read, Write};

use dmc_capacity::analytic::{crypto_estimate, renyi_half};
use dmc_capacity::channel::make_wht_sparse_channel;
use dmc_capacity::{ba_capacity, Execution, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::{CliError, DEFAULT_EPSILON};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: f64,
    pub k: usize,
    pub capacity_ba: f64,
    pub estimate: f64,
    pub renyi_half_over_two: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: u32,
    pub ks: Vec<usize>,
    /// Defaults to 0.01.
    pub d_min: Option<f64>,
    /// Defaults to `min(0.99, 1/k - 0.01)` per k.
    pub d_max: Option<f64>,
    pub d_step: f64,
    pub epsilon: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n: 8,
            ks: vec![1, 2, 4],
            d_min: None,
            d_max: None,
            d_step: 0.01,
            epsilon: DEFAULT_EPSILON,
        }
    }
}

// Grid values are snapped to 1e-10 so 0.1 + 0.2 style drift doesn't leak
// into the CSV.
fn snap(x: f64) -> f64 {
    (x * 1e10).round() / 1e10
}

/// Expands the configuration into `(k, d)` points ordered by k, then d.
pub fn grid(config: &SweepConfig) -> Result<Vec<(usize, f64)>, CliError> {
    if !(config.d_step > 0.0) {
        return Err(CliError::Usage(format!("d-step must be positive, got {}", config.d_step)));
    }
    let mut ks = config.ks.clone();
    ks.sort_unstable();
    ks.dedup();
    if ks.is_empty() || ks[0] == 0 {
        return Err(CliError::Usage("k list must contain positive sparsities".into()));
    }
    let d_min = config.d_min.unwrap_or(0.01);
    if d_min < 0.0 {
        return Err(CliError::Usage(format!("d-min must be nonnegative, got {d_min}")));
    }
    let mut points = Vec::new();
    for k in ks {
        let d_max = match config.d_max {
            Some(d_max) => {
                if k as f64 * d_max > 1.0 + 1e-12 {
                    return Err(CliError::Usage(format!(
                        "k·d_max > 1 for (k = {k}, d_max = {d_max}); the biased row would not be a distribution"
                    )));
                }
                d_max
            }
            None => (1.0 / k as f64 - 0.01).min(0.99),
        };
        let mut i = 0usize;
        loop {
            let d = snap(d_min + i as f64 * config.d_step);
            if d > d_max + 1e-12 {
                break;
            }
            points.push((k, d));
            i += 1;
        }
    }
    Ok(points)
}

pub fn sweep_point(n: u32, k: usize, d: f64, epsilon: f64) -> Result<SweepRow, CliError> {
    let channel = make_wht_sparse_channel(n, k, d, None)?;
    let result = ba_capacity(&channel, &SolverConfig::with_epsilon(epsilon))?;
    if !result.converged {
        return Err(CliError::Runtime(format!("solver did not converge at k = {k}, d = {d}")));
    }
    Ok(SweepRow {
        d,
        k,
        capacity_ba: result.capacity(),
        estimate: crypto_estimate(k, d)?,
        renyi_half_over_two: renyi_half(channel.row(0), channel.row(1))? / 2.0,
        iterations: result.iterations,
    })
}

/// Solves every grid point; rows come back in grid order whatever `exec` is.
pub fn run_sweep(config: &SweepConfig, exec: Execution) -> Result<Vec<SweepRow>, CliError> {
    let points = grid(config)?;
    exec.map_slice(&points, |&(k, d)| sweep_point(config.n, k, d, config.epsilon))
        .into_iter()
        .collect()
}

/// Full-precision CSV; floats use the shortest representation that parses
/// back to the same value.
pub fn write_rows<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<SweepRow>, CliError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(CliError::from)
}
