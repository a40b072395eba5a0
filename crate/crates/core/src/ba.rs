//! Blahut-Arimoto capacity iteration, mutual information and an exhaustive
//! grid oracle for two-input channels.
//!
//! Each iteration evaluates, for the current input distribution `p`,
//!
//! ```text
//! c_j = exp( Σ_k Q(k|j) ln( Q(k|j) / Σ_i p_i Q(k|i) ) )
//! I_L = ln Σ_j p_j c_j        I_U = ln max_j c_j
//! ```
//!
//! and then moves `p_j ∝ p_j c_j`. The capacity always lies in `[I_L, I_U]`,
//! and the loop stops once `I_U - I_L < ε`. Terms with `Q(k|j) = 0`
//! contribute nothing, and output symbols that no input can produce are
//! dropped up front. Everything is computed in log space.

use crate::channel::{ChannelMatrix, Distribution};
use crate::exec::Execution;
use crate::numeric::{log_sum_exp, sum_terms};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Stop once `I_U - I_L < epsilon` (nats).
    pub epsilon: f64,
    pub max_iterations: usize,
    /// Starting input distribution; uniform when `None`.
    pub initial_input: Option<Distribution>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { epsilon: 1e-4, max_iterations: 1_000_000, initial_input: None }
    }
}

impl SolverConfig {
    pub fn with_epsilon(epsilon: f64) -> Self {
        SolverConfig { epsilon, ..Default::default() }
    }

    fn validate(&self, inputs: usize) -> Result<()> {
        if !(self.epsilon > 0.0) {
            return Err(Error::Domain(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if self.max_iterations == 0 {
            return Err(Error::Domain("max_iterations must be at least 1".into()));
        }
        if let Some(p) = &self.initial_input {
            if p.len() != inputs {
                return Err(Error::DimensionMismatch { expected: inputs, got: p.len() });
            }
            if p.probs().iter().any(|&x| x <= 0.0) {
                return Err(Error::Domain("initial input must be strictly positive".into()));
            }
        }
        Ok(())
    }
}

/// Outcome of [`ba_capacity`]. Bounds are in nats.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    pub capacity_lower: f64,
    pub capacity_upper: f64,
    pub input_dist: Distribution,
    pub iterations: usize,
    pub converged: bool,
}

impl CapacityResult {
    /// The reported capacity, `I_L`.
    pub fn capacity(&self) -> f64 {
        self.capacity_lower
    }

    pub fn capacity_bits(&self) -> f64 {
        self.capacity_lower / std::f64::consts::LN_2
    }

    pub fn gap(&self) -> f64 {
        self.capacity_upper - self.capacity_lower
    }
}

/// Bounds produced by one Blahut-Arimoto iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsStep {
    /// 1-based iteration number.
    pub iteration: usize,
    pub lower: f64,
    pub upper: f64,
    /// Input distribution the bounds were evaluated at.
    pub input: Vec<f64>,
}

/// Stepwise Blahut-Arimoto iteration. Yields the bounds of every iteration
/// forever; [`ba_capacity`] adds the stopping rule.
pub struct BlahutArimoto<'a> {
    channel: &'a ChannelMatrix,
    active: Vec<usize>,
    // ln Q(k|j) on active columns, row-major, -inf where Q = 0.
    log_q: Vec<f64>,
    input: Vec<f64>,
    log_output: Vec<f64>,
    exponents: Vec<f64>,
    weighted: Vec<f64>,
    scratch: Vec<f64>,
    iteration: usize,
}

impl<'a> BlahutArimoto<'a> {
    pub fn new(channel: &'a ChannelMatrix, initial_input: Option<&Distribution>) -> Result<Self> {
        let n = channel.inputs();
        if n < 2 {
            return Err(Error::Domain(format!("channel needs at least 2 inputs, has {n}")));
        }
        let input = match initial_input {
            Some(p) => {
                if p.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: p.len() });
                }
                p.probs().to_vec()
            }
            None => vec![1.0 / n as f64; n],
        };
        let active: Vec<usize> = (0..channel.outputs())
            .filter(|&k| channel.rows().iter().any(|r| r[k] > 0.0))
            .collect();
        let mut log_q = Vec::with_capacity(n * active.len());
        for row in channel.rows() {
            log_q.extend(active.iter().map(|&k| {
                let q = row[k];
                if q > 0.0 {
                    q.ln()
                } else {
                    f64::NEG_INFINITY
                }
            }));
        }
        Ok(BlahutArimoto {
            channel,
            log_output: vec![0.0; active.len()],
            active,
            log_q,
            input,
            exponents: vec![0.0; n],
            weighted: vec![0.0; n],
            scratch: Vec::new(),
            iteration: 0,
        })
    }

    /// Current input distribution.
    pub fn input(&self) -> &[f64] {
        &self.input
    }

    /// Runs one iteration: evaluates `I_L`, `I_U` at the current input and
    /// then applies the multiplicative update.
    pub fn step(&mut self) -> BoundsStep {
        self.iteration += 1;
        let n = self.channel.inputs();
        let m = self.active.len();

        for (slot, &k) in self.log_output.iter_mut().zip(&self.active) {
            let q: f64 = self.channel.rows().iter().zip(&self.input).map(|(r, p)| p * r[k]).sum();
            *slot = q.ln();
        }

        for j in 0..n {
            let row = self.channel.row(j);
            let log_row = &self.log_q[j * m..(j + 1) * m];
            let active = &self.active;
            let log_output = &self.log_output;
            self.exponents[j] = sum_terms(m, &mut self.scratch, |i| {
                let q = row[active[i]];
                if q > 0.0 {
                    q * (log_row[i] - log_output[i])
                } else {
                    0.0
                }
            });
        }

        for j in 0..n {
            self.weighted[j] = if self.input[j] > 0.0 {
                self.input[j].ln() + self.exponents[j]
            } else {
                f64::NEG_INFINITY
            };
        }
        let lower = log_sum_exp(&self.weighted);
        let upper = self.exponents.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let bounds_input = self.input.clone();

        for (p, w) in self.input.iter_mut().zip(&self.weighted) {
            *p = (w - lower).exp();
        }
        let total: f64 = self.input.iter().sum();
        for p in self.input.iter_mut() {
            *p /= total;
        }

        BoundsStep { iteration: self.iteration, lower, upper, input: bounds_input }
    }
}

impl Iterator for BlahutArimoto<'_> {
    type Item = BoundsStep;

    fn next(&mut self) -> Option<BoundsStep> {
        Some(self.step())
    }
}

/// Capacity of `channel` in nats by Blahut-Arimoto.
///
/// Running out of iterations is not an error: the result carries
/// `converged = false` together with the last bounds.
pub fn ba_capacity(channel: &ChannelMatrix, config: &SolverConfig) -> Result<CapacityResult> {
    config.validate(channel.inputs())?;
    let mut solver = BlahutArimoto::new(channel, config.initial_input.as_ref())?;
    let mut last = solver.step();
    loop {
        if last.upper - last.lower < config.epsilon || last.iteration >= config.max_iterations {
            break;
        }
        last = solver.step();
    }
    Ok(CapacityResult {
        capacity_lower: last.lower,
        capacity_upper: last.upper,
        converged: last.upper - last.lower < config.epsilon,
        iterations: last.iteration,
        input_dist: Distribution::from_weights(solver.input())?,
    })
}

/// Solves several channels with the same configuration.
pub fn ba_capacity_batch(
    channels: &[ChannelMatrix],
    config: &SolverConfig,
    exec: Execution,
) -> Vec<Result<CapacityResult>> {
    exec.map_slice(channels, |ch| ba_capacity(ch, config))
}

fn mutual_information_unchecked(channel: &ChannelMatrix, input: &[f64]) -> f64 {
    let mut scratch = Vec::new();
    let outputs: Vec<f64> = (0..channel.outputs())
        .map(|k| channel.rows().iter().zip(input).map(|(r, p)| p * r[k]).sum())
        .collect();
    let total: f64 = channel
        .rows()
        .iter()
        .zip(input)
        .filter(|(_, &p)| p > 0.0)
        .map(|(row, &p)| {
            p * sum_terms(row.len(), &mut scratch, |k| {
                let q = row[k];
                if q > 0.0 {
                    q * (q / outputs[k]).ln()
                } else {
                    0.0
                }
            })
        })
        .sum();
    total.max(0.0)
}

/// `I(X;Y)` in nats for the given input distribution, with `0 ln 0 = 0`.
pub fn mutual_information(channel: &ChannelMatrix, input: &Distribution) -> Result<f64> {
    if input.len() != channel.inputs() {
        return Err(Error::DimensionMismatch { expected: channel.inputs(), got: input.len() });
    }
    Ok(mutual_information_unchecked(channel, input.probs()))
}

/// Brute-force capacity of a two-input channel: the largest mutual
/// information over inputs `(p0, 1 - p0)` with `p0` on a grid of spacing
/// `grid_step` covering `[0, 1]`.
pub fn capacity_oracle_grid(channel: &ChannelMatrix, grid_step: f64) -> Result<f64> {
    capacity_oracle_grid_with(channel, grid_step, Execution::default())
}

pub fn capacity_oracle_grid_with(
    channel: &ChannelMatrix,
    grid_step: f64,
    exec: Execution,
) -> Result<f64> {
    if channel.inputs() != 2 {
        return Err(Error::UnsupportedShape(format!(
            "grid oracle needs 2 inputs, channel has {}",
            channel.inputs()
        )));
    }
    if !(grid_step > 0.0 && grid_step <= 0.01) {
        return Err(Error::Domain(format!("grid step {grid_step} outside (0, 0.01]")));
    }
    let intervals = (1.0 / grid_step).ceil() as usize;
    Ok(exec.max_indices(intervals + 1, |i| {
        let p0 = (i as f64 * grid_step).min(1.0);
        mutual_information_unchecked(channel, &[p0, 1.0 - p0])
    }))
}
