//! Log-likelihood-ratio distinguisher between a biased distribution `D_A`
//! and the uniform distribution `D_0`, and a Monte-Carlo harness for its
//! error rates.
//!
//! Randomness comes from ChaCha8. Every experiment gets its own stream
//! derived from `(seed, trial, source)`, so results do not depend on how
//! trials are scheduled across threads.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::{ChannelMatrix, Distribution};
use crate::exec::Execution;
use crate::{Error, Result, PROB_TOLERANCE};

/// Identity of the generator behind every report.
pub const RNG_ALGORITHM: &str =
    "ChaCha8Rng (rand_chacha 0.3); seed_from_u64(seed); stream 2*trial for D_A, 2*trial+1 for D_0";

/// Occurrence counts `u[b]` of each symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCounts {
    counts: Vec<u64>,
    total: u64,
}

impl SampleCounts {
    pub fn new(counts: Vec<u64>) -> Self {
        let total = counts.iter().sum();
        SampleCounts { counts, total }
    }

    pub fn zeros(size: usize) -> Self {
        SampleCounts { counts: vec![0; size], total: 0 }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn increment(&mut self, b: usize) {
        self.counts[b] += 1;
        self.total += 1;
    }
}

/// Inverse-CDF sampler over a fixed distribution.
#[derive(Debug, Clone)]
pub struct Sampler {
    cdf: Vec<f64>,
    last_positive: usize,
}

impl Sampler {
    pub fn new(dist: &Distribution) -> Self {
        let mut acc = 0.0;
        let cdf = dist
            .probs()
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        let last_positive = dist.probs().iter().rposition(|&p| p > 0.0).unwrap_or(0);
        Sampler { cdf, last_positive }
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        // First cell whose cumulative mass exceeds u; zero-width cells are
        // never selected. Rounding in the tail falls back to the last cell
        // with positive mass.
        self.cdf.partition_point(|&c| c <= u).min(self.last_positive)
    }

    pub fn counts<R: Rng + ?Sized>(&self, n_samples: u64, rng: &mut R) -> SampleCounts {
        let mut counts = SampleCounts::zeros(self.cdf.len());
        for _ in 0..n_samples {
            counts.increment(self.sample(rng));
        }
        counts
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Counts from `n_samples` i.i.d. draws of `dist`, reproducible from `seed`.
pub fn draw_samples(dist: &Distribution, n_samples: u64, rng_seed: u64) -> SampleCounts {
    Sampler::new(dist).counts(n_samples, &mut stream_rng(rng_seed, 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// Accept `D_A` as the source.
    Biased,
    /// Accept `D_0` as the source.
    Uniform,
}

/// Precomputed per-symbol weights `ln(D_A(b) / D_0(b))`.
#[derive(Debug, Clone)]
pub struct LlrTest {
    weights: Vec<f64>,
}

impl LlrTest {
    pub fn new(biased: &Distribution, reference: &Distribution) -> Result<Self> {
        if biased.len() != reference.len() {
            return Err(Error::DimensionMismatch { expected: reference.len(), got: biased.len() });
        }
        if reference.probs().iter().any(|&p| p <= 0.0) {
            return Err(Error::Domain("reference distribution D_0 must be strictly positive".into()));
        }
        let weights = biased
            .probs()
            .iter()
            .zip(reference.probs())
            .map(|(&a, &z)| if a > 0.0 { (a / z).ln() } else { f64::NEG_INFINITY })
            .collect();
        Ok(LlrTest { weights })
    }

    /// `Σ_b u[b]·ln(D_A(b)/D_0(b))`; `-inf` if a symbol impossible under
    /// `D_A` was observed.
    pub fn statistic(&self, counts: &SampleCounts) -> f64 {
        self.weights
            .iter()
            .zip(counts.counts())
            .filter(|(_, &u)| u > 0)
            .map(|(w, &u)| u as f64 * w)
            .sum()
    }

    /// `Biased` iff the statistic is strictly positive.
    pub fn decide(&self, counts: &SampleCounts) -> Decision {
        if self.statistic(counts) > 0.0 {
            Decision::Biased
        } else {
            Decision::Uniform
        }
    }
}

pub fn llr_decide(
    counts: &SampleCounts,
    biased: &Distribution,
    reference: &Distribution,
) -> Result<Decision> {
    if counts.counts().len() != biased.len() {
        return Err(Error::DimensionMismatch { expected: biased.len(), got: counts.counts().len() });
    }
    Ok(LlrTest::new(biased, reference)?.decide(counts))
}

/// Empirical error rates of the LLR distinguisher.
#[derive(Debug, Clone, PartialEq)]
pub struct DistinguisherReport {
    pub sample_count: u64,
    pub trials: u64,
    /// Fraction of `D_0` experiments that decided `Biased`.
    pub false_accept_biased: f64,
    /// Fraction of `D_A` experiments that decided `Uniform`.
    pub false_accept_uniform: f64,
    pub biased_errors: u64,
    pub uniform_errors: u64,
    pub seed: u64,
    pub rng: &'static str,
}

impl DistinguisherReport {
    pub fn error_sum(&self) -> f64 {
        self.false_accept_biased + self.false_accept_uniform
    }
}

pub fn estimate_error_rates(
    channel: &ChannelMatrix,
    n_samples: u64,
    trials: u64,
    rng_seed: u64,
) -> Result<DistinguisherReport> {
    estimate_error_rates_with(channel, n_samples, trials, rng_seed, Execution::default())
}

/// Runs `trials` experiments with source `D_A` (row 0) and `trials` with
/// source `D_0` (row 1, which must be uniform).
pub fn estimate_error_rates_with(
    channel: &ChannelMatrix,
    n_samples: u64,
    trials: u64,
    rng_seed: u64,
    exec: Execution,
) -> Result<DistinguisherReport> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if channel.inputs() != 2 {
        return Err(Error::UnsupportedShape(format!(
            "distinguisher needs 2 rows, channel has {}",
            channel.inputs()
        )));
    }
    let (biased, reference) = (channel.row(0), channel.row(1));
    if !reference.is_uniform(PROB_TOLERANCE) {
        return Err(Error::Domain("row 1 of the channel must be uniform".into()));
    }
    let test = LlrTest::new(biased, reference)?;
    let sources = [Sampler::new(biased), Sampler::new(reference)];

    let run = |trial: u64, source: usize| -> Decision {
        let mut rng = stream_rng(rng_seed, 2 * trial + source as u64);
        test.decide(&sources[source].counts(n_samples, &mut rng))
    };
    let trials_usize = usize::try_from(trials)
        .map_err(|_| Error::Domain(format!("trials = {trials} too large")))?;
    let uniform_errors =
        exec.count_indices(trials_usize, |t| run(t as u64, 0) == Decision::Uniform) as u64;
    let biased_errors =
        exec.count_indices(trials_usize, |t| run(t as u64, 1) == Decision::Biased) as u64;

    Ok(DistinguisherReport {
        sample_count: n_samples,
        trials,
        false_accept_biased: biased_errors as f64 / trials as f64,
        false_accept_uniform: uniform_errors as f64 / trials as f64,
        biased_errors,
        uniform_errors,
        seed: rng_seed,
        rng: RNG_ALGORITHM,
    })
}

/// Smallest sample count at which both error rates fall strictly below
/// `target`, found by doubling and then bisection. Assumes the error rates
/// decrease with the sample count. `None` if `max_samples` is not enough.
pub fn min_samples_for_error(
    channel: &ChannelMatrix,
    target: f64,
    trials: u64,
    rng_seed: u64,
    max_samples: u64,
    exec: Execution,
) -> Result<Option<u64>> {
    let ok = |n: u64| -> Result<bool> {
        let r = estimate_error_rates_with(channel, n, trials, rng_seed, exec)?;
        Ok(r.false_accept_biased < target && r.false_accept_uniform < target)
    };
    let mut hi = 1u64;
    while !ok(hi)? {
        if hi >= max_samples {
            return Ok(None);
        }
        hi = (hi * 2).min(max_samples);
    }
    let mut lo = hi / 2;
    if lo == 0 {
        return Ok(Some(hi));
    }
    // Invariant: ok(hi) and !ok(lo).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}
