//! Closed-form capacities, capacity estimates, entropies and divergences.
//!
//! Units: [`binary_entropy`] and [`entropy_quadratic_approx`] return bits.
//! Everything else returns nats.

use std::f64::consts::LN_2;

use crate::ba::{ba_capacity, SolverConfig};
use crate::channel::{crossover, ChannelMatrix, Distribution};
use crate::numeric::{sum, xlogx};
use crate::walsh::walsh_hadamard_transform;
use crate::{Error, Result};

fn check_unit(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {x} outside [0, 1]")))
    }
}

/// `H(p) = -p log₂ p - (1-p) log₂ (1-p)`, in bits.
pub fn binary_entropy(p: f64) -> Result<f64> {
    check_unit("p", p)?;
    Ok(-(xlogx(p) + xlogx(1.0 - p)) / LN_2)
}

/// Exact BSC capacity `ln 2 + p ln p + (1-p) ln(1-p)` with `p = (1-d)/2`.
pub fn bsc_capacity_exact(d: f64) -> Result<f64> {
    check_unit("d", d)?;
    let p = crossover(d);
    Ok((LN_2 + xlogx(p) + xlogx(1.0 - p)).max(0.0))
}

/// `d² / (2 ln 2)`.
pub fn bsc_capacity_estimate(d: f64) -> Result<f64> {
    check_unit("d", d)?;
    Ok(d * d / (2.0 * LN_2))
}

/// `d² / (8 ln 2)`, the small-bias estimate for the non-symmetric binary
/// channel.
pub fn nonsym_capacity_estimate(d: f64) -> Result<f64> {
    check_unit("d", d)?;
    Ok(d * d / (8.0 * LN_2))
}

/// `k·d² / (8 ln 2)` for a row with `k` Walsh coefficients of size `d`
/// against a uniform row.
pub fn crypto_estimate(k: usize, d: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("sparsity k must be at least 1".into()));
    }
    if !(d >= 0.0) || k as f64 * d > 1.0 + crate::PROB_TOLERANCE {
        return Err(Error::Domain(format!("need 0 <= d and k·d <= 1 (k = {k}, d = {d})")));
    }
    Ok(k as f64 * d * d / (8.0 * LN_2))
}

/// Spectral form of the crypto estimate for any two-row channel:
/// `M·Σ_b (Q0(b) - Q1(b))² / (8 ln 2)`, which by Parseval equals the sum of
/// squared Walsh-coefficient differences over `8 ln 2`.
pub fn spectral_estimate(channel: &ChannelMatrix) -> Result<f64> {
    two_rows(channel)?;
    let m = channel.outputs();
    let (a, b) = (channel.row(0).probs(), channel.row(1).probs());
    let sq: Vec<f64> = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).collect();
    Ok(m as f64 * sum(&sq) / (8.0 * LN_2))
}

/// Mutual information of the non-symmetric binary channel at input
/// `P(X=0) = p0`, via `H((1 + p0 d)/2) - p0 (H((1-d)/2) - 1) - 1` in bits,
/// returned in nats.
pub fn nonsym_mutual_information_closed(p0: f64, d: f64) -> Result<f64> {
    check_unit("p0", p0)?;
    check_unit("d", d)?;
    let bits = binary_entropy((1.0 + p0 * d) / 2.0)?
        - p0 * (binary_entropy((1.0 - d) / 2.0)? - 1.0)
        - 1.0;
    Ok((bits * LN_2).max(0.0))
}

/// Grid maximum of [`nonsym_mutual_information_closed`] over `p0`.
/// Returns `(argmax p0, max value in nats)`.
pub fn maximize_nonsym_closed(d: f64, grid_step: f64) -> Result<(f64, f64)> {
    if !(grid_step > 0.0 && grid_step <= 1.0) {
        return Err(Error::Domain(format!("grid step {grid_step} outside (0, 1]")));
    }
    let intervals = (1.0 / grid_step).ceil() as usize;
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..=intervals {
        let p0 = (i as f64 * grid_step).min(1.0);
        let v = nonsym_mutual_information_closed(p0, d)?;
        if v > best.1 {
            best = (p0, v);
        }
    }
    Ok(best)
}

/// `1 - d² / (2 ln 2)`, the quadratic expansion of `H((1+d)/2)` in bits.
pub fn entropy_quadratic_approx(d: f64) -> Result<f64> {
    if !(d.abs() <= 1.0) {
        return Err(Error::Domain(format!("|d| = {} exceeds 1", d.abs())));
    }
    Ok(1.0 - d * d / (2.0 * LN_2))
}

fn same_len(p: &Distribution, q: &Distribution) -> Result<()> {
    if p.len() == q.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: p.len(), got: q.len() })
    }
}

/// Rényi divergence of order `alpha` in nats:
/// `ln(Σ P^α Q^{1-α}) / (α - 1)`, using `0^a = 0` for `a > 0`.
///
/// Returns `+inf` when `alpha > 1` and `P` puts mass where `Q` has none, or
/// when the supports are disjoint.
pub fn renyi_divergence(p: &Distribution, q: &Distribution, alpha: f64) -> Result<f64> {
    same_len(p, q)?;
    if !(alpha > 0.0) || alpha == 1.0 || !alpha.is_finite() {
        return Err(Error::Domain(format!("order alpha = {alpha} must be positive, finite and != 1")));
    }
    let mut terms = Vec::with_capacity(p.len());
    for (&a, &b) in p.probs().iter().zip(q.probs()) {
        if a == 0.0 {
            continue;
        }
        if b == 0.0 {
            if alpha > 1.0 {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        terms.push(if alpha == 0.5 { (a * b).sqrt() } else { a.powf(alpha) * b.powf(1.0 - alpha) });
    }
    let s = sum(&terms);
    if s <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((s.ln() / (alpha - 1.0)).max(0.0))
}

/// `D_{1/2}(P‖Q) = -2 ln Σ √(P Q)`.
pub fn renyi_half(p: &Distribution, q: &Distribution) -> Result<f64> {
    renyi_divergence(p, q, 0.5)
}

/// Kullback-Leibler divergence in nats; `+inf` if `Q` misses part of the
/// support of `P`.
pub fn kl_divergence(p: &Distribution, q: &Distribution) -> Result<f64> {
    same_len(p, q)?;
    let mut terms = Vec::with_capacity(p.len());
    for (&a, &b) in p.probs().iter().zip(q.probs()) {
        if a == 0.0 {
            continue;
        }
        if b == 0.0 {
            return Ok(f64::INFINITY);
        }
        terms.push(a * (a / b).ln());
    }
    Ok(sum(&terms).max(0.0))
}

fn two_rows(channel: &ChannelMatrix) -> Result<()> {
    if channel.inputs() == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedShape(format!("expected 2 inputs, got {}", channel.inputs())))
    }
}

/// One row of a capacity-versus-estimates comparison. All values in nats.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateComparison {
    /// Largest non-trivial Walsh coefficient of row 0 in absolute value.
    pub d: f64,
    pub ba_capacity: f64,
    /// Exact capacity for a BSC, otherwise the spectral estimate.
    pub closed_form_or_estimate: f64,
    pub renyi_half_over_two: f64,
    pub crypto_estimate: f64,
}

/// Puts the Blahut-Arimoto capacity of a two-row, 2ⁿ-column channel next to
/// `D_{1/2}(row0‖row1) / 2` and the closed-form figures.
pub fn conjecture_gap(channel: &ChannelMatrix, epsilon: f64) -> Result<EstimateComparison> {
    two_rows(channel)?;
    let spectrum = walsh_hadamard_transform(channel.row(0))?;
    let d = spectrum.coeffs()[1..].iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    let ba = ba_capacity(channel, &SolverConfig::with_epsilon(epsilon))?;
    let crypto = spectral_estimate(channel)?;
    let closed_form_or_estimate = if is_bsc(channel) { bsc_capacity_exact(d)? } else { crypto };
    Ok(EstimateComparison {
        d,
        ba_capacity: ba.capacity(),
        closed_form_or_estimate,
        renyi_half_over_two: renyi_half(channel.row(0), channel.row(1))? / 2.0,
        crypto_estimate: crypto,
    })
}

fn is_bsc(channel: &ChannelMatrix) -> bool {
    channel.outputs() == 2 && channel.get(0, 0) == channel.get(1, 1) && channel.get(0, 1) == channel.get(1, 0)
}
