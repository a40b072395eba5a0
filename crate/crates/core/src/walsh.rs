//! Fast Walsh-Hadamard transform over n-bit strings.
//!
//! The coefficient of a distribution `D` at mask `m` is
//! `Σ_b D(b)·(-1)^popcount(m & b)`. Mask 0 always carries the trivial
//! coefficient 1.

use crate::channel::Distribution;
use crate::{Error, Result, PROB_TOLERANCE};

/// Walsh-Hadamard coefficients indexed by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct WalshSpectrum {
    coeffs: Vec<f64>,
}

impl WalshSpectrum {
    /// Wraps raw coefficients. The length must be a power of two and the
    /// mask-0 coefficient must be 1 (within `1e-12`).
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        bit_dimension(coeffs.len())?;
        if (coeffs[0] - 1.0).abs() > PROB_TOLERANCE {
            return Err(Error::InvalidSpectrum(format!(
                "trivial coefficient is {}, expected 1",
                coeffs[0]
            )));
        }
        Ok(WalshSpectrum { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of bits `n` with `len = 2ⁿ`.
    pub fn bits(&self) -> u32 {
        self.coeffs.len().trailing_zeros()
    }

    /// Non-trivial masks whose coefficient exceeds `threshold` in absolute
    /// value.
    pub fn support(&self, threshold: f64) -> Vec<usize> {
        (1..self.coeffs.len()).filter(|&m| self.coeffs[m].abs() > threshold).collect()
    }
}

fn bit_dimension(len: usize) -> Result<u32> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::InvalidAlphabet(format!("length {len} is not a power of two")));
    }
    Ok(len.trailing_zeros())
}

/// Unnormalised in-place butterfly: `data[m] ← Σ_b data[b]·(-1)^⟨m,b⟩`.
/// Applying it twice multiplies by `data.len()`.
///
/// # Panics
/// If `data.len()` is not a power of two.
pub fn fwht_in_place(data: &mut [f64]) {
    assert!(data.len().is_power_of_two(), "FWHT length must be a power of two");
    let len = data.len();
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

pub fn walsh_hadamard_transform(dist: &Distribution) -> Result<WalshSpectrum> {
    bit_dimension(dist.len())?;
    let mut coeffs = dist.probs().to_vec();
    fwht_in_place(&mut coeffs);
    coeffs[0] = 1.0;
    for c in coeffs.iter_mut().skip(1) {
        *c = c.clamp(-1.0, 1.0);
    }
    Ok(WalshSpectrum { coeffs })
}

/// Recovers the distribution with the given spectrum. Fails with
/// [`Error::InvalidSpectrum`] when some probability would be below `-1e-12`.
pub fn inverse_walsh_hadamard(spec: &WalshSpectrum) -> Result<Distribution> {
    let mut probs = spec.coeffs.clone();
    fwht_in_place(&mut probs);
    let scale = 1.0 / probs.len() as f64;
    for p in probs.iter_mut() {
        *p *= scale;
    }
    if let Some((b, p)) = probs.iter().enumerate().find(|(_, p)| **p < -PROB_TOLERANCE) {
        return Err(Error::InvalidSpectrum(format!(
            "spectrum implies negative probability {p} at point {b}"
        )));
    }
    Distribution::new(probs).map_err(|e| Error::InvalidSpectrum(e.to_string()))
}
