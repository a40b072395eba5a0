//! Probability vectors, row-stochastic transition matrices and the channel
//! families used throughout the crate.

use crate::walsh::{inverse_walsh_hadamard, WalshSpectrum};
use crate::{Error, Result, PROB_TOLERANCE};

/// A probability vector over a finite alphabet.
///
/// Entries in `(-1e-12, 0)` are clamped to zero on construction; anything
/// more negative, or a total mass further than `1e-12` from one, is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(mut probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidAlphabet("empty alphabet".into()));
        }
        for (i, p) in probs.iter_mut().enumerate() {
            if !p.is_finite() {
                return Err(Error::Domain(format!("probability {i} is not finite")));
            }
            if *p < 0.0 {
                if *p > -PROB_TOLERANCE {
                    *p = 0.0;
                } else {
                    return Err(Error::Domain(format!("probability {i} is negative: {p}")));
                }
            }
        }
        let total = crate::numeric::sum(&probs);
        if (total - 1.0).abs() > PROB_TOLERANCE {
            return Err(Error::Domain(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Distribution { probs })
    }

    /// Builds a distribution by scaling nonnegative weights to unit mass.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::Domain("weights must be finite and nonnegative".into()));
        }
        let total = crate::numeric::sum(weights);
        if total <= 0.0 {
            return Err(Error::Domain("weights have zero total mass".into()));
        }
        Distribution::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidAlphabet("empty alphabet".into()));
        }
        Ok(Distribution { probs: vec![1.0 / size as f64; size] })
    }

    pub fn point_mass(size: usize, at: usize) -> Result<Self> {
        if at >= size {
            return Err(Error::Domain(format!("point {at} outside alphabet of size {size}")));
        }
        let mut probs = vec![0.0; size];
        probs[at] = 1.0;
        Ok(Distribution { probs })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.probs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    #[inline]
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// True when every entry is within `tol` of `1 / len`.
    pub fn is_uniform(&self, tol: f64) -> bool {
        let u = 1.0 / self.len() as f64;
        self.probs.iter().all(|p| (p - u).abs() <= tol)
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probs
    }
}

impl std::ops::Index<usize> for Distribution {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.probs[i]
    }
}

/// Row-stochastic N×M transition matrix; row `j` holds `Q(k | j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix {
    rows: Vec<Distribution>,
}

impl ChannelMatrix {
    pub fn new(rows: Vec<Distribution>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::UnsupportedShape("channel has no input symbols".into()))?
            .len();
        if let Some(bad) = rows.iter().find(|r| r.len() != first) {
            return Err(Error::DimensionMismatch { expected: first, got: bad.len() });
        }
        Ok(ChannelMatrix { rows })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        ChannelMatrix::new(rows.into_iter().map(Distribution::new).collect::<Result<_>>()?)
    }

    /// Number of input symbols.
    #[inline]
    pub fn inputs(&self) -> usize {
        self.rows.len()
    }

    /// Number of output symbols.
    #[inline]
    pub fn outputs(&self) -> usize {
        self.rows[0].len()
    }

    #[inline]
    pub fn rows(&self) -> &[Distribution] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, j: usize) -> &Distribution {
        &self.rows[j]
    }

    /// `Q(k | j)`.
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.rows[j].probs[k]
    }

    /// Applies the same output-symbol permutation to every row:
    /// new column `i` is old column `perm[i]`.
    pub fn permute_outputs(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.outputs() {
            return Err(Error::DimensionMismatch { expected: self.outputs(), got: perm.len() });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("not a permutation".into()));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| Distribution { probs: perm.iter().map(|&p| r.probs[p]).collect() })
            .collect();
        Ok(ChannelMatrix { rows })
    }
}

fn check_bias(d: f64) -> Result<()> {
    if (0.0..=1.0).contains(&d) {
        Ok(())
    } else {
        Err(Error::Domain(format!("bias d = {d} outside [0, 1]")))
    }
}

/// Crossover probability `p = (1 - d) / 2`.
#[inline]
pub fn crossover(d: f64) -> f64 {
    (1.0 - d) / 2.0
}

/// Binary symmetric channel with rows `(1-p, p)` and `(p, 1-p)`.
pub fn make_bsc(d: f64) -> Result<ChannelMatrix> {
    check_bias(d)?;
    let p = crossover(d);
    ChannelMatrix::from_rows(vec![vec![1.0 - p, p], vec![p, 1.0 - p]])
}

/// Non-symmetric binary channel: a biased row `(1-p, p)` against a fair
/// coin `(1/2, 1/2)`.
pub fn make_nonsymmetric_binary(d: f64) -> Result<ChannelMatrix> {
    check_bias(d)?;
    let p = crossover(d);
    ChannelMatrix::from_rows(vec![vec![1.0 - p, p], vec![0.5, 0.5]])
}

/// Sign attached to a non-trivial Walsh coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, d: f64) -> f64 {
        match self {
            Sign::Plus => d,
            Sign::Minus => -d,
        }
    }
}

/// 2×2ⁿ channel whose row 0 has exactly `k` non-trivial Walsh coefficients
/// equal to `d` and whose row 1 is uniform.
///
/// Without explicit `masks` the coefficients sit on masks `1, 2, …, k`.
/// Capacity can depend on whether the chosen masks are linearly
/// independent over GF(2), so pass masks explicitly when that matters.
pub fn make_wht_sparse_channel(
    n: u32,
    k: usize,
    d: f64,
    masks: Option<&[usize]>,
) -> Result<ChannelMatrix> {
    let masks: Vec<usize> = match masks {
        Some(m) => {
            if m.len() != k {
                return Err(Error::Domain(format!("expected {k} masks, got {}", m.len())));
            }
            m.to_vec()
        }
        None => (1..=k).collect(),
    };
    let terms: Vec<(usize, Sign)> = masks.into_iter().map(|m| (m, Sign::Plus)).collect();
    make_signed_wht_sparse_channel(n, d, &terms)
}

/// Like [`make_wht_sparse_channel`] but with a sign per mask, so row 0 has
/// coefficient `±d` at each listed mask.
pub fn make_signed_wht_sparse_channel(
    n: u32,
    d: f64,
    terms: &[(usize, Sign)],
) -> Result<ChannelMatrix> {
    if n == 0 || n >= usize::BITS {
        return Err(Error::Domain(format!("bit dimension n = {n} out of range")));
    }
    let size = 1usize << n;
    let k = terms.len();
    if k == 0 || k > size - 1 {
        return Err(Error::Domain(format!("sparsity k = {k} outside [1, {}]", size - 1)));
    }
    if !d.is_finite() || d < 0.0 {
        return Err(Error::Domain(format!("coefficient d = {d} must be nonnegative")));
    }
    let mut coeffs = vec![0.0; size];
    coeffs[0] = 1.0;
    for &(mask, sign) in terms {
        if mask == 0 || mask >= size {
            return Err(Error::Domain(format!("mask {mask} must be in [1, {}]", size - 1)));
        }
        if coeffs[mask] != 0.0 {
            return Err(Error::Domain(format!("mask {mask} listed twice")));
        }
        coeffs[mask] = sign.apply(d);
    }
    // k·d ≤ 1 guarantees every probability is nonnegative whatever the masks.
    if k as f64 * d > 1.0 + PROB_TOLERANCE {
        return Err(Error::InvalidSpectrum(format!(
            "k·d = {} exceeds 1 (k = {k}, d = {d})",
            k as f64 * d
        )));
    }
    let biased = inverse_walsh_hadamard(&WalshSpectrum::new(coeffs)?)?;
    ChannelMatrix::new(vec![biased, Distribution::uniform(size)?])
}
