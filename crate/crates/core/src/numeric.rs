//! Summation and entropy primitives shared by the solver and the analytic
//! formulas.

/// Slices at least this long are summed pairwise.
pub const PAIRWISE_THRESHOLD: usize = 1024;

const PAIRWISE_BLOCK: usize = 128;

/// Sums `xs`, switching to pairwise summation for long inputs so rounding
/// error grows as O(log n) instead of O(n).
pub fn sum(xs: &[f64]) -> f64 {
    if xs.len() < PAIRWISE_THRESHOLD {
        xs.iter().sum()
    } else {
        pairwise_sum(xs)
    }
}

/// Recursive pairwise summation with a naive base case.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Sums `f(0), …, f(len - 1)`. For long ranges the terms are buffered in
/// `scratch` and summed pairwise.
pub fn sum_terms<F>(len: usize, scratch: &mut Vec<f64>, f: F) -> f64
where
    F: Fn(usize) -> f64,
{
    if len < PAIRWISE_THRESHOLD {
        (0..len).map(f).sum()
    } else {
        scratch.clear();
        scratch.extend((0..len).map(f));
        pairwise_sum(scratch)
    }
}

/// `x ln x` with the continuous extension `0 ln 0 = 0`.
#[inline]
pub fn xlogx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// `ln Σ exp(v)` evaluated around the maximum. Returns `-inf` for an empty
/// slice or when every entry is `-inf`.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let shifted: f64 = values.iter().map(|v| (v - max).exp()).sum();
    max + shifted.ln()
}
