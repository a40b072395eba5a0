//! Sequential or rayon-backed execution of independent work items.
//!
//! Results always come back in input order, so callers get the same output
//! whichever strategy runs.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Maps `f` over `0..len`, preserving index order.
    pub fn map_indices<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
        }
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Counts indices in `0..len` for which `pred` holds.
    pub fn count_indices<F>(self, len: usize, pred: F) -> usize
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).filter(|&i| pred(i)).count(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().filter(|&i| pred(i)).count(),
        }
    }

    /// Largest `f(i)` over `0..len` (`-inf` when empty). Ties and ordering
    /// do not affect the result because `max` is exact.
    pub fn max_indices<F>(self, len: usize, f: F) -> f64
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).map(f).fold(f64::NEG_INFINITY, f64::max),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                (0..len).into_par_iter().map(f).reduce(|| f64::NEG_INFINITY, f64::max)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<Execution> {
        vec![
            Execution::Sequential,
            #[cfg(feature = "parallel")]
            Execution::Parallel,
        ]
    }

    #[test]
    fn strategies_agree() {
        for exec in all() {
            assert_eq!(exec.map_indices(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(exec.map_slice(&[3, 1, 2], |x| x + 1), vec![4, 2, 3]);
            assert_eq!(exec.count_indices(100, |i| i % 3 == 0), 34);
            assert_eq!(exec.max_indices(10, |i| -((i as f64) - 4.0).abs()), 0.0);
            assert_eq!(exec.max_indices(0, |i| i as f64), f64::NEG_INFINITY);
        }
    }
}
