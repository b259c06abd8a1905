//! Execution strategy for the batch verification sweeps.
//!
//! The verification workloads are embarrassingly parallel: identity suites
//! over independent spinors, curvature checks over spanning sets, spectrum
//! scans over weights. With the `parallel` feature (default) [`map_collect`]
//! fans out over rayon; without it the same call runs sequentially.
//! [`map_collect_seq`] is always available so benchmarks can compare the two
//! paths in one binary. Results are order-preserving either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Sequential reference path, independent of feature flags.
pub fn map_collect_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
