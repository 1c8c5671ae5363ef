//! Case-sweep execution. With the `parallel` feature the sweep helpers fan
//! out over rayon's global pool; otherwise they degrade to plain iteration.
//! Results are collected in input order either way, so sweep output is
//! deterministic regardless of the backend.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, collecting results in input order.
#[cfg(feature = "parallel")]
pub fn map_cases<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Applies `f` to every item, collecting results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_cases<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Keeps the indices in `0..n` satisfying `pred`, in ascending order.
#[cfg(feature = "parallel")]
pub fn filter_range<F>(n: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    (0..n).into_par_iter().filter(|&i| pred(i)).collect()
}

/// Keeps the indices in `0..n` satisfying `pred`, in ascending order.
#[cfg(not(feature = "parallel"))]
pub fn filter_range<F>(n: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool,
{
    (0..n).filter(|&i| pred(i)).collect()
}

/// Tests whether `pred` holds for every index in `0..n`.
#[cfg(feature = "parallel")]
pub fn all_range<F>(n: u64, pred: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    (0..n).into_par_iter().all(|i| pred(i))
}

/// Tests whether `pred` holds for every index in `0..n`.
#[cfg(not(feature = "parallel"))]
pub fn all_range<F>(n: u64, pred: F) -> bool
where
    F: Fn(u64) -> bool,
{
    (0..n).all(pred)
}
