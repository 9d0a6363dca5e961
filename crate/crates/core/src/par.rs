//! Data-parallel sweep helpers.
//!
//! With the `parallel` feature the sweeps run on the current rayon pool
//! (wrap a call in `ThreadPool::install` to control the thread count);
//! without it they fall back to plain iterators. Results are identical
//! either way: searches always report the smallest failing index.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest `n` in `range` for which `fails(n)` holds.
pub fn first_failure<F>(range: Range<u64>, fails: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().find_first(|&n| fails(n))
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().find(|&n| fails(n))
    }
}

/// Same as [`first_failure`], always sequential.
pub fn first_failure_seq<F>(range: Range<u64>, fails: F) -> Option<u64>
where
    F: Fn(u64) -> bool,
{
    range.into_iter().find(|&n| fails(n))
}

/// `f` applied to every index, results in index order.
pub fn map_collect<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().map(f).collect()
    }
}

/// Number of indices satisfying `pred`.
pub fn count<F>(range: Range<u64>, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().filter(|&n| pred(n)).count() as u64
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().filter(|&n| pred(n)).count() as u64
    }
}

/// Runs two closures, potentially in parallel.
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    {
        rayon::join(a, b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (a(), b())
    }
}

pub fn current_num_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_leftmost() {
        let hit = first_failure(0..100_000, |n| n % 7919 == 7918 || n == 50_000);
        assert_eq!(hit, Some(7918));
        assert_eq!(first_failure_seq(0..100_000, |n| n == 50_000), Some(50_000));
        assert_eq!(first_failure(0..10, |_| false), None);
    }

    #[test]
    fn map_keeps_order() {
        let v = map_collect(0..1000, |n| n * n);
        assert!(v.iter().enumerate().all(|(i, &x)| x == (i * i) as u64));
        assert_eq!(count(0..1000, |n| n % 3 == 0), 334);
    }
}
