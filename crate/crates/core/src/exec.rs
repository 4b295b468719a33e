//! Data-parallel kernels with a sequential fallback.
//!
//! Every helper has the same signature and the same (deterministic) result
//! under both feature configurations; `parallel` only changes how the work is
//! scheduled. `find_first_map` returns the match with the lowest index, which
//! is what keeps witness selection stable regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U>(n: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<'a, T: Sync, U: Send>(
    items: &'a [T],
    f: impl Fn(&'a T) -> U + Sync + Send,
) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<'a, T, U>(items: &'a [T], f: impl Fn(&'a T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// First `Some` produced over `0..n`, scanning in index order.
#[cfg(feature = "parallel")]
pub(crate) fn find_first_map<U: Send>(
    n: usize,
    f: impl Fn(usize) -> Option<U> + Sync + Send,
) -> Option<U> {
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first_map<U>(n: usize, f: impl Fn(usize) -> Option<U>) -> Option<U> {
    (0..n).find_map(f)
}

/// Indices in `0..n` satisfying the predicate, in ascending order.
#[cfg(feature = "parallel")]
pub(crate) fn filter_range(n: usize, f: impl Fn(usize) -> bool + Sync + Send) -> Vec<usize> {
    (0..n).into_par_iter().filter(|&i| f(i)).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_range(n: usize, f: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..n).filter(|&i| f(i)).collect()
}
