//! Feature-gated map over an index range. With `parallel` the work is
//! spread across the rayon pool; without it the same closure runs
//! sequentially. Results are collected in index order either way, so the
//! output is identical across builds and worker counts.

#[cfg(feature = "parallel")]
pub fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Sequential twin of [`map_indices`], available in every build. The bench
/// suite uses it as the baseline when comparing against the rayon path.
pub fn map_indices_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
