//! Execution strategy for the data-parallel kernels.
//!
//! Heavy enumeration loops (exhaustive tensor generation, brute-force
//! derivation oracles, exhaustive almost-inner intersections) are map-reduce
//! shaped with canonical, order-independent results, so they can run on a
//! rayon pool or sequentially with byte-identical output. The `parallel`
//! cargo feature gates the rayon dependency; [`Exec::Sequential`] forces the
//! fallback at runtime, which is what the benchmark suite compares.

/// Execution strategy accepted by enumeration-heavy entry points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// Use the rayon pool when the crate is built with the `parallel`
    /// feature and the work is large enough to amortize the fan-out.
    #[default]
    Auto,
    /// Always run single-threaded.
    Sequential,
}

/// Work-size threshold below which fan-out costs more than it saves.
const PAR_THRESHOLD: u64 = 512;

pub(crate) fn use_parallel(exec: Exec, work_items: u64) -> bool {
    match exec {
        Exec::Sequential => false,
        Exec::Auto => cfg!(feature = "parallel") && work_items >= PAR_THRESHOLD,
    }
}

/// Order-preserving `filter_map` over an index range.
pub(crate) fn filter_map_indices<T, F>(exec: Exec, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if use_parallel(exec, n) {
            use rayon::prelude::*;
            return (0..n).into_par_iter().filter_map(&f).collect();
        }
    }
    let _ = exec;
    (0..n).filter_map(f).collect()
}

/// Splits `0..n` into chunks, maps each chunk and reduces the results.
/// `reduce` must be associative and `identity()` its neutral element; all
/// uses here reduce with canonical-form operations (subspace intersection,
/// span union), so the result is independent of reduction order.
pub(crate) fn map_reduce_chunks<S, M, I, R>(
    exec: Exec,
    n: u64,
    chunk_size: u64,
    map: M,
    identity: I,
    reduce: R,
) -> S
where
    S: Send,
    M: Fn(std::ops::Range<u64>) -> S + Sync + Send,
    I: Fn() -> S + Sync + Send,
    R: Fn(S, S) -> S + Sync + Send,
{
    let chunk_size = chunk_size.max(1);
    let ranges: Vec<std::ops::Range<u64>> = (0..n)
        .step_by(chunk_size as usize)
        .map(|start| start..(start + chunk_size).min(n))
        .collect();
    #[cfg(feature = "parallel")]
    {
        if use_parallel(exec, n) {
            use rayon::prelude::*;
            return ranges
                .into_par_iter()
                .map(map)
                .reduce(&identity, &reduce);
        }
    }
    let _ = exec;
    ranges.into_iter().map(map).fold(identity(), reduce)
}
