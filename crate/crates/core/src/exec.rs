//! Execution strategy for the data-parallel parts of the engine.
//!
//! Every parallel operation here preserves input order, and sums are split
//! into fixed chunks whose partial results are added in order, so the output
//! does not depend on the strategy or the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Plain iteration on the calling thread.
    Sequential,
    /// rayon's global pool; identical to `Sequential` without the
    /// `parallel` feature.
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Σ_{i<n} f(i), summed in chunks of `chunk` whose partial sums are
    /// combined left to right.
    pub fn sum<F>(self, n: usize, chunk: usize, f: F) -> f64
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        let chunk = chunk.max(1);
        let starts: Vec<usize> = (0..n).step_by(chunk).collect();
        let partial = self.map(&starts, |&s| (s..(s + chunk).min(n)).map(&f).sum::<f64>());
        partial.iter().sum()
    }
}

/// Runs `op` inside a rayon pool with `threads` workers (ignored without the
/// `parallel` feature).
pub fn with_threads<R: Send>(threads: usize, op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if threads > 0 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                return pool.install(op);
            }
        }
        op()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        op()
    }
}
