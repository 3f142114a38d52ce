//! Order-preserving parallel map, backed by rayon when the `parallel`
//! feature is enabled and by a plain loop otherwise.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs indexed work items on a fixed number of workers. Results always come
/// back in index order, so callers can fold them deterministically.
pub struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    /// `workers <= 1` (or a build without the `parallel` feature) runs
    /// everything on the calling thread.
    pub fn new(workers: usize) -> Self {
        #[cfg(feature = "parallel")]
        {
            let pool = (workers > 1).then(|| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .expect("failed to build worker pool")
            });
            Executor { pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = workers;
            Executor {}
        }
    }

    pub fn sequential() -> Self {
        Executor::new(1)
    }

    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self.pool.is_some()
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }

    pub fn map<R, F>(&self, count: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| (0..count).into_par_iter().map(&f).collect());
        }
        (0..count).map(f).collect()
    }
}
