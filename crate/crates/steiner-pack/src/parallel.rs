//! Rayon-backed [`Executor`].

use rayon::prelude::*;
use steiner_pack_core::exec::Executor;

/// Runs jobs on the current rayon pool; results keep index order, so output
/// does not depend on the number of workers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rayon;

impl Executor for Rayon {
    fn map<T, F>(&self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (0..len).into_par_iter().map(&f).collect()
    }
}

/// Runs `f` inside a pool of `jobs` workers (`0` means one per core).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
