//! Pluggable evaluation of independent jobs, so that a caller with threads
//! can run campaigns in parallel while this crate stays `no_std`.

use alloc::vec::Vec;

/// Maps `f` over `0..len`; results must come back in index order.
pub trait Executor: Sync {
    fn map<T, F>(&self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync;
}

/// Runs jobs one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (0..len).map(f).collect()
    }
}
