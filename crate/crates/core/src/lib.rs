//! Exact generalized local connectivity on small simple graphs.
//!
//! For a terminal set `S`, `kappa(S)` is the maximum number of internally
//! disjoint `S`-Steiner trees and `lambda(S)` the maximum number of
//! edge-disjoint ones. This crate computes both exactly, packs
//! edge-disjoint spanning trees, builds the extremal graph families for
//! `k = n` and `k = n - 1`, evaluates their closed forms, and checks all of
//! it against isomorph-free exhaustive search at small order.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON, the
//! command line and worker pools live in the `steiner-pack` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod enumerate;
pub mod exec;
mod error;
pub mod extremal;
pub mod families;
pub mod graph;
mod hamilton;
pub mod spanning;
pub mod steiner;
pub mod tree;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, MAX_ORDER};
pub use tree::{Mode, PackingCertificate, PackingDefect, TreeCertificate, TreeDefect};
pub use vertex_set::VertexSet;

/// Binomial coefficient `C(n, 2)`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}
