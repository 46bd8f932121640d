//! Graph I/O, JSON documents, a rayon executor and the command-line front
//! end for `steiner-pack-core`.

pub mod cli;
pub mod graph6;
pub mod json;
pub mod parallel;
