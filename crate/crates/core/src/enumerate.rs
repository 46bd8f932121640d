//! Isomorph-free enumeration of small graphs.
//!
//! Graphs of order `n` are the children of graphs of order `n - 1`: a new
//! vertex is joined to every possible neighbour set and each child is
//! reduced to its canonical form; duplicates are merged.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::exec::{Executor, Sequential};
use crate::{choose2, Error, Graph, Result};

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUM_CAP: usize = 9;

/// Largest order [`enumerate_naive`] accepts.
pub const NAIVE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    Connected,
    All,
}

/// Canonical children of `parent`: one new vertex, every neighbour set.
pub fn children(parent: &Graph) -> Result<Vec<Graph>> {
    let n = parent.order() + 1;
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    let mut out = BTreeSet::new();
    for nb in 0u64..1 << (n - 1) {
        let mut r = rows.clone();
        r[n - 1] = nb;
        for (v, row) in r.iter_mut().enumerate().take(n - 1) {
            if nb >> v & 1 == 1 {
                *row |= 1 << (n - 1);
            }
        }
        out.insert(canonical_form(&Graph::from_rows(r)?));
    }
    Ok(out.into_iter().collect())
}

fn keep(g: &Graph, filter: Filter, min_edges: Option<usize>) -> bool {
    (filter == Filter::All || g.is_connected()) && min_edges.is_none_or(|m| g.edge_count() >= m)
}

/// One canonical graph per isomorphism class of order `n`, in ascending
/// canonical order.
pub fn enumerate_graphs(n: usize, filter: Filter, min_edges: Option<usize>) -> Result<Vec<Graph>> {
    enumerate_with(n, filter, min_edges, &Sequential)
}

/// [`enumerate_graphs`] with the children of each parent class generated by
/// `exec`.
pub fn enumerate_with<E: Executor>(n: usize, filter: Filter, min_edges: Option<usize>, exec: &E) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Order(0));
    }
    if n > ENUM_CAP {
        return Err(Error::Cap { what: "enumeration", order: n, cap: ENUM_CAP });
    }
    let mut level = alloc::vec![Graph::empty(1)?];
    for _ in 1..n {
        let parts = exec.map(level.len(), |i| children(&level[i]));
        let mut next = BTreeSet::new();
        for part in parts {
            next.extend(part?);
        }
        level = next.into_iter().collect();
    }
    level.retain(|g| keep(g, filter, min_edges));
    Ok(level)
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    // Heap's algorithm
    let mut c = alloc::vec![0usize; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Every labelled graph on `n` vertices, deduplicated by the smallest
/// relabelling over all `n!` permutations. A slow reference for the fast
/// enumerator, `n <= 6`.
pub fn enumerate_naive(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Order(0));
    }
    if n > NAIVE_CAP {
        return Err(Error::Cap { what: "naive enumeration", order: n, cap: NAIVE_CAP });
    }
    let perms = all_perms(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << choose2(n) {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges)?;
        if filter == Filter::Connected && !g.is_connected() {
            continue;
        }
        let least = perms.iter().map(|p| g.permute(p)).min().unwrap_or_else(|| unreachable!());
        seen.insert(least);
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let all = [1usize, 2, 4, 11, 34, 156];
        let connected = [1usize, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(enumerate_graphs(n, Filter::All, None).unwrap().len(), all[n - 1]);
            assert_eq!(enumerate_graphs(n, Filter::Connected, None).unwrap().len(), connected[n - 1]);
        }
    }

    #[test]
    fn naive_agrees() {
        for n in 1..=5 {
            for filter in [Filter::All, Filter::Connected] {
                let fast = enumerate_graphs(n, filter, None).unwrap();
                let slow = enumerate_naive(n, filter).unwrap();
                assert_eq!(fast.len(), slow.len());
                let mapped: BTreeSet<Graph> = slow.iter().map(canonical_form).collect();
                assert_eq!(mapped, fast.into_iter().collect());
            }
        }
    }

    #[test]
    fn min_edges_filter() {
        let dense = enumerate_graphs(5, Filter::Connected, Some(9)).unwrap();
        // K5 and K5 minus an edge
        assert_eq!(dense.len(), 2);
        assert!(enumerate_graphs(10, Filter::All, None).is_err());
    }
}
