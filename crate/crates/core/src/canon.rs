//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree individualizes vertices of the first non-singleton cell
//! and refines to an equitable partition; the canonical form is the largest
//! relabelled adjacency over all leaves. Branches are pruned by twins
//! (interchangeable vertices) and by automorphisms found when two leaves
//! give the same graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_CAP: usize = 12;

type Cells = Vec<Vec<u8>>;

struct Canon<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<(Vec<u64>, Vec<u8>)>,
    first: Option<(Vec<u64>, Vec<u8>)>,
    /// automorphisms as permutations
    autos: Vec<Vec<u8>>,
}

fn refine(rows: &[u64], cells: &mut Cells) {
    'outer: loop {
        for si in 0..cells.len() {
            let mask: u64 = cells[si].iter().fold(0, |m, &v| m | 1 << v);
            for ci in 0..cells.len() {
                if cells[ci].len() < 2 {
                    continue;
                }
                let count = |v: u8| (rows[v as usize] & mask).count_ones();
                let c0 = count(cells[ci][0]);
                if cells[ci].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                let mut cell = core::mem::take(&mut cells[ci]);
                cell.sort_by_key(|&v| (count(v), v));
                let mut parts: Cells = Vec::new();
                let mut last = None;
                for v in cell {
                    let c = count(v);
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().unwrap_or_else(|| unreachable!()).push(v);
                }
                cells.splice(ci..=ci, parts);
                continue 'outer;
            }
        }
        return;
    }
}

fn relabel(rows: &[u64], order: &[u8]) -> Vec<u64> {
    let n = order.len();
    let mut pos = [0u8; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u8;
    }
    let mut out = vec![0u64; n];
    for (i, &v) in order.iter().enumerate() {
        let mut r = rows[v as usize];
        while r != 0 {
            let w = r.trailing_zeros() as usize;
            r &= r - 1;
            out[i] |= 1u64 << pos[w];
        }
    }
    out
}

fn find(p: &mut [u8], x: u8) -> u8 {
    let mut x = x;
    while p[x as usize] != x {
        p[x as usize] = p[p[x as usize] as usize];
        x = p[x as usize];
    }
    x
}

impl Canon<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        let key = relabel(self.rows, &order);
        for stored in [&self.first, &self.best].into_iter().flatten() {
            if stored.0 == key {
                // order[i] plays the role of stored.1[i]
                let mut gamma = vec![0u8; self.n];
                for i in 0..self.n {
                    gamma[stored.1[i] as usize] = order[i];
                }
                if gamma.iter().enumerate().any(|(i, &g)| g as usize != i) {
                    self.autos.push(gamma);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((key.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|b| key > b.0) {
            self.best = Some((key, order));
        }
    }

    fn search(&mut self, cells: Cells, fixed: &[u8]) {
        let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[ci].clone();
        let mut explored: Vec<u8> = Vec::new();
        for &v in &target {
            // skip v if an explored vertex is equivalent to it
            if !explored.is_empty() && self.equivalent(v, &explored, &target, fixed) {
                continue;
            }
            explored.push(v);
            let mut next = cells.clone();
            let rest: Vec<u8> = target.iter().copied().filter(|&x| x != v).collect();
            next.splice(ci..=ci, [vec![v], rest]);
            refine(self.rows, &mut next);
            let mut f = fixed.to_vec();
            f.push(v);
            self.search(next, &f);
        }
    }

    /// Whether `v` lies in the orbit of some explored vertex, under twins and
    /// the known automorphisms fixing `fixed` pointwise.
    fn equivalent(&self, v: u8, explored: &[u8], cell: &[u8], fixed: &[u8]) -> bool {
        let mut p: Vec<u8> = (0..self.n as u8).collect();
        let union = |p: &mut Vec<u8>, a: u8, b: u8| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra as usize] = rb;
            }
        };
        for &a in cell {
            for &b in cell {
                if a < b {
                    let (ra, rb) = (self.rows[a as usize] & !(1 << b), self.rows[b as usize] & !(1 << a));
                    if ra == rb {
                        union(&mut p, a, b);
                    }
                }
            }
        }
        for gamma in &self.autos {
            if fixed.iter().all(|&x| gamma[x as usize] == x) {
                for x in 0..self.n {
                    union(&mut p, x as u8, gamma[x]);
                }
            }
        }
        let rv = find(&mut p, v);
        explored.iter().any(|&e| find(&mut p, e) == rv)
    }
}

/// Canonical labelling: `order[i]` is the vertex that gets label `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut c = Canon { rows: g.rows(), n, best: None, first: None, autos: Vec::new() };
    let mut cells: Cells = vec![(0..n as u8).collect()];
    refine(g.rows(), &mut cells);
    c.search(cells, &[]);
    let (_, order) = c.best.unwrap_or_else(|| unreachable!());
    order.into_iter().map(usize::from).collect()
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_labeling(g);
    let mut perm = vec![0usize; g.order()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.permute(&perm)
}

/// Exact isomorphism test for graphs of order at most [`ISO_CAP`].
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISO_CAP {
            return Err(Error::Cap { what: "isomorphism", order: x.order(), cap: ISO_CAP });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (mut a, mut b) = (g.degrees(), h.degrees());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    Ok(canonical_form(g) == canonical_form(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct_gn;
    use crate::VertexSet;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.permute(&[3, 0, 4, 1, 2])).unwrap());
        let k4e = Graph::complete(4).unwrap().delete_edges(&[crate::Edge::new(0, 1).unwrap()]).unwrap();
        assert!(!is_isomorphic(&k4e, &Graph::path(4).unwrap()).unwrap());
        let a = construct_gn(6, 2, Some(VertexSet::from_iter([0, 1]))).unwrap();
        let b = construct_gn(6, 2, Some(VertexSet::from_iter([2, 4]))).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&Graph::complete(13).unwrap(), &Graph::complete(13).unwrap()).is_err());
    }

    #[test]
    fn invariant_under_every_relabelling() {
        let petersen = {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, e).unwrap()
        };
        let samples = [
            Graph::cycle(6).unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::empty(6).unwrap(),
        ];
        for g in &samples {
            let c = canonical_form(g);
            for p in all_perms(6) {
                assert_eq!(canonical_form(&g.permute(&p)), c);
            }
        }
        let c = canonical_form(&petersen);
        for shift in 0..5 {
            let p: Vec<usize> = (0..10).map(|v| if v < 5 { (v + shift) % 5 } else { 5 + (v + shift) % 5 }).collect();
            assert_eq!(canonical_form(&petersen.permute(&p)), c);
        }
        let swap: Vec<usize> = (0..10).map(|v| (v + 5) % 10).collect();
        assert!(is_isomorphic(&petersen, &petersen.permute(&swap)).unwrap());
    }

    #[test]
    fn symmetric_graphs_are_quick() {
        for n in 1..=12 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k), k);
        }
        let matching: Vec<crate::Edge> = (0..6).map(|i| crate::Edge::new(2 * i, 2 * i + 1).unwrap()).collect();
        let g = Graph::complete(12).unwrap().delete_edges(&matching).unwrap();
        let p: Vec<usize> = (0..12).map(|v| (v * 5) % 12).collect();
        assert!(is_isomorphic(&g, &g.permute(&p)).unwrap());
    }
}
