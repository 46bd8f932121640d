//! Edge-disjoint spanning tree packing by matroid partition.
//!
//! `t` forests are grown one edge at a time. An edge that fits no forest
//! directly is pushed in along a shortest exchange path: inserting `y` into
//! forest `i` evicts some edge on the cycle `y` closes there, which in turn
//! looks for a new home. When all `t` forests are spanning, `t` grows.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Edge, Error, Graph, Mode, PackingCertificate, Result, TreeCertificate};

const NONE: u32 = u32::MAX;

struct Forests {
    n: usize,
    edges: Vec<Edge>,
    owner: Vec<u32>,
    t: usize,
    // per forest, per vertex: parent vertex, edge to parent, depth, root
    parent: Vec<u32>,
    pedge: Vec<u32>,
    depth: Vec<u32>,
    root: Vec<u32>,
}

impl Forests {
    fn new(g: &Graph) -> Self {
        let edges = g.edge_list();
        let m = edges.len();
        Forests {
            n: g.order(),
            edges,
            owner: vec![NONE; m],
            t: 0,
            parent: Vec::new(),
            pedge: Vec::new(),
            depth: Vec::new(),
            root: Vec::new(),
        }
    }

    fn size(&self, i: usize) -> usize {
        self.owner.iter().filter(|&&o| o as usize == i).count()
    }

    /// Roots every forest and records parent pointers.
    fn index(&mut self) {
        let n = self.n;
        let t = self.t;
        self.parent = vec![NONE; n * t];
        self.pedge = vec![NONE; n * t];
        self.depth = vec![0; n * t];
        self.root = vec![NONE; n * t];
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n * t];
        for (e, &o) in self.owner.iter().enumerate() {
            if o != NONE {
                let (u, v) = self.edges[e].endpoints();
                let i = o as usize;
                adj[i * n + u].push((v as u32, e as u32));
                adj[i * n + v].push((u as u32, e as u32));
            }
        }
        let mut stack = Vec::new();
        for i in 0..t {
            for s in 0..n {
                if self.root[i * n + s] != NONE {
                    continue;
                }
                self.root[i * n + s] = s as u32;
                stack.push(s);
                while let Some(v) = stack.pop() {
                    for &(w, e) in &adj[i * n + v] {
                        let w = w as usize;
                        if self.root[i * n + w] == NONE {
                            self.root[i * n + w] = s as u32;
                            self.parent[i * n + w] = v as u32;
                            self.pedge[i * n + w] = e;
                            self.depth[i * n + w] = self.depth[i * n + v] + 1;
                            stack.push(w);
                        }
                    }
                }
            }
        }
    }

    /// Edges on the forest-`i` path between `a` and `b`, which must be joined.
    fn path(&self, i: usize, mut a: usize, mut b: usize, out: &mut Vec<u32>) {
        out.clear();
        let n = self.n;
        while a != b {
            if self.depth[i * n + a] >= self.depth[i * n + b] {
                out.push(self.pedge[i * n + a]);
                a = self.parent[i * n + a] as usize;
            } else {
                out.push(self.pedge[i * n + b]);
                b = self.parent[i * n + b] as usize;
            }
        }
    }

    /// Tries to add edge `x` to the union of the forests.
    fn insert(&mut self, x: usize) -> bool {
        self.index();
        let n = self.n;
        let m = self.edges.len();
        let mut prev = vec![NONE; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        let mut buf = Vec::new();
        seen[x] = true;
        queue.push_back(x);
        while let Some(y) = queue.pop_front() {
            let (a, b) = self.edges[y].endpoints();
            for i in 0..self.t {
                if self.owner[y] as usize == i {
                    continue;
                }
                if self.root[i * n + a] != self.root[i * n + b] {
                    // apply the exchange path ending at y
                    let mut cur = y;
                    let mut into = i as u32;
                    loop {
                        let old = self.owner[cur];
                        self.owner[cur] = into;
                        if cur == x {
                            return true;
                        }
                        into = old;
                        cur = prev[cur] as usize;
                    }
                }
                self.path(i, a, b, &mut buf);
                for &z in &buf {
                    let z = z as usize;
                    if !seen[z] {
                        seen[z] = true;
                        prev[z] = y as u32;
                        queue.push_back(z);
                    }
                }
            }
        }
        false
    }

    fn trees(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.t];
        for (e, &o) in self.owner.iter().enumerate() {
            if o != NONE {
                out[o as usize].push(self.edges[e]);
            }
        }
        out
    }
}

/// Maximum number of edge-disjoint spanning trees, with the trees.
pub fn max_spanning_tree_packing(g: &Graph) -> Result<(usize, PackingCertificate)> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall { order: n, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let ceiling = (g.edge_count() / (n - 1)).min(g.min_degree());
    let mut f = Forests::new(g);
    let m = f.edges.len();
    let mut best: Vec<Vec<Edge>> = Vec::new();
    let mut pending: Vec<usize> = (0..m).collect();
    while f.t < ceiling {
        f.t += 1;
        let mut failed = Vec::new();
        for &x in &pending {
            if !f.insert(x) {
                failed.push(x);
            }
        }
        pending = failed;
        if (0..f.t).all(|i| f.size(i) == n - 1) {
            best = f.trees();
        } else {
            break;
        }
    }
    let terminals = g.vertices();
    let trees = best.into_iter().map(|edges| TreeCertificate::new(edges, terminals)).collect::<Vec<_>>();
    Ok((trees.len(), PackingCertificate::new(Mode::Edge, terminals, trees)))
}

/// Spanning tree packing number of `G[S]`, certificates mapped back to `G`.
/// Returns zero trees when `G[S]` is disconnected.
pub fn pack_induced(g: &Graph, s: crate::VertexSet) -> Result<(usize, Vec<TreeCertificate>)> {
    let (h, map) = g.induced_subgraph(s)?;
    if h.order() < 2 || !h.is_connected() {
        return Ok((0, Vec::new()));
    }
    let (t, cert) = max_spanning_tree_packing(&h)?;
    let trees = cert
        .trees
        .into_iter()
        .map(|tr| {
            let edges = tr.edges.iter().map(|e| Edge::new_unchecked(map[e.u()], map[e.v()])).collect();
            TreeCertificate::new(edges, s)
        })
        .collect();
    Ok((t, trees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanning::partition_bound;

    #[test]
    fn examples() {
        let (t, cert) = max_spanning_tree_packing(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(t, 2);
        assert!(cert.is_valid(&Graph::complete(4).unwrap()));
        let k6 = Graph::complete(6).unwrap();
        let (t, cert) = max_spanning_tree_packing(&k6).unwrap();
        assert_eq!(t, 3);
        assert_eq!(cert.validate(&k6), Ok(()));
        assert_eq!(max_spanning_tree_packing(&Graph::path(7).unwrap()).unwrap().0, 1);
        assert_eq!(max_spanning_tree_packing(&Graph::empty(3).unwrap()), Err(Error::Disconnected));
        assert!(max_spanning_tree_packing(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=20 {
            let g = Graph::complete(n).unwrap();
            let (t, cert) = max_spanning_tree_packing(&g).unwrap();
            assert_eq!(t, n / 2);
            assert!(cert.is_valid(&g));
        }
    }

    #[test]
    fn bridge_limits_packing() {
        let mut edges: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        edges.extend(edges.clone().iter().map(|&(a, b)| (a + 5, b + 5)));
        edges.push((4, 5));
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(max_spanning_tree_packing(&g).unwrap().0, 1);
    }

    #[test]
    fn agrees_with_partition_bound_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::SmallRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=8);
            let p = rng.gen_range(0.3..1.0);
            let mut g = Graph::empty(n).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        g.link(a, b);
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            let (t, cert) = max_spanning_tree_packing(&g).unwrap();
            assert_eq!(t, partition_bound(&g).unwrap(), "{g:?}");
            assert!(cert.is_valid(&g));
        }
    }

    #[test]
    fn induced_packing_maps_back() {
        let g = Graph::complete(7).unwrap();
        let s = crate::VertexSet::from_iter([1, 3, 4, 6]);
        let (t, trees) = pack_induced(&g, s).unwrap();
        assert_eq!(t, 2);
        let cert = PackingCertificate::new(Mode::Edge, s, trees);
        assert!(cert.is_valid(&g));
        assert!(cert.trees.iter().all(|tr| tr.vertices() == s));
    }
}
