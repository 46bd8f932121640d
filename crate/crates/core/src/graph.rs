//! Simple undirected graphs on at most 64 vertices, stored as bit rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, VertexSet};

/// Largest supported order; one adjacency row fits a machine word.
pub const MAX_ORDER: usize = 64;

/// An undirected edge `uv`, normalised so that `u < v`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::Loop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if v >= MAX_ORDER {
            return Err(Error::VertexOutOfRange { vertex: v, order: MAX_ORDER });
        }
        Ok(Edge { u: u as u8, v: v as u8 })
    }

    /// Caller guarantees `a != b` and both are below 64.
    #[inline]
    pub(crate) fn new_unchecked(a: usize, b: usize) -> Edge {
        debug_assert!(a != b && a < MAX_ORDER && b < MAX_ORDER);
        if a < b {
            Edge { u: a as u8, v: b as u8 }
        } else {
            Edge { u: b as u8, v: a as u8 }
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u as usize
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v as usize
    }

    #[inline]
    pub fn endpoints(self) -> (usize, usize) {
        (self.u(), self.v())
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.u() == x || self.v() == x
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Undirected simple graph. Row `v` has bit `u` set iff `uv` is an edge.
///
/// Values are never mutated after they are handed out; operations that
/// change the edge set return a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Order(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.link(v - 1, v);
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::TooSmall { order: n, min: 3 });
        }
        let mut g = Graph::path(n)?;
        g.link(0, n - 1);
        Ok(g)
    }

    /// Star `K_{1, n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.link(0, v);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::Loop(a));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, rejecting asymmetric rows or loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Order(n));
        }
        let mask = VertexSet::full(n).bits();
        for v in 0..n {
            let row = g.adj[v];
            if row & !mask != 0 {
                return Err(Error::InvalidParameter("adjacency row has bits beyond the order"));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in VertexSet::from_bits(row) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter("adjacency rows are not symmetric"));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// All edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| Edge::new_unchecked(u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    /// Vertices of minimum degree.
    pub fn min_degree_vertices(&self) -> VertexSet {
        let d = self.min_degree();
        (0..self.n).filter(|&v| self.deg(v) == d).collect()
    }

    /// The canonical second minimal degree vertex.
    ///
    /// With two or more minimum-degree vertices this is the second of them
    /// by index; with a unique one it is the smallest-indexed vertex of the
    /// second smallest degree.
    pub fn second_min_degree_vertex(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::TooSmall { order: self.n, min: 2 });
        }
        let mins = self.min_degree_vertices();
        if mins.len() >= 2 {
            return Ok(mins.iter().nth(1).unwrap_or_default());
        }
        Ok(self.second_min_degree_candidates()?.first().unwrap_or_default())
    }

    /// Every vertex that qualifies as a second minimal degree vertex for
    /// some choice of the first one.
    pub fn second_min_degree_candidates(&self) -> Result<VertexSet> {
        if self.n < 2 {
            return Err(Error::TooSmall { order: self.n, min: 2 });
        }
        let mins = self.min_degree_vertices();
        if mins.len() >= 2 {
            return Ok(mins);
        }
        let rest = self.vertices() - mins;
        let d2 = rest.iter().map(|v| self.deg(v)).min().unwrap_or(0);
        Ok(rest.iter().filter(|&v| self.deg(v) == d2).collect())
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        VertexSet::from_bits(reach(&self.adj, start, within.bits()))
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach_within(v, left);
            out.push(c);
            left = left - c;
        }
        out
    }

    /// `G[S]` relabelled to `0..|S|` in ascending order of original index,
    /// plus the map from new to original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len())?;
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.link(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Number of edges inside `S`.
    pub fn inner_edge_count(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `|E_G[S, V \ S]|`.
    pub fn boundary_edge_count(&self, s: VertexSet) -> usize {
        let out = (self.vertices() - s).bits();
        s.iter().map(|v| (self.adj[v] & out).count_ones() as usize).sum()
    }

    /// Copy of `self` with the edges of `m` removed.
    pub fn delete_edges(&self, m: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in m {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::MissingEdge(e.u(), e.v()));
            }
            g.unlink(e.u(), e.v());
        }
        Ok(g)
    }

    /// Copy of `self` with the edges of `m` added.
    pub fn add_edges(&self, m: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in m {
            g.check_vertex(e.v())?;
            g.link(e.u(), e.v());
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().bits();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Edges of `K_n` missing from `self`, i.e. the `M` with `self = K_n \ M`.
    pub fn missing_edges(&self) -> Vec<Edge> {
        self.complement().edge_list()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0u64;
            for u in VertexSet::from_bits(self.adj[v]) {
                row |= 1u64 << perm[u];
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// A Hamilton cycle as a vertex sequence, if one exists.
    ///
    /// The search is exact, so graphs with minimum degree at least `n / 2`
    /// always yield a cycle.
    pub fn hamiltonian_cycle(&self) -> Result<Option<Vec<usize>>> {
        if self.n < 3 {
            return Err(Error::TooSmall { order: self.n, min: 3 });
        }
        Ok(crate::hamilton::find_cycle(self))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, order: self.n }),
            _ => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Breadth-first closure over bit rows.
#[inline]
pub(crate) fn reach(rows: &[u64], start: usize, within: u64) -> u64 {
    if within >> start & 1 == 0 {
        return 0;
    }
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(10).unwrap().edge_count(), 45);
        assert_eq!(Graph::complete(64).unwrap().edge_count(), 2016);
        assert_eq!(Graph::complete(0), Err(Error::Order(0)));
        assert_eq!(Graph::complete(65), Err(Error::Order(65)));
    }

    #[test]
    fn delete_edges_examples() {
        let k4 = Graph::complete(4).unwrap();
        let g = k4.delete_edges(&[e(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degrees(), [2, 2, 3, 3]);
        assert_eq!(k4.edge_count(), 6);

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.delete_edges(&[]).unwrap(), k5);

        let k6 = Graph::complete(6).unwrap();
        let g = k6.delete_edges(&[e(0, 1), e(2, 3), e(4, 5)]).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(g.degrees().iter().all(|&d| d == 4));

        assert_eq!(g.delete_edges(&[e(0, 1)]), Err(Error::MissingEdge(0, 1)));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn degrees() {
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|v| k5.degree(v).unwrap() == 4));
        let star = Graph::star(5).unwrap();
        assert_eq!(star.degree(0).unwrap(), 4);
        assert_eq!(star.degree(3).unwrap(), 1);
        assert_eq!(star.min_degree(), 1);
        assert_eq!(star.max_degree(), 4);
        assert!(star.degree(5).is_err());
    }

    #[test]
    fn second_min_degree_vertex_examples() {
        assert_eq!(Graph::complete(4).unwrap().second_min_degree_vertex().unwrap(), 1);
        assert_eq!(Graph::star(5).unwrap().second_min_degree_vertex().unwrap(), 2);
        // degrees (1, 3, 3, 4, 3): unique minimum at 0
        let g = Graph::from_edges(5, [(0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g.degrees(), [1, 3, 3, 4, 3]);
        assert_eq!(g.second_min_degree_vertex().unwrap(), 1);
        assert_eq!(g.second_min_degree_candidates().unwrap().iter().collect::<Vec<_>>(), [1, 2, 4]);
        assert!(Graph::empty(1).unwrap().second_min_degree_vertex().is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = Graph::complete(5).unwrap();
        let s = VertexSet::from_bits(0b10101);
        let (h, map) = k5.induced_subgraph(s).unwrap();
        assert_eq!(h, Graph::complete(3).unwrap());
        assert_eq!(map, [0, 2, 4]);
        assert_eq!(k5.boundary_edge_count(s), 6);

        let p4 = Graph::path(4).unwrap();
        let s = VertexSet::from_iter([0, 3]);
        let (h, _) = p4.induced_subgraph(s).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.order(), 2);
        assert_eq!(p4.boundary_edge_count(s), 2);

        let g = Graph::complete(6).unwrap().delete_edges(&[e(0, 1)]).unwrap();
        let s = VertexSet::full(5);
        let (h, _) = g.induced_subgraph(s).unwrap();
        assert_eq!(h, Graph::complete(5).unwrap().delete_edges(&[e(0, 1)]).unwrap());
        assert_eq!(g.boundary_edge_count(s), 5);

        assert_eq!(k5.induced_subgraph(VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert_eq!(Graph::from_rows(vec![0b10, 0b01]).unwrap().edge_count(), 1);
    }

    #[test]
    fn permute_preserves_edges() {
        let g = Graph::path(4).unwrap();
        let h = g.permute(&[3, 1, 0, 2]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge(3, 1) && h.has_edge(1, 0) && h.has_edge(0, 2));
    }

    #[test]
    fn edges_lexicographic() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_list(), [e(0, 1), e(0, 3), e(1, 2)]);
    }
}
