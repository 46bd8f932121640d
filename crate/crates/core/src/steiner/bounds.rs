//! Upper bounds on `lambda(S)` and `kappa(S)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{choose2, Error, Graph, Mode, Result, VertexSet};

fn check_terminals(g: &Graph, s: VertexSet) -> Result<usize> {
    g.check_set(s)?;
    let k = s.len();
    if k < 2 {
        return Err(Error::TooFewTerminals(k));
    }
    Ok(k)
}

/// Edge-counting bound: trees inside `G[S]` use `k - 1` edges of
/// `E(G[S]) + E[S, V \ S]`, all other trees use at least `k`.
///
/// Returns the largest `y` with `(k-1) x + k (y - x) <= e(G[S]) + |E[S, V \ S]|`
/// over `0 <= x <= e(G[S]) / (k - 1)`.
pub fn lemma4_bound(g: &Graph, s: VertexSet) -> Result<usize> {
    let k = check_terminals(g, s)?;
    let inner = g.inner_edge_count(s);
    let total = inner + g.boundary_edge_count(s);
    Ok(counting_bound(k, inner, total, usize::MAX))
}

/// `max_x min(x + (total - (k-1) x) / k, x + extra)`.
fn counting_bound(k: usize, inner: usize, total: usize, extra: usize) -> usize {
    (0..=inner / (k - 1))
        .map(|x| {
            let y = x + (total - (k - 1) * x) / k;
            y.min(x.saturating_add(extra))
        })
        .max()
        .unwrap_or(0)
}

/// Every tree of an internally disjoint family either lies in `G[S]` or
/// owns a vertex outside `S`.
pub fn vertex_counting_bound(g: &Graph, s: VertexSet) -> Result<usize> {
    let k = check_terminals(g, s)?;
    let inner = g.inner_edge_count(s);
    let total = inner + g.boundary_edge_count(s);
    Ok(counting_bound(k, inner, total, g.order() - k))
}

/// Smallest degree of a terminal.
pub fn min_terminal_degree(g: &Graph, s: VertexSet) -> usize {
    s.iter().map(|v| g.deg(v)).min().unwrap_or(0)
}

/// Max-flow bound: every `S`-tree holds a path between any two terminals.
/// In vertex mode paths may share terminals but no other vertex.
pub fn flow_bound(g: &Graph, s: VertexSet, mode: Mode, cap: usize) -> Result<usize> {
    check_terminals(g, s)?;
    let r = s.iter().min_by_key(|&v| (g.deg(v), v)).unwrap_or(0);
    let mut best = cap.min(g.deg(r));
    for t in s.iter().filter(|&v| v != r) {
        if best == 0 {
            break;
        }
        best = best.min(max_flow(g, s, mode, r, t, best));
    }
    Ok(best)
}

/// Unit-capacity max flow between terminals `a` and `b`, stopping at `limit`.
/// Non-terminals are split into in/out nodes in vertex mode.
fn max_flow(g: &Graph, s: VertexSet, mode: Mode, a: usize, b: usize, limit: usize) -> usize {
    let n = g.order();
    let split = mode == Mode::Vertex;
    // node v is "in" side, v + n is "out" side (only used when split)
    let nodes = if split { 2 * n } else { n };
    let out = |v: usize| if split && !s.contains(v) { v + n } else { v };
    let mut cap = vec![0i8; nodes * nodes];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        cap[out(u) * nodes + v] = 1;
        cap[out(v) * nodes + u] = 1;
    }
    if split {
        for v in 0..n {
            if !s.contains(v) {
                cap[v * nodes + v + n] = 1;
            }
        }
    }
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    let mut queue = Vec::with_capacity(nodes);
    while flow < limit {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[a] = a;
        queue.clear();
        queue.push(a);
        let mut head = 0;
        while head < queue.len() && prev[b] == usize::MAX {
            let x = queue[head];
            head += 1;
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap[x * nodes + y] > 0 {
                    prev[y] = x;
                    queue.push(y);
                }
            }
        }
        if prev[b] == usize::MAX {
            break;
        }
        let mut y = b;
        while y != a {
            let x = prev[y];
            cap[x * nodes + y] -= 1;
            cap[y * nodes + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Combined cheap upper bound used before any search.
pub fn upper_bound(g: &Graph, s: VertexSet, mode: Mode) -> Result<usize> {
    let mut u = lemma4_bound(g, s)?.min(min_terminal_degree(g, s));
    if mode == Mode::Vertex {
        u = u.min(vertex_counting_bound(g, s)?);
    }
    flow_bound(g, s, mode, u)
}

/// Clauses bounding `lambda-bar_{n-1}(K_n \ M)` from above.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma56Clause {
    /// `n >= 4` odd, `|M| >= 1`: below `(n+1)/2`.
    Lemma5Part1,
    /// `n >= 4` even, `|M| >= n/2`: below `n/2`.
    Lemma5Part2,
    /// `n >= 10` even, `|M| >= (3n-4)/2`: below `(n-1)/2`.
    Lemma6Part1,
    /// `n >= 10` even, `n+1 <= |M| <= (3n-6)/2`, second minimal degree at
    /// most `(n-4)/2`: below `(n-2)/2`.
    Lemma6Part2,
    /// `n >= 8` odd, `|M| >= n-1`: below `(n-1)/2`.
    Lemma6Part3,
}

impl Lemma56Clause {
    pub const ALL: [Lemma56Clause; 5] = [
        Lemma56Clause::Lemma5Part1,
        Lemma56Clause::Lemma5Part2,
        Lemma56Clause::Lemma6Part1,
        Lemma56Clause::Lemma6Part2,
        Lemma56Clause::Lemma6Part3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Lemma56Clause::Lemma5Part1 => "lemma5-1",
            Lemma56Clause::Lemma5Part2 => "lemma5-2",
            Lemma56Clause::Lemma6Part1 => "lemma6-1",
            Lemma56Clause::Lemma6Part2 => "lemma6-2",
            Lemma56Clause::Lemma6Part3 => "lemma6-3",
        }
    }
}

/// A strict upper bound `lambda-bar_{n-1} < twice / 2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ClauseBound {
    pub clause: Lemma56Clause,
    /// Twice the bound, so that half-integers stay exact.
    pub twice: usize,
}

impl ClauseBound {
    /// Largest integer strictly below the bound.
    pub fn max_allowed(&self) -> usize {
        (self.twice - 1) / 2
    }
}

/// Bounds from every clause whose hypothesis holds for `K_n \ M` with
/// `|M| = m_size`. `second_min_degree` is the degree of a second minimal
/// degree vertex (equal for every choice of that vertex).
pub fn lemma56_upper_bounds(
    n: usize,
    m_size: usize,
    second_min_degree: Option<usize>,
) -> Result<Vec<ClauseBound>> {
    let mut out = Vec::new();
    let even = n % 2 == 0;
    if m_size > choose2(n) {
        return Err(Error::InvalidParameter("|M| exceeds C(n, 2)"));
    }
    if n >= 4 && !even && m_size >= 1 {
        out.push(ClauseBound { clause: Lemma56Clause::Lemma5Part1, twice: n + 1 });
    }
    if n >= 4 && even && 2 * m_size >= n {
        out.push(ClauseBound { clause: Lemma56Clause::Lemma5Part2, twice: n });
    }
    if n >= 10 && even && 2 * m_size + 4 >= 3 * n {
        out.push(ClauseBound { clause: Lemma56Clause::Lemma6Part1, twice: n - 1 });
    }
    if n >= 10
        && even
        && m_size > n
        && 2 * m_size + 6 <= 3 * n
        && matches!(second_min_degree, Some(d) if 2 * d + 4 <= n)
    {
        out.push(ClauseBound { clause: Lemma56Clause::Lemma6Part2, twice: n - 2 });
    }
    if n >= 8 && !even && m_size + 1 >= n {
        out.push(ClauseBound { clause: Lemma56Clause::Lemma6Part3, twice: n - 1 });
    }
    if out.is_empty() {
        return Err(Error::UnsupportedRegime("no clause of the K_n \\ M bounds applies"));
    }
    Ok(out)
}

/// Degree of a second minimal degree vertex: the second entry of the
/// sorted degree sequence.
pub fn second_min_degree(g: &Graph) -> Result<usize> {
    Ok(g.deg(g.second_min_degree_vertex()?))
}

/// [`lemma56_upper_bounds`] read off a connected graph viewed as `K_n \ M`.
pub fn lemma56_bounds_for(g: &Graph) -> Result<Vec<ClauseBound>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = choose2(g.order()) - g.edge_count();
    lemma56_upper_bounds(g.order(), m, Some(second_min_degree(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma4_examples() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(lemma4_bound(&k6, VertexSet::full(5)).unwrap(), 3);
        // K_n itself reaches (n+1)/2 for n odd; one missing edge drops every
        // (n-1)-set strictly below it
        for n in [5usize, 7, 9, 11] {
            let g = Graph::complete(n).unwrap();
            assert_eq!(2 * lemma4_bound(&g, VertexSet::full(n - 1)).unwrap(), n + 1);
            let h = g.delete_edges(&[crate::Edge::new(0, 1).unwrap()]).unwrap();
            for v in 0..n {
                let s = h.vertices() - VertexSet::singleton(v);
                assert!(2 * lemma4_bound(&h, s).unwrap() < n + 1, "n={n} v={v}");
            }
        }
        let p = Graph::path(5).unwrap();
        assert!(lemma4_bound(&p, VertexSet::from_iter([0, 4])).unwrap() >= 1);
        assert!(lemma4_bound(&p, VertexSet::singleton(0)).is_err());
    }

    #[test]
    fn lemma4_matches_complete_graph_values() {
        for n in 3..=10 {
            let g = Graph::complete(n).unwrap();
            for k in 2..=n {
                assert_eq!(lemma4_bound(&g, VertexSet::full(k)).unwrap(), n - k.div_ceil(2), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn flow_bounds() {
        // two terminals on a 6-cycle: two paths
        let c6 = Graph::cycle(6).unwrap();
        let s = VertexSet::from_iter([0, 3]);
        assert_eq!(flow_bound(&c6, s, Mode::Edge, usize::MAX).unwrap(), 2);
        assert_eq!(flow_bound(&c6, s, Mode::Vertex, usize::MAX).unwrap(), 2);
        // bowtie: two triangles sharing vertex 2; terminals 0 and 4
        let bow = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let s = VertexSet::from_iter([0, 4]);
        assert_eq!(flow_bound(&bow, s, Mode::Edge, usize::MAX).unwrap(), 2);
        assert_eq!(flow_bound(&bow, s, Mode::Vertex, usize::MAX).unwrap(), 1);
        // the shared vertex as a terminal may be reused
        let s = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(flow_bound(&bow, s, Mode::Vertex, usize::MAX).unwrap(), 2);
    }

    #[test]
    fn lemma56_examples() {
        let b = lemma56_upper_bounds(7, 1, None).unwrap();
        assert_eq!(b, [ClauseBound { clause: Lemma56Clause::Lemma5Part1, twice: 8 }]);
        assert_eq!(b[0].max_allowed(), 3);
        let b = lemma56_upper_bounds(10, 5, None).unwrap();
        assert_eq!(b, [ClauseBound { clause: Lemma56Clause::Lemma5Part2, twice: 10 }]);
        assert_eq!(b[0].max_allowed(), 4);
        let b = lemma56_upper_bounds(9, 8, None).unwrap();
        assert!(b.contains(&ClauseBound { clause: Lemma56Clause::Lemma6Part3, twice: 8 }));
        assert_eq!(b.iter().map(ClauseBound::max_allowed).min(), Some(3));
        assert!(lemma56_upper_bounds(6, 2, None).is_err());
        // Lemma 6(2) needs the degree condition
        assert_eq!(lemma56_upper_bounds(10, 12, Some(4)).unwrap().len(), 1);
        assert_eq!(lemma56_upper_bounds(10, 12, Some(3)).unwrap().len(), 2);
        assert_eq!(lemma56_upper_bounds(10, 13, Some(3)).unwrap().len(), 2);
    }
}
