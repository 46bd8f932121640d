//! The star-plus-matching tree for `S = V \ {v}` and the packing built on it.

use alloc::vec::Vec;

use crate::spanning::pack_induced;
use crate::{Edge, Error, Graph, Mode, PackingCertificate, Result, TreeCertificate, VertexSet};

/// Star from `v` to `S1 = N(v)`, then each vertex of `S2 = S \ S1` is hung
/// on a neighbour in `S1`.
///
/// The next `S2` vertex is the one of maximum current degree, and it is
/// joined to its `S1` neighbour of maximum current degree; ties go to the
/// smaller index, and each chosen edge is deleted from the working graph
/// before the next step. Returns `None` when some `S2` vertex has no
/// neighbour in `S1`.
pub fn greedy_star_tree(g: &Graph, v: usize) -> Result<Option<TreeCertificate>> {
    g.check_vertex(v)?;
    let n = g.order();
    if n < 3 {
        return Err(Error::TooFewTerminals(n.saturating_sub(1)));
    }
    let s = g.vertices() - VertexSet::singleton(v);
    let s1 = g.neighbors(v);
    let mut left = s - s1;
    let mut work = g.clone();
    let mut edges: Vec<Edge> = s1.iter().map(|u| Edge::new_unchecked(v, u)).collect();
    while !left.is_empty() {
        let u = max_degree_vertex(&work, left);
        let cand = s1 & work.neighbors(u);
        if cand.is_empty() {
            return Ok(None);
        }
        let w = max_degree_vertex(&work, cand);
        edges.push(Edge::new_unchecked(u, w));
        work.unlink(u, w);
        left.remove(u);
    }
    Ok(Some(TreeCertificate::new(edges, s)))
}

/// Smallest-indexed vertex of maximum degree in `g` among `among` (nonempty).
fn max_degree_vertex(g: &Graph, among: VertexSet) -> usize {
    let mut best = usize::MAX;
    let mut best_deg = 0;
    for x in among {
        let d = g.deg(x);
        if best == usize::MAX || d > best_deg {
            best = x;
            best_deg = d;
        }
    }
    best
}

/// Lower bound for `kappa(V \ {v})`: the greedy star tree plus a maximum
/// spanning tree packing of what remains of `G[S]`. Without the star tree
/// this is just the spanning tree packing number of `G[S]`.
pub fn peel_lower_bound(g: &Graph, v: usize) -> Result<(usize, PackingCertificate)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = g.vertices() - VertexSet::singleton(v);
    let trees = match greedy_star_tree(g, v)? {
        Some(t) => {
            let rest = g.delete_edges(&t.edges)?;
            let (_, mut packed) = pack_induced(&rest, s)?;
            packed.insert(0, t);
            packed
        }
        None => pack_induced(g, s)?.1,
    };
    Ok((trees.len(), PackingCertificate::new(Mode::Vertex, s, trees)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn complete_graph_gives_star() {
        let t = greedy_star_tree(&Graph::complete(5).unwrap(), 0).unwrap().unwrap();
        assert_eq!(t.edges, [e(0, 1), e(0, 2), e(0, 3), e(0, 4)]);
    }

    #[test]
    fn hand_worked_instance() {
        // K_5 on 0..4 plus vertex 5 joined to 0 and 1.
        // S2 = {2,3,4}; degrees 0:5 1:5 2:4 3:4 4:4.
        // 2 -> 0 (tie, smaller index); then 0:4 so 3 -> 1; then 4 -> 0.
        let mut g = Graph::complete(6).unwrap();
        for u in 2..5 {
            g.unlink(5, u);
        }
        let t = greedy_star_tree(&g, 5).unwrap().unwrap();
        let mut want = vec![e(0, 5), e(1, 5), e(0, 2), e(1, 3), e(0, 4)];
        want.sort();
        assert_eq!(t.edges, want);
        assert!(t.is_valid(&g));
    }

    #[test]
    fn absent_when_s2_vertex_misses_s1() {
        // path 0-1-2-3 with v = 0: S1 = {1}, vertex 3 only touches S2
        let p = Graph::path(4).unwrap();
        assert_eq!(greedy_star_tree(&p, 0).unwrap(), None);
        let (count, cert) = peel_lower_bound(&p, 0).unwrap();
        assert_eq!(count, 1);
        assert!(cert.is_valid(&p));
    }

    #[test]
    fn peel_on_complete_graph() {
        let k7 = Graph::complete(7).unwrap();
        let (count, cert) = peel_lower_bound(&k7, 0).unwrap();
        assert!(count >= 3);
        assert_eq!(cert.validate(&k7), Ok(()));
    }
}
