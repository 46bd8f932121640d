//! Backtracking Hamilton cycle search.

use alloc::vec::Vec;

use crate::Graph;

/// Exact search. Starts at a minimum-degree vertex and tries neighbours in
/// order of increasing degree. Returns the cycle as a vertex sequence
/// without repeating the start vertex.
pub(crate) fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return None;
    }
    let start = (0..n).min_by_key(|&v| (g.deg(v), v))?;
    let mut path = Vec::with_capacity(n);
    path.push(start);
    if extend(g, start, 1u64 << start, &mut path) {
        Some(path)
    } else {
        None
    }
}

fn extend(g: &Graph, start: usize, used: u64, path: &mut Vec<usize>) -> bool {
    let n = g.order();
    let last = *path.last().unwrap_or(&start);
    if path.len() == n {
        return g.has_edge(last, start);
    }
    let rows = g.rows();
    let unused = !used & crate::VertexSet::full(n).bits();
    // Every unused vertex other than the next one needs two usable
    // neighbours among the unused vertices, `last` and `start`.
    let ends = (1u64 << last) | (1u64 << start);
    let mut u = unused;
    while u != 0 {
        let w = u.trailing_zeros() as usize;
        u &= u - 1;
        if (rows[w] & (unused | ends)).count_ones() < 2 {
            return false;
        }
    }
    let mut cand: Vec<usize> = crate::VertexSet::from_bits(rows[last] & unused).iter().collect();
    cand.sort_by_key(|&w| ((rows[w] & unused).count_ones(), w));
    for w in cand {
        path.push(w);
        if extend(g, start, used | (1u64 << w), path) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn is_cycle(g: &Graph, c: &[usize]) -> bool {
        let n = g.order();
        let mut seen = 0u64;
        for &v in c {
            seen |= 1 << v;
        }
        c.len() == n
            && seen.count_ones() as usize == n
            && (0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n]))
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5).unwrap();
        let c = c5.hamiltonian_cycle().unwrap().unwrap();
        assert!(is_cycle(&c5, &c));
        assert_eq!(Graph::star(5).unwrap().hamiltonian_cycle().unwrap(), None);
        let k6 = Graph::complete(6).unwrap();
        assert!(is_cycle(&k6, &k6.hamiltonian_cycle().unwrap().unwrap()));
        assert_eq!(Graph::complete(2).unwrap().hamiltonian_cycle(), Err(Error::TooSmall { order: 2, min: 3 }));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut edges = alloc::vec::Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let p = Graph::from_edges(10, edges).unwrap();
        assert_eq!(p.hamiltonian_cycle().unwrap(), None);
        // removing any vertex leaves a Hamiltonian graph
        let (h, _) = p.induced_subgraph(crate::VertexSet::full(10) - crate::VertexSet::singleton(0)).unwrap();
        assert!(is_cycle(&h, &h.hamiltonian_cycle().unwrap().unwrap()));
    }

    #[test]
    fn complete_bipartite() {
        // K_{3,3} is Hamiltonian, K_{2,3} is not
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(is_cycle(&k33, &k33.hamiltonian_cycle().unwrap().unwrap()));
        let k23 = Graph::from_edges(5, (0..2).flat_map(|a| (2..5).map(move |b| (a, b)))).unwrap();
        assert_eq!(k23.hamiltonian_cycle().unwrap(), None);
    }
}
