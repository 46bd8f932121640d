//! Cheap packings that seed the exact search with a lower bound.

use alloc::vec::Vec;

use crate::spanning::{max_spanning_tree_packing, pack_induced};
use crate::{Edge, Graph, Mode, PackingCertificate, Result, TreeCertificate, VertexSet};

/// Grows one `S`-tree in `rows` by repeatedly attaching the nearest
/// unreached terminal along a shortest path. `blocked` vertices may not be
/// used. Returns the tree edges, or `None` if `S` is not connected.
fn shortest_path_tree(rows: &[u64], terms: u64, blocked: u64) -> Option<Vec<Edge>> {
    let root = terms.trailing_zeros() as usize;
    let mut tree = Vec::new();
    let mut inside = 1u64 << root;
    let mut parent = [u8::MAX; 64];
    let mut queue = [0u8; 64];
    while terms & !inside != 0 {
        let mut seen = inside;
        let (mut head, mut tail) = (0usize, 0usize);
        for v in VertexSet::from_bits(inside) {
            queue[tail] = v as u8;
            tail += 1;
        }
        let mut hit = None;
        'bfs: while head < tail {
            let v = queue[head] as usize;
            head += 1;
            let mut nb = rows[v] & !seen & !blocked;
            seen |= nb;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                parent[w] = v as u8;
                if terms >> w & 1 == 1 {
                    hit = Some(w);
                    break 'bfs;
                }
                queue[tail] = w as u8;
                tail += 1;
            }
        }
        let mut w = hit?;
        while inside >> w & 1 == 0 {
            let p = parent[w] as usize;
            tree.push(Edge::new_unchecked(w, p));
            inside |= 1u64 << w;
            w = p;
        }
    }
    Some(tree)
}

/// Removes trees greedily from what is left of the graph.
fn greedy_fill(rows: &mut [u64], s: VertexSet, mode: Mode, blocked: &mut u64, out: &mut Vec<TreeCertificate>) {
    while let Some(edges) = shortest_path_tree(rows, s.bits(), *blocked) {
        for e in &edges {
            let (u, v) = e.endpoints();
            rows[u] &= !(1u64 << v);
            rows[v] &= !(1u64 << u);
            if mode == Mode::Vertex {
                for x in [u, v] {
                    if !s.contains(x) {
                        *blocked |= 1u64 << x;
                    }
                }
            }
        }
        out.push(TreeCertificate::new(edges, s));
    }
}

fn remove_trees(rows: &mut [u64], trees: &[TreeCertificate]) {
    for t in trees {
        for e in &t.edges {
            let (u, v) = e.endpoints();
            rows[u] &= !(1u64 << v);
            rows[v] &= !(1u64 << u);
        }
    }
}

/// Prunes a spanning tree down to the subtree needed for `S`.
fn prune_to(tree: &TreeCertificate, s: VertexSet, n: usize) -> TreeCertificate {
    let mut rows = alloc::vec![0u64; n];
    for e in &tree.edges {
        rows[e.u()] |= 1u64 << e.v();
        rows[e.v()] |= 1u64 << e.u();
    }
    let root = s.first().unwrap_or(0);
    TreeCertificate::new(super::solver::steiner_subtree(&rows, root, s.bits()), s)
}

/// Best of a few greedy packings. `S` must be connected in `G`.
pub(crate) fn lower_bound(g: &Graph, s: VertexSet, mode: Mode) -> Result<PackingCertificate> {
    let n = g.order();
    let mut best: Vec<TreeCertificate> = Vec::new();

    // plain greedy
    {
        let mut rows = g.rows().to_vec();
        let mut blocked = 0u64;
        let mut trees = Vec::new();
        greedy_fill(&mut rows, s, mode, &mut blocked, &mut trees);
        if trees.len() > best.len() {
            best = trees;
        }
    }
    // spanning trees of G[S] first
    {
        let (_, mut trees) = pack_induced(g, s)?;
        let mut rows = g.rows().to_vec();
        remove_trees(&mut rows, &trees);
        let mut blocked = 0u64;
        greedy_fill(&mut rows, s, mode, &mut blocked, &mut trees);
        if trees.len() > best.len() {
            best = trees;
        }
    }
    // spanning trees of G, pruned
    if mode == Mode::Edge && g.is_connected() && n >= 2 {
        let (_, cert) = max_spanning_tree_packing(g)?;
        let mut trees: Vec<TreeCertificate> = cert.trees.iter().map(|t| prune_to(t, s, n)).collect();
        let mut rows = g.rows().to_vec();
        remove_trees(&mut rows, &trees);
        let mut blocked = 0u64;
        greedy_fill(&mut rows, s, mode, &mut blocked, &mut trees);
        if trees.len() > best.len() {
            best = trees;
        }
    }
    // one vertex outside S: star tree through it, then G[S]
    if s.len() + 1 == n && g.is_connected() {
        let v = (g.vertices() - s).first().unwrap_or_else(|| unreachable!());
        let (_, cert) = super::peel_lower_bound(g, v)?;
        let mut trees = cert.trees;
        let mut rows = g.rows().to_vec();
        remove_trees(&mut rows, &trees);
        let uses_v = trees.iter().any(|t| t.vertices().contains(v));
        let mut blocked = if mode == Mode::Vertex && uses_v { 1u64 << v } else { 0 };
        greedy_fill(&mut rows, s, mode, &mut blocked, &mut trees);
        if trees.len() > best.len() {
            best = trees;
        }
    }
    Ok(PackingCertificate::new(mode, s, best))
}
