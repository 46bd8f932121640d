//! The exact solver against a naive one: list every minimal S-tree as an
//! edge mask, then find the largest pairwise compatible family.

use proptest::prelude::*;
use steiner_pack_core::steiner::{kappa_s, lambda_s};
use steiner_pack_core::{Graph, Mode, VertexSet};

/// Edge subsets that form a tree containing `s` whose leaves are terminals.
fn minimal_trees(g: &Graph, s: u64) -> Vec<(u64, u64)> {
    let edges = g.edge_list();
    let m = edges.len();
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let mut verts = 0u64;
        let mut deg = [0u8; 64];
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                verts |= 1 << e.u() | 1 << e.v();
                deg[e.u()] += 1;
                deg[e.v()] += 1;
            }
        }
        if verts & s != s || mask.count_ones() + 1 != verts.count_ones() {
            continue;
        }
        // leaves must be terminals
        if (0..g.order()).any(|v| deg[v] == 1 && s >> v & 1 == 0) {
            continue;
        }
        // connected: union-find over chosen edges
        let mut parent: Vec<usize> = (0..g.order()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut ok = true;
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
                if a == b {
                    ok = false;
                    break;
                }
                parent[a] = b;
            }
        }
        if ok {
            out.push((mask, verts & !s));
        }
    }
    out
}

fn best(trees: &[(u64, u64)], from: usize, used_e: u64, used_v: u64, vertex: bool) -> usize {
    let mut top = 0;
    for i in from..trees.len() {
        let (e, v) = trees[i];
        if e & used_e != 0 || (vertex && v & used_v != 0) {
            continue;
        }
        top = top.max(1 + best(trees, i + 1, used_e | e, used_v | v, vertex));
    }
    top
}

fn naive(g: &Graph, s: VertexSet, mode: Mode) -> usize {
    let trees = minimal_trees(g, s.bits());
    best(&trees, 0, 0, 0, mode == Mode::Vertex)
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (4usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_filter_map("connected with few edges", |(n, bits)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::from_edges(n, edges).ok()?;
            (g.is_connected() && g.edge_count() <= 16).then_some(g)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn exact_matches_naive(g in graph_strategy(), pick in any::<u64>()) {
        let n = g.order();
        let mut s = VertexSet::from_bits(pick & ((1 << n) - 1));
        if s.len() < 2 {
            s = VertexSet::from_iter([0, n - 1]);
        }
        let (k, kc) = kappa_s(&g, s).unwrap();
        let (l, lc) = lambda_s(&g, s).unwrap();
        prop_assert_eq!(kc.validate(&g), Ok(()));
        prop_assert_eq!(lc.validate(&g), Ok(()));
        prop_assert_eq!(k, naive(&g, s, Mode::Vertex));
        prop_assert_eq!(l, naive(&g, s, Mode::Edge));
    }
}
