//! Degree and edge-count conditions that guarantee spanning tree packings.

use crate::{choose2, Graph};

/// A sufficient condition for a spanning tree packing.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Order `n >= 5`, `1 <= l <= (n - 4) / 2`, `e >= C(n-1, 2) + l`,
    /// `delta >= l + 1`; promises `l + 1` trees.
    Lemma2(usize),
    /// `H` of order `n - 1` with `n >= 5` odd, `e(H) >= C(n-2, 2)`,
    /// `delta >= (n-3)/2`, degree-`(n-3)/2` vertices pairwise nonadjacent;
    /// promises `(n-3)/2` trees.
    Lemma7Part1,
    /// `H` of order `n - 1` with `n >= 7` even,
    /// `e(H) >= C(n-2, 2) - (n-2)/2`, `delta >= (n-4)/2`,
    /// degree-`(n-4)/2` vertices pairwise nonadjacent; promises `(n-4)/2`.
    Lemma7Part2,
    /// `H` of order `n - 1` with `n >= 12`, `1 <= l <= (n-5)/2`,
    /// `e(H) = C(n-2, 2) + 2l - (n-1)`, `delta >= l`, degree-`l` vertices
    /// pairwise nonadjacent; promises `l` trees.
    Lemma10(usize),
}

/// Outcome of a hypothesis check.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Sufficiency {
    pub hypothesis_holds: bool,
    /// Number of edge-disjoint spanning trees promised when the hypothesis holds.
    pub promised: Option<usize>,
}

impl Sufficiency {
    fn from(holds: bool, promised: usize) -> Self {
        Sufficiency { hypothesis_holds: holds, promised: holds.then_some(promised) }
    }
}

/// No two vertices of degree `d` are adjacent.
fn degree_class_independent(g: &Graph, d: usize) -> bool {
    let class: u64 = (0..g.order()).filter(|&v| g.deg(v) == d).fold(0, |a, v| a | 1 << v);
    crate::VertexSet::from_bits(class).iter().all(|v| g.rows()[v] & class == 0)
}

/// Evaluates the hypothesis of `condition` on `g` exactly as stated.
/// Disconnected graphs never satisfy a hypothesis.
pub fn check_sufficiency(g: &Graph, condition: Condition) -> Sufficiency {
    let connected = g.is_connected();
    let e = g.edge_count();
    let delta = g.min_degree();
    match condition {
        Condition::Lemma2(l) => {
            let n = g.order();
            let holds = connected
                && n >= 5
                && l >= 1
                && l <= (n - 4) / 2
                && e >= choose2(n - 1) + l
                && delta >= l + 1;
            Sufficiency::from(holds, l + 1)
        }
        Condition::Lemma7Part1 => {
            let n = g.order() + 1;
            let d = (n.saturating_sub(3)) / 2;
            let holds = connected
                && n >= 5
                && n % 2 == 1
                && e >= choose2(n - 2)
                && delta >= d
                && degree_class_independent(g, d);
            Sufficiency::from(holds, d)
        }
        Condition::Lemma7Part2 => {
            let n = g.order() + 1;
            let d = (n.saturating_sub(4)) / 2;
            let holds = connected
                && n >= 7
                && n % 2 == 0
                && e + (n - 2) / 2 >= choose2(n - 2)
                && delta >= d
                && degree_class_independent(g, d);
            Sufficiency::from(holds, d)
        }
        Condition::Lemma10(l) => {
            let n = g.order() + 1;
            let holds = connected
                && n >= 12
                && l >= 1
                && l <= (n - 5) / 2
                && e + (n - 1) == choose2(n - 2) + 2 * l
                && delta >= l
                && degree_class_independent(g, l);
            Sufficiency::from(holds, l)
        }
    }
}
