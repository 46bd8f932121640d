use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result, VertexSet};

/// Largest order accepted by the partition enumerator (Bell(13) partitions).
pub const PARTITION_CAP: usize = 13;

/// A partition of `V(G)` into nonempty blocks, sorted by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<VertexSet>) -> Result<Partition> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block"));
            }
            if !(b & seen).is_empty() {
                return Err(Error::InvalidPartition("blocks overlap"));
            }
            seen = seen | b;
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidPartition("blocks do not cover the vertex set"));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(Partition { blocks })
    }

    /// Partition from a restricted growth string: vertex `v` goes to block `rgs[v]`.
    pub fn from_labels(labels: &[usize]) -> Result<Partition> {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![VertexSet::EMPTY; k];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].insert(v);
        }
        Partition::new(labels.len(), blocks)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { blocks: (0..n).map(VertexSet::singleton).collect() }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// `||G / P||`: the number of edges joining distinct blocks.
pub fn cross_edge_count(g: &Graph, p: &Partition) -> Result<usize> {
    let covered = p.blocks.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
    if covered != g.vertices() {
        return Err(Error::InvalidPartition("partition does not match the graph order"));
    }
    let inner: usize = p.blocks.iter().map(|&b| g.inner_edge_count(b)).sum();
    Ok(g.edge_count() - inner)
}

/// Outcome of the partition condition for `l` edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NashWilliams {
    pub holds: bool,
    /// First violating partition in restricted-growth order.
    pub witness: Option<Partition>,
}

/// Checks `||G/P|| >= l (|P| - 1)` over every partition `P` of `V(G)`.
pub fn nash_williams_check(g: &Graph, l: usize) -> Result<NashWilliams> {
    let n = g.order();
    if n > PARTITION_CAP {
        return Err(Error::Cap { what: "partition enumeration", order: n, cap: PARTITION_CAP });
    }
    // The singleton partition is the plain edge-count condition; it is
    // tried before the restricted-growth walk.
    if n >= 2 && g.edge_count() < l * (n - 1) {
        return Ok(NashWilliams { holds: false, witness: Some(Partition::singletons(n)) });
    }
    let mut labels = vec![0usize; n];
    let mut found = None;
    walk(g, &mut labels, &mut Vec::new(), 0, 0, &mut |labels, blocks, cross| {
        if cross < l * (blocks - 1) {
            found = Some(labels.to_vec());
            false
        } else {
            true
        }
    });
    Ok(match found {
        None => NashWilliams { holds: true, witness: None },
        Some(labels) => NashWilliams { holds: false, witness: Some(Partition::from_labels(&labels)?) },
    })
}

/// `min_P floor(||G/P|| / (|P| - 1))` over partitions with at least two
/// blocks; by the Nash-Williams/Tutte theorem this is the spanning tree
/// packing number.
pub fn partition_bound(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall { order: n, min: 2 });
    }
    if n > PARTITION_CAP {
        return Err(Error::Cap { what: "partition enumeration", order: n, cap: PARTITION_CAP });
    }
    let mut best = usize::MAX;
    let mut labels = vec![0usize; n];
    walk(g, &mut labels, &mut Vec::new(), 0, 0, &mut |_, blocks, cross| {
        if blocks >= 2 {
            best = best.min(cross / (blocks - 1));
        }
        best > 0
    });
    Ok(best)
}

/// Visits every restricted growth string in lexicographic order, passing
/// the labels, the block count and the cross edge count. Stops when the
/// visitor returns false; returns false in that case.
fn walk<F>(
    g: &Graph,
    labels: &mut [usize],
    blocks: &mut Vec<u64>,
    v: usize,
    cross: usize,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[usize], usize, usize) -> bool,
{
    let n = g.order();
    if v == n {
        return visit(labels, blocks.len(), cross);
    }
    let earlier = g.rows()[v] & ((1u64 << v) - 1);
    let earlier_count = earlier.count_ones() as usize;
    for b in 0..=blocks.len() {
        let same = if b < blocks.len() { (earlier & blocks[b]).count_ones() as usize } else { 0 };
        labels[v] = b;
        let fresh = b == blocks.len();
        if fresh {
            blocks.push(0);
        }
        blocks[b] |= 1u64 << v;
        let go = walk(g, labels, blocks, v + 1, cross + earlier_count - same, visit);
        blocks[b] &= !(1u64 << v);
        if fresh {
            blocks.pop();
        }
        if !go {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_edge_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(cross_edge_count(&k4, &Partition::singletons(4)).unwrap(), 6);
        let one = Partition::new(4, vec![VertexSet::full(4)]).unwrap();
        assert_eq!(cross_edge_count(&k4, &one).unwrap(), 0);
        let k6 = Graph::complete(6).unwrap();
        let p = Partition::new(6, vec![VertexSet::from_bits(0b111000), VertexSet::from_bits(0b000111)]).unwrap();
        assert_eq!(p.blocks()[0], VertexSet::from_bits(0b111));
        assert_eq!(cross_edge_count(&k6, &p).unwrap(), 9);
        assert!(cross_edge_count(&k6, &Partition::singletons(5)).is_err());
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(3, vec![VertexSet::from_bits(0b011), VertexSet::from_bits(0b110)]).is_err());
        assert!(Partition::new(3, vec![VertexSet::from_bits(0b011)]).is_err());
        assert!(Partition::new(2, vec![VertexSet::from_bits(0b11), VertexSet::EMPTY]).is_err());
    }

    #[test]
    fn counts_all_partitions() {
        // Bell numbers
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877];
        for n in 1..=7 {
            let g = Graph::complete(n).unwrap();
            let mut count = 0;
            walk(&g, &mut vec![0; n], &mut Vec::new(), 0, 0, &mut |_, _, _| {
                count += 1;
                true
            });
            assert_eq!(count, bell[n]);
        }
    }

    #[test]
    fn k4_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(nash_williams_check(&k4, 2).unwrap().holds);
        let r = nash_williams_check(&k4, 3).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Partition::singletons(4)));
        // two K_5 joined by a bridge: 21 >= 2 * 9 edges, but the bridge cut fails
        let mut edges: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        edges.extend(edges.clone().iter().map(|&(a, b)| (a + 5, b + 5)));
        edges.push((4, 5));
        let g = Graph::from_edges(10, edges).unwrap();
        let r = nash_williams_check(&g, 2).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(cross_edge_count(&g, &w).unwrap() < 2 * (w.len() - 1));
        assert_eq!(partition_bound(&k4).unwrap(), 2);
    }

    #[test]
    fn trees_hold_for_one() {
        let p = Graph::path(6).unwrap();
        assert!(nash_williams_check(&p, 1).unwrap().holds);
        assert!(!nash_williams_check(&p, 2).unwrap().holds);
        assert_eq!(partition_bound(&Graph::star(7).unwrap()).unwrap(), 1);
    }

    #[test]
    fn cap() {
        let g = Graph::complete(14).unwrap();
        assert!(matches!(nash_williams_check(&g, 1), Err(Error::Cap { .. })));
    }
}
