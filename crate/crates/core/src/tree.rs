//! Checkable witnesses: single Steiner trees and packings of them.

use alloc::vec::Vec;
use core::fmt;

use crate::{Edge, Graph, VertexSet};

/// Disjointness requirement between trees of a packing.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Internally disjoint: no shared edges, pairwise vertex intersection exactly `S`.
    Vertex,
    /// Edge-disjoint only.
    Edge,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One tree given by its edges, together with the terminals it must span.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeCertificate {
    pub edges: Vec<Edge>,
    pub terminals: VertexSet,
}

/// Why a [`TreeCertificate`] was rejected.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TreeDefect {
    NoEdges,
    DuplicateEdge(Edge),
    MissingEdge(Edge),
    Cycle,
    Disconnected,
    TerminalNotSpanned(usize),
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::NoEdges => f.write_str("tree has no edges"),
            TreeDefect::DuplicateEdge(e) => write!(f, "edge {e} listed twice"),
            TreeDefect::MissingEdge(e) => write!(f, "edge {e} is not in the graph"),
            TreeDefect::Cycle => f.write_str("edge set contains a cycle"),
            TreeDefect::Disconnected => f.write_str("edge set is disconnected"),
            TreeDefect::TerminalNotSpanned(v) => write!(f, "terminal {v} is not spanned"),
        }
    }
}

impl TreeCertificate {
    /// Builds a certificate with its edges sorted.
    pub fn new(mut edges: Vec<Edge>, terminals: VertexSet) -> Self {
        edges.sort_unstable();
        TreeCertificate { edges, terminals }
    }

    /// Vertices touched by the edges.
    pub fn vertices(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for e in &self.edges {
            s.insert(e.u());
            s.insert(e.v());
        }
        s
    }

    pub fn validate(&self, g: &Graph) -> Result<(), TreeDefect> {
        if self.edges.is_empty() {
            return Err(TreeDefect::NoEdges);
        }
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(TreeDefect::DuplicateEdge(w[0]));
            }
        }
        for &e in &self.edges {
            if !g.has_edge(e.u(), e.v()) {
                return Err(TreeDefect::MissingEdge(e));
            }
        }
        let verts = self.vertices();
        // union-find over at most 64 labels
        let mut parent: [u8; 64] = core::array::from_fn(|i| i as u8);
        fn find(p: &mut [u8; 64], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        for &e in &self.edges {
            let a = find(&mut parent, e.u());
            let b = find(&mut parent, e.v());
            if a == b {
                return Err(TreeDefect::Cycle);
            }
            parent[a] = b as u8;
        }
        if self.edges.len() + 1 != verts.len() {
            return Err(TreeDefect::Disconnected);
        }
        if let Some(v) = (self.terminals - verts).first() {
            return Err(TreeDefect::TerminalNotSpanned(v));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

/// A family of trees with a common terminal set and a disjointness mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PackingCertificate {
    pub mode: Mode,
    pub terminals: VertexSet,
    pub trees: Vec<TreeCertificate>,
}

/// Why a [`PackingCertificate`] was rejected.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PackingDefect {
    Tree { index: usize, defect: TreeDefect },
    TerminalMismatch { index: usize },
    SharedEdge { first: usize, second: usize, edge: Edge },
    SharedVertex { first: usize, second: usize, vertex: usize },
}

impl fmt::Display for PackingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingDefect::Tree { index, defect } => write!(f, "tree {index}: {defect}"),
            PackingDefect::TerminalMismatch { index } => {
                write!(f, "tree {index} has a different terminal set")
            }
            PackingDefect::SharedEdge { first, second, edge } => {
                write!(f, "trees {first} and {second} share edge {edge}")
            }
            PackingDefect::SharedVertex { first, second, vertex } => {
                write!(f, "trees {first} and {second} share non-terminal vertex {vertex}")
            }
        }
    }
}

impl PackingCertificate {
    pub fn new(mode: Mode, terminals: VertexSet, trees: Vec<TreeCertificate>) -> Self {
        PackingCertificate { mode, terminals, trees }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PackingDefect> {
        for (index, t) in self.trees.iter().enumerate() {
            if t.terminals != self.terminals {
                return Err(PackingDefect::TerminalMismatch { index });
            }
            t.validate(g).map_err(|defect| PackingDefect::Tree { index, defect })?;
        }
        let n = g.order();
        let mut owner: Vec<Option<usize>> = alloc::vec![None; n * n];
        for (i, t) in self.trees.iter().enumerate() {
            for &e in &t.edges {
                let slot = &mut owner[e.u() * n + e.v()];
                if let Some(j) = *slot {
                    return Err(PackingDefect::SharedEdge { first: j, second: i, edge: e });
                }
                *slot = Some(i);
            }
        }
        if self.mode == Mode::Vertex {
            let mut vowner: Vec<Option<usize>> = alloc::vec![None; n];
            for (i, t) in self.trees.iter().enumerate() {
                for v in t.vertices() - self.terminals {
                    if let Some(j) = vowner[v] {
                        return Err(PackingDefect::SharedVertex { first: j, second: i, vertex: v });
                    }
                    vowner[v] = Some(i);
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn tree_examples() {
        let k4 = Graph::complete(4).unwrap();
        let all = VertexSet::full(4);
        let star = TreeCertificate::new(vec![e(0, 1), e(0, 2), e(0, 3)], all);
        assert_eq!(star.validate(&k4), Ok(()));
        let tri = TreeCertificate::new(vec![e(0, 1), e(1, 2), e(0, 2)], all);
        assert_eq!(tri.validate(&k4), Err(TreeDefect::Cycle));
        let p4 = Graph::path(4).unwrap();
        let path = TreeCertificate::new(vec![e(0, 1), e(1, 2), e(2, 3)], VertexSet::from_iter([0, 3]));
        assert!(path.is_valid(&p4));
    }

    #[test]
    fn tree_defects() {
        let p4 = Graph::path(4).unwrap();
        let s = VertexSet::from_iter([0, 3]);
        assert_eq!(TreeCertificate::new(vec![], s).validate(&p4), Err(TreeDefect::NoEdges));
        assert_eq!(
            TreeCertificate::new(vec![e(0, 3)], s).validate(&p4),
            Err(TreeDefect::MissingEdge(e(0, 3)))
        );
        assert_eq!(
            TreeCertificate::new(vec![e(0, 1), e(2, 3)], s).validate(&p4),
            Err(TreeDefect::Disconnected)
        );
        assert_eq!(
            TreeCertificate::new(vec![e(0, 1), e(1, 2)], s).validate(&p4),
            Err(TreeDefect::TerminalNotSpanned(3))
        );
        assert_eq!(
            TreeCertificate::new(vec![e(0, 1), e(0, 1)], s).validate(&p4),
            Err(TreeDefect::DuplicateEdge(e(0, 1)))
        );
    }

    #[test]
    fn packing_modes() {
        // two paths 0-2-1 and 0-3-1 in K_4 with S = {0,1}
        let k4 = Graph::complete(4).unwrap();
        let s = VertexSet::from_iter([0, 1]);
        let a = TreeCertificate::new(vec![e(0, 2), e(1, 2)], s);
        let b = TreeCertificate::new(vec![e(0, 3), e(1, 3)], s);
        let c = TreeCertificate::new(vec![e(0, 1)], s);
        let p = PackingCertificate::new(Mode::Vertex, s, vec![a.clone(), b, c]);
        assert_eq!(p.validate(&k4), Ok(()));

        // 0-2-1 and 0-1... plus 0-3-2-? share vertex 2 in vertex mode only
        let d = TreeCertificate::new(vec![e(0, 3), e(2, 3), e(1, 3)], s);
        let q = PackingCertificate::new(Mode::Edge, s, vec![a.clone(), d.clone()]);
        assert!(q.is_valid(&k4));
        let q = PackingCertificate::new(Mode::Vertex, s, vec![a.clone(), d]);
        assert_eq!(
            q.validate(&k4),
            Err(PackingDefect::SharedVertex { first: 0, second: 1, vertex: 2 })
        );
        let q = PackingCertificate::new(Mode::Edge, s, vec![a.clone(), a]);
        assert!(matches!(q.validate(&k4), Err(PackingDefect::SharedEdge { .. })));
    }
}
