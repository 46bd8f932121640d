//! Exact generalized local connectivity.
//!
//! `kappa(S)` and `lambda(S)` are computed by sandwiching: greedy packings
//! give a lower bound, counting and flow arguments an upper bound, and the
//! exact search closes the gap one tree count at a time. A terminal set
//! covering every vertex reduces to spanning tree packing.

mod bounds;
mod greedy;
mod heuristic;
mod profile;
mod solver;

pub use bounds::{
    flow_bound, lemma4_bound, lemma56_bounds_for, lemma56_upper_bounds, min_terminal_degree,
    second_min_degree, upper_bound, vertex_counting_bound, ClauseBound, Lemma56Clause,
};
pub use greedy::{greedy_star_tree, peel_lower_bound};
pub use profile::{k_subsets, max_at_least, profile, ConnectivityProfile};

use crate::spanning::max_spanning_tree_packing;
use crate::{Error, Graph, Mode, PackingCertificate, Result, VertexSet};

/// Default node budget for one exact computation.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub(crate) fn check_query(g: &Graph, s: VertexSet) -> Result<()> {
    g.check_set(s)?;
    if s.len() < 2 {
        return Err(Error::TooFewTerminals(s.len()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Shared state for the exact computations on one terminal set.
pub(crate) struct Query<'a> {
    g: &'a Graph,
    s: VertexSet,
    mode: Mode,
    budget: u64,
    pub(crate) nodes: u64,
    upper: Option<usize>,
    lower: Option<PackingCertificate>,
}

impl<'a> Query<'a> {
    pub(crate) fn new(g: &'a Graph, s: VertexSet, mode: Mode, budget: u64) -> Self {
        Query { g, s, mode, budget, nodes: 0, upper: None, lower: None }
    }

    fn spanning(&self) -> bool {
        self.s.len() == self.g.order()
    }

    pub(crate) fn upper(&mut self) -> Result<usize> {
        if let Some(u) = self.upper {
            return Ok(u);
        }
        let u = if self.spanning() {
            self.lower()?.len()
        } else {
            upper_bound(self.g, self.s, self.mode)?
        };
        self.upper = Some(u);
        Ok(u)
    }

    pub(crate) fn lower(&mut self) -> Result<&PackingCertificate> {
        if self.lower.is_none() {
            let cert = if self.spanning() {
                let (_, mut cert) = max_spanning_tree_packing(self.g)?;
                cert.mode = self.mode;
                cert
            } else {
                heuristic::lower_bound(self.g, self.s, self.mode)?
            };
            self.lower = Some(cert);
        }
        Ok(self.lower.as_ref().unwrap_or_else(|| unreachable!()))
    }

    /// A packing of `t` trees, or `None` if there is none.
    pub(crate) fn at_least(&mut self, t: usize) -> Result<Option<PackingCertificate>> {
        if t == 0 {
            return Ok(Some(PackingCertificate::new(self.mode, self.s, alloc::vec::Vec::new())));
        }
        if t > self.upper()? {
            return Ok(None);
        }
        let lower = self.lower()?;
        if lower.len() >= t {
            let mut cert = lower.clone();
            cert.trees.truncate(t);
            return Ok(Some(cert));
        }
        let found = solver::decide(self.g, self.s, self.mode, t, self.budget, &mut self.nodes)?;
        if let Some(cert) = &found {
            self.lower = Some(cert.clone());
        }
        Ok(found)
    }

    /// Exact value, climbing from the greedy bound.
    pub(crate) fn exact(&mut self) -> Result<(usize, PackingCertificate)> {
        let upper = self.upper()?;
        let mut best = self.lower()?.clone();
        while best.len() < upper {
            match self.at_least(best.len() + 1)? {
                Some(cert) => best = cert,
                None => break,
            }
        }
        Ok((best.len(), best))
    }
}

/// Maximum number of disjoint `S`-trees in the given mode, with a packing
/// attaining it. Fails with [`Error::BudgetExhausted`] if the search needs
/// more than `budget` nodes.
pub fn steiner_packing(g: &Graph, s: VertexSet, mode: Mode, budget: u64) -> Result<(usize, PackingCertificate)> {
    check_query(g, s)?;
    Query::new(g, s, mode, budget).exact()
}

/// `t` disjoint `S`-trees if they exist.
pub fn has_packing(g: &Graph, s: VertexSet, mode: Mode, t: usize, budget: u64) -> Result<Option<PackingCertificate>> {
    check_query(g, s)?;
    Query::new(g, s, mode, budget).at_least(t)
}

/// `kappa(S)`: the maximum number of internally disjoint `S`-trees.
pub fn kappa_s(g: &Graph, s: VertexSet) -> Result<(usize, PackingCertificate)> {
    steiner_packing(g, s, Mode::Vertex, DEFAULT_BUDGET)
}

/// `lambda(S)`: the maximum number of edge-disjoint `S`-trees.
pub fn lambda_s(g: &Graph, s: VertexSet) -> Result<(usize, PackingCertificate)> {
    steiner_packing(g, s, Mode::Edge, DEFAULT_BUDGET)
}
