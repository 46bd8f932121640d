//! `kappa_k`, `kappa-bar_k`, `lambda_k`, `lambda-bar_k`: extremes of
//! `kappa(S)` / `lambda(S)` over all `k`-subsets.

use super::{check_query, Query};
use crate::{Error, Graph, Mode, PackingCertificate, Result, VertexSet};

/// Minimum and maximum of `kappa(S)` (vertex mode) or `lambda(S)` (edge
/// mode) over all `k`-sets, with the first set attaining each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub k: usize,
    pub mode: Mode,
    pub min_value: usize,
    pub max_value: usize,
    pub argmin_set: VertexSet,
    pub argmax_set: VertexSet,
    pub min_certificate: PackingCertificate,
    pub max_certificate: PackingCertificate,
}

/// All `k`-subsets of `0..n` in lexicographic order of their sorted members.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut cur: Option<alloc::vec::Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    core::iter::from_fn(move || {
        let c = cur.as_mut()?;
        let out: VertexSet = c.iter().copied().collect();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.order() {
        return Err(Error::InvalidParameter("k must satisfy 2 <= k <= n"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Min and max over all `k`-sets. Sets whose bounds cannot move either
/// extreme are not solved exactly. Each exact computation gets `budget`
/// search nodes.
pub fn profile(g: &Graph, k: usize, mode: Mode, budget: u64) -> Result<ConnectivityProfile> {
    check_k(g, k)?;
    let ceiling = g.order() - k.div_ceil(2);
    let mut sets = k_subsets(g.order(), k);
    let first = sets.next().ok_or(Error::InvalidParameter("no k-subsets"))?;
    check_query(g, first)?;
    let (v, cert) = Query::new(g, first, mode, budget).exact()?;
    let mut p = ConnectivityProfile {
        k,
        mode,
        min_value: v,
        max_value: v,
        argmin_set: first,
        argmax_set: first,
        min_certificate: cert.clone(),
        max_certificate: cert,
    };
    for s in sets {
        if p.min_value <= 1 && p.max_value >= ceiling {
            break;
        }
        let mut q = Query::new(g, s, mode, budget);
        let upper = q.upper()?;
        let lower = q.lower()?.len();
        let mut exact = false;
        // can this set go below the minimum?
        if lower < p.min_value && (upper < p.min_value || q.at_least(p.min_value)?.is_none()) {
            exact = true;
        }
        // can it go above the maximum?
        if !exact && upper > p.max_value && q.at_least(p.max_value + 1)?.is_some() {
            exact = true;
        }
        if !exact {
            continue;
        }
        let (v, cert) = q.exact()?;
        if v < p.min_value {
            p.min_value = v;
            p.argmin_set = s;
            p.min_certificate = cert.clone();
        }
        if v > p.max_value {
            p.max_value = v;
            p.argmax_set = s;
            p.max_certificate = cert;
        }
    }
    Ok(p)
}

/// The first `k`-set (in lexicographic order) with `t` disjoint trees, and
/// the trees; `None` when the maximum over all `k`-sets is below `t`.
pub fn max_at_least(
    g: &Graph,
    k: usize,
    mode: Mode,
    t: usize,
    budget: u64,
) -> Result<Option<(VertexSet, PackingCertificate)>> {
    check_k(g, k)?;
    for s in k_subsets(g.order(), k) {
        let mut q = Query::new(g, s, mode, budget);
        if let Some(cert) = q.at_least(t)? {
            return Ok(Some((s, cert)));
        }
    }
    Ok(None)
}
