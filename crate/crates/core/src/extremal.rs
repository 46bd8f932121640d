//! Brute-force `f(n; kappa-bar_k <= l)` and `g(n; lambda-bar_k <= l)`, and
//! exhaustive checks of the basic inequalities between the parameters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::enumerate::{enumerate_with, Filter};
use crate::exec::{Executor, Sequential};
use crate::families::{characterization_predicate, f_closed_form};
use crate::spanning::max_spanning_tree_packing;
use crate::steiner::{max_at_least, profile};
use crate::{choose2, Error, Graph, Mode, Result};

/// Largest order for [`brute_force_extremal`].
pub const EXTREMAL_CAP: usize = 8;

/// Largest order for [`verify_observations`].
pub const OBSERVATION_CAP: usize = 7;

/// Outcome of one brute-force extremal computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub mode: Mode,
    /// Largest edge count of a connected graph with the parameter at most `l`.
    pub brute_value: usize,
    pub formula_value: Option<usize>,
    pub formula_regime: Option<&'static str>,
    /// All extremal graphs up to isomorphism, canonical, ascending.
    pub witnesses: Vec<Graph>,
    pub characterization_match: Option<bool>,
    pub graphs_scanned: usize,
}

impl ExtremalReport {
    /// True unless a closed form applies and disagrees.
    pub fn formula_agrees(&self) -> bool {
        self.formula_value.is_none_or(|f| f == self.brute_value)
    }
}

/// Whether `kappa-bar_k(g) <= l` (vertex mode) or `lambda-bar_k(g) <= l`.
pub fn is_feasible(g: &Graph, k: usize, l: usize, mode: Mode, budget: u64) -> Result<bool> {
    if k == g.order() {
        return Ok(max_spanning_tree_packing(g)?.0 <= l);
    }
    Ok(max_at_least(g, k, mode, l + 1, budget)?.is_none())
}

fn check_params(n: usize, k: usize, l: usize) -> Result<()> {
    if n > EXTREMAL_CAP {
        return Err(Error::Cap { what: "extremal search", order: n, cap: EXTREMAL_CAP });
    }
    if k < 3 || k > n {
        return Err(Error::InvalidParameter("needs 3 <= k <= n"));
    }
    if l < 1 || l > n - k.div_ceil(2) {
        return Err(Error::InvalidParameter("needs 1 <= l <= n - ceil(k/2)"));
    }
    Ok(())
}

/// Scans connected graphs of order `n` by descending edge count and stops
/// at the first count with a graph whose parameter is at most `l`.
/// Deleting edges never raises the parameter, so that count is the maximum.
pub fn brute_force_extremal(n: usize, k: usize, l: usize, mode: Mode, budget: u64) -> Result<ExtremalReport> {
    brute_force_extremal_with(n, k, l, mode, budget, &Sequential)
}

/// [`brute_force_extremal`] with each edge-count level evaluated by `exec`.
pub fn brute_force_extremal_with<E: Executor>(
    n: usize,
    k: usize,
    l: usize,
    mode: Mode,
    budget: u64,
    exec: &E,
) -> Result<ExtremalReport> {
    check_params(n, k, l)?;
    let graphs = enumerate_with(n, Filter::Connected, None, exec)?;
    let mut levels: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in graphs {
        levels.entry(g.edge_count()).or_default().push(g);
    }
    let mut scanned = 0;
    for (&edges, level) in levels.iter().rev() {
        scanned += level.len();
        let verdicts = exec.map(level.len(), |i| is_feasible(&level[i], k, l, mode, budget));
        let mut witnesses = Vec::new();
        for (g, ok) in level.iter().zip(verdicts) {
            if ok? {
                witnesses.push(g.clone());
            }
        }
        if witnesses.is_empty() {
            continue;
        }
        let formula = f_closed_form(n, k, l, mode).ok();
        let mut report = ExtremalReport {
            n,
            k,
            l,
            mode,
            brute_value: edges,
            formula_value: formula.map(|f| f.value),
            formula_regime: formula.map(|f| f.regime),
            witnesses,
            characterization_match: None,
            graphs_scanned: scanned,
        };
        report.characterization_match = match verify_characterization(&report) {
            Ok(m) => Some(m),
            Err(Error::UnsupportedRegime(_)) => None,
            Err(e) => return Err(e),
        };
        return Ok(report);
    }
    // trees are always feasible, so some level qualifies
    Err(Error::InvalidParameter("no feasible graph"))
}

/// Whether the witnesses are exactly the characterized family members with
/// `brute_value` edges, up to isomorphism.
pub fn verify_characterization(report: &ExtremalReport) -> Result<bool> {
    let (n, k, l, mode) = (report.n, report.k, report.l, report.mode);
    // probe the regime first
    characterization_predicate(n, l, k, mode, &Graph::complete(n)?)?;
    let mut predicted = BTreeSet::new();
    for g in enumerate_with(n, Filter::Connected, Some(report.brute_value), &Sequential)? {
        if g.edge_count() == report.brute_value && characterization_predicate(n, l, k, mode, &g)? {
            predicted.insert(g);
        }
    }
    let found: BTreeSet<Graph> = report.witnesses.iter().map(canonical_form).collect();
    Ok(found == predicted)
}

/// All four extremes for one `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub kappa_min: usize,
    pub kappa_max: usize,
    pub lambda_min: usize,
    pub lambda_max: usize,
}

/// One failed inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub graph: Graph,
    /// The supergraph, for monotonicity failures.
    pub supergraph: Option<Graph>,
    pub k: usize,
    pub rule: &'static str,
}

/// `kappa_k`, `kappa-bar_k`, `lambda_k`, `lambda-bar_k` of `g` for `k` in `3..=n`.
pub fn all_extremes(g: &Graph, budget: u64) -> Result<Vec<Extremes>> {
    (3..=g.order())
        .map(|k| {
            let v = profile(g, k, Mode::Vertex, budget)?;
            let e = profile(g, k, Mode::Edge, budget)?;
            Ok(Extremes { kappa_min: v.min_value, kappa_max: v.max_value, lambda_min: e.min_value, lambda_max: e.max_value })
        })
        .collect()
}

/// Checks, on every connected graph of order `n`:
/// `kappa_k <= lambda_k`, `kappa-bar_k <= lambda-bar_k`, `kappa_k <= kappa-bar_k`,
/// `lambda_k <= lambda-bar_k`, `1 <= kappa-bar_k` and
/// `lambda-bar_k <= n - ceil(k/2)`; and that adding an edge never lowers any
/// of the four parameters. Returns every violation.
pub fn verify_observations(n: usize, budget: u64) -> Result<Vec<Violation>> {
    verify_observations_with(n, budget, &Sequential)
}

pub fn verify_observations_with<E: Executor>(n: usize, budget: u64, exec: &E) -> Result<Vec<Violation>> {
    if n > OBSERVATION_CAP {
        return Err(Error::Cap { what: "observation check", order: n, cap: OBSERVATION_CAP });
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let graphs = enumerate_with(n, Filter::Connected, None, exec)?;
    let computed = exec.map(graphs.len(), |i| all_extremes(&graphs[i], budget));
    let mut table: BTreeMap<&Graph, Vec<Extremes>> = BTreeMap::new();
    for (g, x) in graphs.iter().zip(computed) {
        table.insert(g, x?);
    }
    let mut out = Vec::new();
    for (g, xs) in &table {
        for (i, x) in xs.iter().enumerate() {
            let k = i + 3;
            let ceiling = n - k.div_ceil(2);
            let checks = [
                (x.kappa_min <= x.lambda_min, "kappa_k <= lambda_k"),
                (x.kappa_max <= x.lambda_max, "kappa-bar_k <= lambda-bar_k"),
                (x.kappa_min <= x.kappa_max, "kappa_k <= kappa-bar_k"),
                (x.lambda_min <= x.lambda_max, "lambda_k <= lambda-bar_k"),
                (x.kappa_min >= 1, "1 <= kappa_k"),
                (x.lambda_max <= ceiling, "lambda-bar_k <= n - ceil(k/2)"),
            ];
            for (ok, rule) in checks {
                if !ok {
                    out.push(Violation { graph: (*g).clone(), supergraph: None, k, rule });
                }
            }
        }
        if g.edge_count() == choose2(n) {
            continue;
        }
        for e in g.missing_edges() {
            let sup = canonical_form(&g.add_edges(&[e])?);
            let ys = table.get(&sup).ok_or(Error::InvalidParameter("supergraph missing from enumeration"))?;
            for (i, (x, y)) in xs.iter().zip(ys).enumerate() {
                let pairs = [
                    (x.kappa_min <= y.kappa_min, "kappa_k monotone"),
                    (x.kappa_max <= y.kappa_max, "kappa-bar_k monotone"),
                    (x.lambda_min <= y.lambda_min, "lambda_k monotone"),
                    (x.lambda_max <= y.lambda_max, "lambda-bar_k monotone"),
                ];
                for (ok, rule) in pairs {
                    if !ok {
                        out.push(Violation { graph: (*g).clone(), supergraph: Some(sup.clone()), k: i + 3, rule });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct_gn;
    use crate::steiner::DEFAULT_BUDGET;

    #[test]
    fn small_k_n_reports() {
        let r = brute_force_extremal(6, 6, 1, Mode::Edge, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.brute_value, 11);
        assert_eq!(r.formula_value, Some(11));
        assert_eq!(r.characterization_match, Some(true));
        assert_eq!(r.witnesses.len(), 1);
        assert!(crate::canon::is_isomorphic(&r.witnesses[0], &construct_gn(6, 1, None).unwrap()).unwrap());

        let r = brute_force_extremal(6, 6, 2, Mode::Vertex, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.brute_value, 14);
        assert_eq!(r.characterization_match, Some(true));
    }

    #[test]
    fn k3_small() {
        let r = brute_force_extremal(4, 3, 2, Mode::Vertex, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.brute_value, r.formula_value), (6, Some(6)));
        // k = n - 1 here, and l = 2 is the top value
        assert_eq!(r.characterization_match, Some(true));
        let r = brute_force_extremal(5, 3, 2, Mode::Vertex, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.brute_value, r.formula_value), (7, Some(7)));
        assert_eq!(r.characterization_match, None);
    }

    #[test]
    fn below_threshold_has_no_formula() {
        let r = brute_force_extremal(5, 4, 1, Mode::Vertex, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.formula_value, None);
        assert!(r.formula_agrees());
        for w in &r.witnesses {
            assert_eq!(w.edge_count(), r.brute_value);
            assert!(is_feasible(w, 4, 1, Mode::Vertex, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(brute_force_extremal(9, 9, 1, Mode::Edge, 10).is_err());
        assert!(brute_force_extremal(6, 2, 1, Mode::Edge, 10).is_err());
        assert!(brute_force_extremal(6, 6, 4, Mode::Edge, 10).is_err());
        assert!(verify_observations(8, 10).is_err());
    }

    #[test]
    fn observations_small() {
        for n in 3..=5 {
            assert_eq!(verify_observations(n, DEFAULT_BUDGET).unwrap(), Vec::new());
        }
    }
}
