//! Extremal graph families and closed forms for `f(n; kappa-bar_k <= l)` and
//! `g(n; lambda-bar_k <= l)`.
//!
//! `G_n` is `K_{n-1}` plus one vertex joined to `l` clique vertices; `H_n`
//! is `K_{n-2}` plus two nonadjacent vertices, each joined to `l` clique
//! vertices. Closed forms are only evaluated inside the regimes where they
//! are proved; everything else is [`Error::UnsupportedRegime`].

use alloc::vec::Vec;

use crate::{choose2, Edge, Error, Graph, Mode, Result, VertexSet};

/// The named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gn,
    Hn,
    KnMinusM,
    Remark,
    Kn,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gn => "Gn",
            Family::Hn => "Hn",
            Family::KnMinusM => "KnMinusM",
            Family::Remark => "Remark",
            Family::Kn => "Kn",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "Gn" => Family::Gn,
            "Hn" => Family::Hn,
            "KnMinusM" => Family::KnMinusM,
            "Remark" | "RemarkGeneralK" => Family::Remark,
            "Kn" => Family::Kn,
            _ => return None,
        })
    }
}

/// Parameters for one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub l: usize,
    /// Terminal size, `Remark` only.
    pub k: Option<usize>,
    /// Deleted edges, `KnMinusM` only.
    pub m: Vec<Edge>,
    /// Explicit attachment sets for the added vertices.
    pub attach: Vec<VertexSet>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, l: usize) -> Self {
        FamilySpec { family, n, l, k: None, m: Vec::new(), attach: Vec::new() }
    }

    pub fn build(&self) -> Result<Graph> {
        let a = |i: usize| self.attach.get(i).copied();
        match self.family {
            Family::Gn => construct_gn(self.n, self.l, a(0)),
            Family::Hn => construct_hn(self.n, self.l, a(0), a(1)),
            Family::KnMinusM => complete_minus(self.n, &self.m),
            Family::Remark => {
                let k = self.k.ok_or(Error::InvalidParameter("Remark needs k"))?;
                construct_remark(self.n, k, self.l)
            }
            Family::Kn => Graph::complete(self.n),
        }
    }
}

fn attachment(l: usize, within: usize, given: Option<VertexSet>) -> Result<VertexSet> {
    match given {
        None => Ok(VertexSet::full(l)),
        Some(s) if s.len() != l => Err(Error::InvalidParameter("attachment set must have l vertices")),
        Some(s) if !s.is_subset(VertexSet::full(within)) => {
            Err(Error::InvalidParameter("attachment set must lie in the clique"))
        }
        Some(s) => Ok(s),
    }
}

fn clique_plus(n: usize, clique: usize, attach: &[VertexSet]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..clique {
        for v in u + 1..clique {
            g.link(u, v);
        }
    }
    for (i, s) in attach.iter().enumerate() {
        for u in *s {
            g.link(clique + i, u);
        }
    }
    Ok(g)
}

/// `K_{n-1}` on `0..n-1` plus vertex `n - 1` joined to `attach`
/// (default `{0, .., l-1}`).
pub fn construct_gn(n: usize, l: usize, attach: Option<VertexSet>) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooSmall { order: n, min: 2 });
    }
    if l < 1 || l > n - 1 {
        return Err(Error::InvalidParameter("G_n needs 1 <= l <= n - 1"));
    }
    let s = attachment(l, n - 1, attach)?;
    clique_plus(n, n - 1, &[s])
}

/// `K_{n-2}` on `0..n-2` plus nonadjacent vertices `n - 2` and `n - 1`
/// joined to `attach1` and `attach2`.
pub fn construct_hn(n: usize, l: usize, attach1: Option<VertexSet>, attach2: Option<VertexSet>) -> Result<Graph> {
    if n < 4 {
        return Err(Error::TooSmall { order: n, min: 4 });
    }
    if l < 1 || l > n - 2 {
        return Err(Error::InvalidParameter("H_n needs 1 <= l <= n - 2"));
    }
    let a = attachment(l, n - 2, attach1)?;
    let b = attachment(l, n - 2, attach2)?;
    clique_plus(n, n - 2, &[a, b])
}

/// `K_{k-1}` plus `n - k + 1` pairwise nonadjacent vertices, each joined to
/// `{0, .., l-1}`.
pub fn construct_remark(n: usize, k: usize, l: usize) -> Result<Graph> {
    if k < 3 || k > n {
        return Err(Error::InvalidParameter("needs 3 <= k <= n"));
    }
    if l < 1 || l > (k - 1) / 2 {
        return Err(Error::InvalidParameter("needs 1 <= l <= floor((k-1)/2)"));
    }
    let attach = alloc::vec![VertexSet::full(l); n - k + 1];
    clique_plus(n, k - 1, &attach)
}

/// `K_n` minus the edges of `m`.
pub fn complete_minus(n: usize, m: &[Edge]) -> Result<Graph> {
    Graph::complete(n)?.delete_edges(m)
}

/// A closed-form value with the branch that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: usize,
    pub regime: &'static str,
}

/// `f(n; kappa-bar_k <= l)` or `g(n; lambda-bar_k <= l)`.
///
/// Supported: `k = n` with `n >= 6`, `1 <= l <= n/2` (both modes);
/// `k = n - 1` with `n >= 12`, `1 <= l <= (n+1)/2` (both modes); `k = 3`,
/// `l = 2`, vertex mode, `n >= 3`.
pub fn f_closed_form(n: usize, k: usize, l: usize, mode: Mode) -> Result<ClosedForm> {
    if k == 3 && l == 2 && mode == Mode::Vertex && n >= 3 {
        return Ok(if n == 4 {
            ClosedForm { value: 2 * n - 2, regime: "k=3, l=2, n=4" }
        } else {
            ClosedForm { value: 2 * n - 3, regime: "k=3, l=2, n!=4" }
        });
    }
    if k == n && n >= 6 && l >= 1 && l <= n / 2 {
        let even = n % 2 == 0;
        let value = |value, regime| Ok(ClosedForm { value, regime });
        return if l <= (n - 4) / 2 {
            value(choose2(n - 1) + l, "1 <= l <= floor((n-4)/2)")
        } else if l == (n - 2) / 2 && !even {
            value(choose2(n - 1) + l, "l = floor((n-2)/2), n odd")
        } else if l == (n - 2) / 2 {
            // equals C(n-1,2) + n - 2
            value(choose2(n - 1) + 2 * l, "l = floor((n-2)/2), n even")
        } else {
            value(choose2(n), "l = floor(n/2)")
        };
    }
    if k + 1 == n && n >= 12 && l >= 1 && l <= (n + 1) / 2 {
        let even = n % 2 == 0;
        let value = |value, regime| Ok(ClosedForm { value, regime });
        return if l <= (n - 5) / 2 {
            value(choose2(n - 2) + 2 * l, "1 <= l <= floor((n-5)/2)")
        } else if l == (n - 3) / 2 && even {
            value(choose2(n - 2) + 2 * l, "l = floor((n-3)/2), n even")
        } else if l == (n - 3) / 2 {
            value(choose2(n - 2) + 2 * l + 1, "l = floor((n-3)/2), n odd")
        } else if l == (n - 1) / 2 && even {
            value(choose2(n - 1) + l, "l = floor((n-1)/2), n even")
        } else if l == (n - 1) / 2 {
            value(choose2(n - 1) + 2 * l - 1, "l = floor((n-1)/2), n odd")
        } else {
            value(choose2(n), "l = floor((n+1)/2)")
        };
    }
    Err(Error::UnsupportedRegime("no closed form for these parameters"))
}

/// Lower bound `C(k-1,2) + (n-k+1) l` from the remark construction.
pub fn remark_lower_bound(n: usize, k: usize, l: usize) -> Result<usize> {
    if k < 3 || k > n || l < 1 || l > (k - 1) / 2 {
        return Err(Error::UnsupportedRegime("needs 3 <= k <= n and 1 <= l <= floor((k-1)/2)"));
    }
    Ok(choose2(k - 1) + (n - k + 1) * l)
}

/// Lower bound on `f(n; kappa-bar_3 <= l)`: `(l+2)(n-2)/2 + 1/2` when the
/// product is odd, `(l+2)(n-2)/2 + 1` otherwise. A bound, not a value.
pub fn k3_lower_bound(n: usize, l: usize) -> Result<usize> {
    if n < 3 || l < 1 {
        return Err(Error::UnsupportedRegime("needs n >= 3 and l >= 1"));
    }
    Ok((l + 2) * (n - 2) / 2 + 1)
}

/// `h = f + 1`: the fewest edges forcing a `k`-set with `l + 1` trees.
pub const fn h_from_f(f: usize) -> usize {
    f + 1
}

/// Some vertex set `T` of size `p`, independent, such that `G - T` is
/// complete and every vertex of `T` has degree `l`.
fn clique_plus_independent(g: &Graph, p: usize, l: usize) -> bool {
    let n = g.order();
    let low: VertexSet = g.vertices().iter().filter(|&v| g.deg(v) == l).collect();
    let mut found = false;
    let mut pick = |t: VertexSet| {
        let rest = g.vertices() - t;
        if g.inner_edge_count(t) == 0 && g.inner_edge_count(rest) == choose2(n - p) {
            found = true;
        }
    };
    match p {
        1 => low.iter().for_each(|v| pick(VertexSet::singleton(v))),
        2 => {
            for u in low {
                for v in low.iter().filter(|&v| v > u) {
                    pick(VertexSet::from_iter([u, v]));
                }
            }
        }
        _ => unreachable!(),
    }
    found
}

/// Whether `g` is `K_n` minus `|M|` edges for `|M|` in `lo..=hi`, connected.
fn minus_window(g: &Graph, lo: usize, hi: usize) -> bool {
    let missing = choose2(g.order()) - g.edge_count();
    g.is_connected() && lo <= missing && missing <= hi
}

/// Whether `g` belongs to the characterized extremal family for
/// `(n, l, k, mode)`, up to isomorphism.
///
/// `k = n` (`n >= 6`) follows the spanning-tree characterization; `k = n - 1`
/// follows the extremal characterization for `n >= 12`. Below 12 with
/// `k = n - 1`, only `l = floor((n+1)/2)` (`n >= 4`) and `l = floor((n-1)/2)`
/// (`n = 11`) are characterized, by [`top_value_predicate`].
pub fn characterization_predicate(n: usize, l: usize, k: usize, mode: Mode, g: &Graph) -> Result<bool> {
    let _ = mode;
    if g.order() != n {
        return Err(Error::InvalidParameter("graph order differs from n"));
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let cn = choose2(n);
    if k == n && n >= 6 && l >= 1 && l <= n / 2 {
        let even = n % 2 == 0;
        return Ok(if l <= (n - 4) / 2 {
            g.edge_count() == choose2(n - 1) + l && clique_plus_independent(g, 1, l)
        } else if l == (n - 2) / 2 && even {
            g.edge_count() == cn - 1
        } else if l == (n - 2) / 2 {
            minus_window(g, n.div_ceil(2), n.div_ceil(2))
        } else {
            g.edge_count() == cn
        });
    }
    if k + 1 == n && n >= 12 && l >= 1 && l <= (n + 1) / 2 {
        let even = n % 2 == 0;
        return Ok(if l <= (n - 5) / 2 || (l == (n - 3) / 2 && even) {
            g.edge_count() == choose2(n - 2) + 2 * l && clique_plus_independent(g, 2, l)
        } else if l == (n - 3) / 2 {
            minus_window(g, n - 1, n - 1)
        } else if l == (n - 1) / 2 && even {
            minus_window(g, n / 2, n / 2)
        } else if l == (n - 1) / 2 {
            g.edge_count() == cn - 1
        } else {
            g.edge_count() == cn
        });
    }
    if k + 1 == n && n >= 4 {
        return top_value_predicate(n, l, g);
    }
    Err(Error::UnsupportedRegime("no characterization for these parameters"))
}

/// Whether `kappa-bar_{n-1}(g) = l` (equivalently `lambda-bar_{n-1}(g) = l`)
/// according to the characterizations of the two largest values.
///
/// `l = floor((n+1)/2)`, `n >= 4`: `K_n` for `n` odd, `K_n \ M` with
/// `|M| <= (n-2)/2` for `n` even. `l = floor((n-1)/2)`, `n >= 11`: `K_n \ M`
/// with `1 <= |M| <= n - 2` (n odd), `n/2 <= |M| <= n` (n even), or
/// `n + 1 <= |M| <= (3n-6)/2` with every second minimal degree vertex of
/// degree at least `(n-2)/2` (n even).
pub fn top_value_predicate(n: usize, l: usize, g: &Graph) -> Result<bool> {
    if g.order() != n {
        return Err(Error::InvalidParameter("graph order differs from n"));
    }
    let even = n % 2 == 0;
    if n >= 4 && l == (n + 1) / 2 {
        return Ok(if even { minus_window(g, 0, (n - 2) / 2) } else { g.edge_count() == choose2(n) });
    }
    if n >= 11 && l == (n - 1) / 2 {
        if !even {
            return Ok(minus_window(g, 1, n - 2));
        }
        if minus_window(g, n / 2, n) {
            return Ok(true);
        }
        if !minus_window(g, n + 1, (3 * n - 6) / 2) {
            return Ok(false);
        }
        let u1 = g.second_min_degree_vertex()?;
        let every = g.second_min_degree_candidates()?.iter().all(|u| 2 * g.deg(u) + 2 >= n);
        return Ok(2 * g.deg(u1) + 2 >= n && every);
    }
    Err(Error::UnsupportedRegime("value is not characterized for these parameters"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanning::max_spanning_tree_packing;

    #[test]
    fn constructions() {
        assert_eq!(construct_gn(6, 1, None).unwrap().edge_count(), 11);
        assert_eq!(construct_gn(5, 4, None).unwrap(), Graph::complete(5).unwrap());
        let g = construct_gn(8, 2, None).unwrap();
        assert_eq!(g.min_degree(), 2);
        assert_eq!(max_spanning_tree_packing(&g).unwrap().0, 2);

        let h = construct_hn(12, 1, None, None).unwrap();
        assert_eq!(h.edge_count(), 47);
        let h = construct_hn(6, 4, None, None).unwrap();
        assert!(!h.has_edge(4, 5));
        assert_eq!((h.deg(4), h.deg(5)), (4, 4));

        assert_eq!(construct_remark(10, 5, 2).unwrap().edge_count(), 18);
        assert_eq!(construct_remark(7, 7, 3).unwrap().edge_count(), choose2(6) + 3);
        assert!(construct_remark(10, 5, 3).is_err());
        assert!(construct_gn(6, 6, None).is_err());
        assert!(construct_hn(6, 2, Some(VertexSet::from_iter([0, 5])), None).is_err());
    }

    #[test]
    fn closed_forms() {
        let f = f_closed_form(12, 11, 2, Mode::Vertex).unwrap();
        assert_eq!((f.value, f.regime), (49, "1 <= l <= floor((n-5)/2)"));
        let f = f_closed_form(13, 12, 5, Mode::Vertex).unwrap();
        assert_eq!((f.value, f.regime), (66, "l = floor((n-3)/2), n odd"));
        assert_eq!(f_closed_form(6, 6, 3, Mode::Edge).unwrap().value, 15);
        assert_eq!(f_closed_form(7, 3, 2, Mode::Vertex).unwrap().value, 11);
        assert_eq!(f_closed_form(4, 3, 2, Mode::Vertex).unwrap().value, 6);
        assert!(f_closed_form(5, 4, 1, Mode::Vertex).is_err());
        assert!(f_closed_form(11, 10, 1, Mode::Edge).is_err());
        assert!(f_closed_form(6, 6, 4, Mode::Edge).is_err());
        assert!(f_closed_form(7, 3, 2, Mode::Edge).is_err());
        // both spellings of the even n branch agree
        for n in (6..40).step_by(2) {
            assert_eq!(f_closed_form(n, n, (n - 2) / 2, Mode::Vertex).unwrap().value, choose2(n - 1) + n - 2);
        }
    }

    #[test]
    fn closed_forms_cover_every_l() {
        for n in 6..30 {
            for l in 1..=n / 2 {
                assert!(f_closed_form(n, n, l, Mode::Edge).is_ok());
            }
        }
        for n in 12..30 {
            for l in 1..=(n + 1) / 2 {
                let a = f_closed_form(n, n - 1, l, Mode::Vertex).unwrap();
                assert_eq!(a, f_closed_form(n, n - 1, l, Mode::Edge).unwrap());
            }
        }
    }

    #[test]
    fn bounds_and_h() {
        assert_eq!(h_from_f(49), 50);
        assert_eq!(h_from_f(f_closed_form(7, 3, 2, Mode::Vertex).unwrap().value), 12);
        assert_eq!(h_from_f(15), 16);
        // at l = 2 the general k = 3 bound meets the exact value
        for n in 5..20 {
            assert_eq!(k3_lower_bound(n, 2).unwrap(), 2 * n - 3);
        }
        assert_eq!(k3_lower_bound(7, 1).unwrap(), 8);
        assert_eq!(remark_lower_bound(10, 5, 2).unwrap(), 18);
    }

    #[test]
    fn predicates() {
        assert!(characterization_predicate(6, 1, 6, Mode::Vertex, &construct_gn(6, 1, None).unwrap()).unwrap());
        let k7 = Graph::complete(7).unwrap();
        assert!(characterization_predicate(7, 4, 6, Mode::Vertex, &k7).unwrap());
        assert!(!characterization_predicate(7, 4, 6, Mode::Vertex, &complete_minus(7, &[Edge::new(0, 1).unwrap()]).unwrap()).unwrap());

        let h = construct_hn(12, 2, None, None).unwrap();
        assert!(characterization_predicate(12, 2, 11, Mode::Vertex, &h).unwrap());
        let plus = h.add_edges(&[Edge::new(10, 11).unwrap()]).unwrap();
        assert!(!characterization_predicate(12, 2, 11, Mode::Vertex, &plus).unwrap());
        // any attachment sets, any labelling
        let h2 = construct_hn(12, 2, Some(VertexSet::from_iter([3, 7])), Some(VertexSet::from_iter([3, 9]))).unwrap();
        let perm: Vec<usize> = (0..12).rev().collect();
        assert!(characterization_predicate(12, 2, 11, Mode::Edge, &h2.permute(&perm)).unwrap());

        assert!(characterization_predicate(5, 1, 4, Mode::Vertex, &k7).is_err());
        assert!(characterization_predicate(5, 1, 5, Mode::Vertex, &Graph::complete(5).unwrap()).is_err());
    }

    #[test]
    fn top_value_clauses() {
        // n = 12, l = 5: |M| between 6 and 12, or 13..=15 with the degree condition
        let k12 = Graph::complete(12).unwrap();
        let matching: Vec<Edge> = (0..6).map(|i| Edge::new(2 * i, 2 * i + 1).unwrap()).collect();
        assert!(top_value_predicate(12, 5, &complete_minus(12, &matching).unwrap()).unwrap());
        assert!(!top_value_predicate(12, 5, &complete_minus(12, &matching[..5]).unwrap()).unwrap());
        assert!(top_value_predicate(12, 6, &complete_minus(12, &matching[..5]).unwrap()).unwrap());
        assert!(top_value_predicate(12, 6, &k12).unwrap());

        // 14 missing edges: vertex 0 keeps degree 4, the next lowest is 8
        let mut m: Vec<Edge> = (1..8).map(|v| Edge::new(0, v).unwrap()).collect();
        for u in 8..12 {
            m.extend((u + 1..12).map(|v| Edge::new(u, v).unwrap()));
        }
        m.push(Edge::new(1, 2).unwrap());
        let g = complete_minus(12, &m).unwrap();
        assert_eq!(g.second_min_degree_vertex().unwrap(), 8);
        assert!(top_value_predicate(12, 5, &g).unwrap());

        // two vertices losing 7 edges each: second minimal degree 4 < 5
        let mut m: Vec<Edge> = (2..9).map(|v| Edge::new(0, v).unwrap()).collect();
        m.extend((2..9).map(|v| Edge::new(1, v).unwrap()));
        let g = complete_minus(12, &m).unwrap();
        assert_eq!(g.deg(g.second_min_degree_vertex().unwrap()), 4);
        assert!(!top_value_predicate(12, 5, &g).unwrap());

        let k11 = Graph::complete(11).unwrap();
        assert!(!top_value_predicate(11, 5, &k11).unwrap());
        assert!(top_value_predicate(11, 5, &complete_minus(11, &matching[..5]).unwrap()).unwrap());
        assert!(top_value_predicate(9, 4, &k11).is_err());
    }
}
