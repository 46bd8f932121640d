//! Exact decision search: are there `t` disjoint `S`-trees?
//!
//! Each tree is a colour. The search assigns edges to colours, keeping for
//! every colour the rows of edges it may still use (`avail`) and the rows of
//! edges it already owns (`asg`). In vertex mode every non-terminal vertex
//! has at most one owning colour. Propagation forces bridges and cut
//! vertices that separate terminals, drops useless edges, and checks edge
//! budgets. Colours are ordered by their smallest neighbour of a fixed root
//! terminal, which removes colour permutations.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::reach;
use crate::{Edge, Error, Graph, Mode, PackingCertificate, Result, TreeCertificate, VertexSet};

const FREE: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    avail: Vec<u64>,
    asg: Vec<u64>,
    owner: Vec<u8>,
    done: u64,
}

pub(crate) struct Search<'a> {
    g: &'a Graph,
    n: usize,
    terms: u64,
    k: usize,
    t: usize,
    vertex: bool,
    root: usize,
    budget: u64,
    pub(crate) nodes: u64,
}

enum Pass {
    Fail,
    Stable,
    Changed,
}

impl<'a> Search<'a> {
    pub(crate) fn new(g: &'a Graph, s: VertexSet, mode: Mode, t: usize, budget: u64, nodes: u64) -> Self {
        let root = s.iter().min_by_key(|&v| (g.deg(v), v)).unwrap_or(0);
        Search {
            g,
            n: g.order(),
            terms: s.bits(),
            k: s.len(),
            t,
            vertex: mode == Mode::Vertex,
            root,
            budget,
            nodes,
        }
    }

    /// Runs the search; `Ok(None)` means no packing of size `t` exists.
    pub(crate) fn run(&mut self) -> Result<Option<Vec<TreeCertificate>>> {
        let n = self.n;
        let t = self.t;
        if t == 0 {
            return Ok(Some(Vec::new()));
        }
        if t > 64 {
            return Err(Error::InvalidParameter("tree count above 64"));
        }
        let rows = self.g.rows();
        let mut avail = vec![0u64; t * n];
        for c in 0..t {
            avail[c * n..(c + 1) * n].copy_from_slice(rows);
        }
        let st = State { avail, asg: vec![0; t * n], owner: vec![FREE; n], done: 0 };
        let found = self.roots(st, 0, 0)?;
        Ok(found.map(|st| self.extract(&st)))
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    #[inline]
    fn is_term(&self, v: usize) -> bool {
        self.terms >> v & 1 == 1
    }

    #[inline]
    fn drop_edge(&self, st: &mut State, c: usize, u: usize, v: usize) {
        let n = self.n;
        st.avail[c * n + u] &= !(1u64 << v);
        st.avail[c * n + v] &= !(1u64 << u);
    }

    /// Gives edge `uv` to colour `c`. Returns false on conflict.
    fn assign(&self, st: &mut State, c: usize, u: usize, v: usize) -> bool {
        let n = self.n;
        if st.avail[c * n + u] >> v & 1 == 0 {
            return false;
        }
        st.asg[c * n + u] |= 1u64 << v;
        st.asg[c * n + v] |= 1u64 << u;
        for d in 0..self.t {
            if d != c {
                self.drop_edge(st, d, u, v);
            }
        }
        if self.vertex {
            for x in [u, v] {
                if !self.is_term(x) && !self.claim(st, c, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Reserves non-terminal `x` for colour `c` (vertex mode).
    fn claim(&self, st: &mut State, c: usize, x: usize) -> bool {
        let n = self.n;
        if st.owner[x] == c as u8 {
            return true;
        }
        if st.owner[x] != FREE {
            return false;
        }
        st.owner[x] = c as u8;
        for d in 0..self.t {
            if d == c {
                continue;
            }
            if st.asg[d * n + x] != 0 {
                return false;
            }
            let mut nb = st.avail[d * n + x];
            st.avail[d * n + x] = 0;
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                st.avail[d * n + y] &= !(1u64 << x);
            }
        }
        true
    }

    fn propagate(&self, st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for c in 0..self.t {
                if st.done >> c & 1 == 1 {
                    continue;
                }
                match self.color_pass(st, c) {
                    Pass::Fail => return false,
                    Pass::Changed => changed = true,
                    Pass::Stable => {}
                }
            }
            if !changed {
                return self.counting_ok(st);
            }
        }
    }

    fn color_pass(&self, st: &mut State, c: usize) -> Pass {
        let n = self.n;
        let base = c * n;
        let all = VertexSet::full(n).bits();
        let mut changed = false;

        // terminals must stay connected in the allowed graph
        let comp = reach(&st.avail[base..base + n], self.root, all);
        if self.terms & !comp != 0 {
            return Pass::Fail;
        }
        let mut outside = all & !comp;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let keep = st.asg[base + v];
            if st.avail[base + v] != keep {
                let mut gone = st.avail[base + v] & !keep;
                st.avail[base + v] = keep;
                while gone != 0 {
                    let y = gone.trailing_zeros() as usize;
                    gone &= gone - 1;
                    st.avail[base + y] &= !(1u64 << v);
                }
                changed = true;
            }
        }

        // peel non-terminal leaves hanging on free edges
        loop {
            let mut peeled = false;
            let mut cand = comp & !self.terms;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let row = st.avail[base + v];
                if row.count_ones() == 1 && st.asg[base + v] == 0 {
                    let y = row.trailing_zeros() as usize;
                    st.avail[base + v] = 0;
                    st.avail[base + y] &= !(1u64 << v);
                    peeled = true;
                }
            }
            if !peeled {
                break;
            }
            changed = true;
        }

        // complete colour: keep only its own edges
        let joined = reach(&st.asg[base..base + n], self.root, all);
        if self.terms & !joined == 0 {
            st.done |= 1u64 << c;
            for v in 0..n {
                st.avail[base + v] = st.asg[base + v];
            }
            return Pass::Changed;
        }

        // bridges and cut vertices separating terminals
        let mut forced: Vec<(usize, usize)> = Vec::new();
        let mut cuts: u64 = 0;
        {
            let rows = &st.avail[base..base + n];
            let mut disc = [u8::MAX; 64];
            let mut low = [0u8; 64];
            let mut sub = [0u8; 64];
            let mut time = 0u8;
            self.tarjan(rows, self.root, usize::MAX, &mut disc, &mut low, &mut sub, &mut time, &mut forced, &mut cuts);
        }
        for (u, v) in forced {
            if st.asg[base + u] >> v & 1 == 0 {
                if !self.assign(st, c, u, v) {
                    return Pass::Fail;
                }
                changed = true;
            }
        }
        while cuts != 0 {
            let x = cuts.trailing_zeros() as usize;
            cuts &= cuts - 1;
            if st.owner[x] != c as u8 {
                if !self.claim(st, c, x) {
                    return Pass::Fail;
                }
                changed = true;
            }
        }
        if changed {
            Pass::Changed
        } else {
            Pass::Stable
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn tarjan(
        &self,
        rows: &[u64],
        u: usize,
        parent: usize,
        disc: &mut [u8; 64],
        low: &mut [u8; 64],
        sub: &mut [u8; 64],
        time: &mut u8,
        forced: &mut Vec<(usize, usize)>,
        cuts: &mut u64,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        sub[u] = self.is_term(u) as u8;
        let mut nb = rows[u];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if disc[w] == u8::MAX {
                self.tarjan(rows, w, u, disc, low, sub, time, forced, cuts);
                low[u] = low[u].min(low[w]);
                sub[u] += sub[w];
                let below = sub[w] as usize;
                if below >= 1 && below < self.k {
                    if low[w] > disc[u] {
                        forced.push((u, w));
                    }
                    if self.vertex && low[w] >= disc[u] && !self.is_term(u) {
                        *cuts |= 1u64 << u;
                    }
                }
            } else if w != parent {
                low[u] = low[u].min(disc[w]);
            }
        }
    }

    /// Edge budget checks over all incomplete colours.
    fn counting_ok(&self, st: &State) -> bool {
        let n = self.n;
        let all = VertexSet::full(n).bits();
        let mut free = vec![0u64; n];
        let mut need_edges = 0usize;
        let mut needy = [0u8; 64];
        for c in 0..self.t {
            if st.done >> c & 1 == 1 {
                continue;
            }
            let base = c * n;
            for v in 0..n {
                free[v] |= st.avail[base + v] & !st.asg[base + v];
            }
            let asg = &st.asg[base..base + n];
            let mut left = self.terms;
            let mut parts = 0usize;
            while left != 0 {
                let v = left.trailing_zeros() as usize;
                let comp = reach(asg, v, all);
                left &= !comp;
                parts += 1;
                if asg[v] == 0 {
                    needy[v] += 1;
                }
            }
            need_edges += parts - 1;
        }
        let free_edges: usize = free.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if need_edges > free_edges {
            return false;
        }
        let mut ts = self.terms;
        while ts != 0 {
            let v = ts.trailing_zeros() as usize;
            ts &= ts - 1;
            if needy[v] as u32 > free[v].count_ones() {
                return false;
            }
        }
        true
    }

    /// Fixes, colour by colour, the smallest root neighbour each colour uses.
    fn roots(&mut self, st: State, c: usize, from: usize) -> Result<Option<State>> {
        if c == self.t {
            return self.search(st);
        }
        let n = self.n;
        let r = self.root;
        let nb = self.g.rows()[r] & !((1u64 << from) - 1);
        for w in VertexSet::from_bits(nb) {
            // the remaining colours need distinct larger neighbours
            let larger = (self.g.rows()[r] >> w >> 1).count_ones() as usize;
            if larger < self.t - c - 1 {
                break;
            }
            self.tick()?;
            let mut next = st.clone();
            let below = next.avail[c * n + r] & ((1u64 << w) - 1);
            for y in VertexSet::from_bits(below) {
                self.drop_edge(&mut next, c, r, y);
            }
            if !self.assign(&mut next, c, r, w) || !self.propagate(&mut next) {
                continue;
            }
            if let Some(found) = self.roots(next, c + 1, w + 1)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn search(&mut self, st: State) -> Result<Option<State>> {
        self.tick()?;
        let n = self.n;
        let full = if self.t == 64 { u64::MAX } else { (1u64 << self.t) - 1 };
        if st.done == full {
            return Ok(Some(st));
        }
        let all = VertexSet::full(n).bits();
        // colour whose grown part around the root has the fewest exits
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for c in 0..self.t {
            if st.done >> c & 1 == 1 {
                continue;
            }
            let base = c * n;
            let grown = reach(&st.asg[base..base + n], self.root, all);
            let mut exits = 0usize;
            let mut pick: Option<(usize, usize, (bool, u32, usize))> = None;
            for x in VertexSet::from_bits(grown) {
                let out = st.avail[base + x] & !grown;
                exits += out.count_ones() as usize;
                for y in VertexSet::from_bits(out) {
                    // terminals first, then busier vertices, then index
                    let key = (!self.is_term(y), u32::MAX - st.avail[base + y].count_ones(), y);
                    if pick.as_ref().is_none_or(|p| key < p.2) {
                        pick = Some((x, y, key));
                    }
                }
            }
            if let Some((x, y, _)) = pick {
                if best.is_none_or(|b| exits < b.0) {
                    best = Some((exits, c, x, y));
                }
            }
        }
        let Some((_, c, x, y)) = best else {
            return Ok(None);
        };
        let mut take = st.clone();
        if self.assign(&mut take, c, x, y) && self.propagate(&mut take) {
            if let Some(found) = self.search(take)? {
                return Ok(Some(found));
            }
        }
        let mut skip = st;
        self.drop_edge(&mut skip, c, x, y);
        if self.propagate(&mut skip) {
            return self.search(skip);
        }
        Ok(None)
    }

    fn extract(&self, st: &State) -> Vec<TreeCertificate> {
        let n = self.n;
        let s = VertexSet::from_bits(self.terms);
        (0..self.t)
            .map(|c| {
                let rows = &st.asg[c * n..(c + 1) * n];
                TreeCertificate::new(steiner_subtree(rows, self.root, self.terms), s)
            })
            .collect()
    }
}

/// A tree inside the component of `root` in `rows` spanning `terms`, with
/// non-terminal leaves removed.
pub(crate) fn steiner_subtree(rows: &[u64], root: usize, terms: u64) -> Vec<Edge> {
    let n = rows.len();
    let mut parent = vec![usize::MAX; n];
    let mut seen = 1u64 << root;
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut nb = rows[v] & !seen;
        seen |= nb;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            parent[w] = v;
            order.push(w);
        }
    }
    // keep a vertex iff its subtree holds a terminal
    let mut keep = vec![false; n];
    for &v in order.iter().rev() {
        if terms >> v & 1 == 1 {
            keep[v] = true;
        }
        if keep[v] && parent[v] != usize::MAX {
            keep[parent[v]] = true;
        }
    }
    order
        .iter()
        .filter(|&&v| v != root && keep[v])
        .map(|&v| Edge::new_unchecked(v, parent[v]))
        .collect()
}

/// Finds `t` disjoint `S`-trees or proves there are none.
pub(crate) fn decide(
    g: &Graph,
    s: VertexSet,
    mode: Mode,
    t: usize,
    budget: u64,
    nodes: &mut u64,
) -> Result<Option<PackingCertificate>> {
    let mut search = Search::new(g, s, mode, t, budget, *nodes);
    let out = search.run();
    *nodes = search.nodes;
    Ok(out?.map(|trees| PackingCertificate::new(mode, s, trees)))
}
