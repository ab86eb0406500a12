//! Hereditary set families described by forbidden pairs and forbidden
//! triples, shared by the position oracles and the partition solver.

use fixedbitset::FixedBitSet;

use super::{geodesic_avoids, PositionKind};
use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::{Graph, InducedTriples};

/// Description of a hereditary family of vertex sets.
///
/// A set is admissible when it contains no forbidden pair, no forbidden
/// triple, and (for mutual-visibility kinds) passes the exact visibility
/// test. Triples are stored role-free: `w` is in `triple_row(u, v)` iff
/// `{u, v, w}` is forbidden. For mutual visibility the triple table holds
/// only the necessary condition "one of the three lies on every geodesic
/// between the other two"; the exact test runs on top.
pub struct ConflictModel<'g> {
    g: &'g Graph,
    n: usize,
    pairs: Vec<FixedBitSet>,
    triples: Option<Vec<FixedBitSet>>,
    visibility: bool,
}

/// Which sets [`ConflictModel::for_each_set`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetSearch {
    /// All admissible sets of this size.
    ExactSize(usize),
    /// All inclusion-maximal admissible sets.
    Maximal,
}

fn symmetric_closure(n: usize, rows: &mut [FixedBitSet]) {
    for u in 0..n {
        for v in u + 1..n {
            let (lo, hi) = rows.split_at_mut(v * n + u);
            lo[u * n + v].union_with(&hi[0]);
            hi[0] = lo[u * n + v].clone();
        }
    }
}

impl<'g> ConflictModel<'g> {
    fn blank(g: &'g Graph) -> ConflictModel<'g> {
        let n = g.order();
        ConflictModel {
            g,
            n,
            pairs: vec![FixedBitSet::with_capacity(n); n],
            triples: None,
            visibility: false,
        }
    }

    /// Independent sets of `g`.
    pub fn independent_sets(g: &'g Graph) -> ConflictModel<'g> {
        let mut m = ConflictModel::blank(g);
        m.pairs = (0..g.order()).map(|u| g.neighbour_set(u).clone()).collect();
        m
    }

    /// Cliques of `g`.
    pub fn cliques(g: &'g Graph) -> ConflictModel<'g> {
        let mut m = ConflictModel::blank(g);
        let n = g.order();
        m.pairs = (0..n)
            .map(|u| {
                let mut row = g.neighbour_set(u).clone();
                row.toggle_range(..);
                row.set(u, false);
                row
            })
            .collect();
        m
    }

    /// Sets inducing a clique or an independent set.
    pub fn homogeneous_sets(g: &'g Graph) -> ConflictModel<'g> {
        let mut m = ConflictModel::blank(g);
        let n = g.order();
        let mut t = vec![FixedBitSet::with_capacity(n); n * n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                for w in 0..n {
                    if w == u || w == v {
                        continue;
                    }
                    let e =
                        g.adjacent(u, v) as u8 + g.adjacent(u, w) as u8 + g.adjacent(v, w) as u8;
                    if e == 1 || e == 2 {
                        t[u * n + v].insert(w);
                    }
                }
            }
        }
        m.triples = Some(t);
        m
    }

    /// Position sets of the given kind.
    pub fn position(
        g: &'g Graph,
        kind: PositionKind,
        budget: &Budget,
    ) -> Result<ConflictModel<'g>> {
        let n = g.order();
        let mut m = if kind.is_independent() {
            ConflictModel::independent_sets(g)
        } else {
            ConflictModel::blank(g)
        };
        let mut t = vec![FixedBitSet::with_capacity(n); n * n];
        match kind.base() {
            PositionKind::Gp => {
                let d = g.distances();
                for u in 0..n {
                    for v in u + 1..n {
                        for w in 0..n {
                            if w != u && w != v && d.between(u, w, v) {
                                t[u * n + v].insert(w);
                                t[u * n + w].insert(v);
                                t[v * n + w].insert(u);
                            }
                        }
                    }
                }
            }
            PositionKind::Mono => {
                let it = InducedTriples::compute(g, budget)?;
                for u in 0..n {
                    for v in u + 1..n {
                        for w in it.interior(u, v).ones() {
                            t[u * n + v].insert(w);
                            t[u * n + w].insert(v);
                            t[v * n + w].insert(u);
                        }
                    }
                }
            }
            _ => {
                m.visibility = true;
                for u in 0..n {
                    for v in u + 1..n {
                        for w in forced_vertices(g, u, v).ones() {
                            t[u * n + v].insert(w);
                            t[u * n + w].insert(v);
                            t[v * n + w].insert(u);
                        }
                    }
                }
            }
        }
        symmetric_closure(n, &mut t);
        m.triples = Some(t);
        Ok(m)
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// True when admissibility needs [`ConflictModel::can_extend`] beyond
    /// the pair and triple tables.
    pub fn needs_exact_check(&self) -> bool {
        self.visibility
    }

    /// True when the family is described by pairs alone.
    pub fn pairs_only(&self) -> bool {
        self.triples.is_none() && !self.visibility
    }

    #[inline]
    pub fn pair_row(&self, u: usize) -> &FixedBitSet {
        &self.pairs[u]
    }

    #[inline]
    pub fn triple_row(&self, u: usize, v: usize) -> Option<&FixedBitSet> {
        self.triples.as_ref().map(|t| &t[u * self.n + v])
    }

    /// Vertices that cannot share a set with `v` and all of `members`, as
    /// far as pairs and triples tell: unions the conflict rows of `v`
    /// into `out`.
    pub fn block_with(&self, v: usize, members: &[usize], out: &mut FixedBitSet) {
        out.union_with(&self.pairs[v]);
        if let Some(t) = &self.triples {
            for &a in members {
                if a != v {
                    out.union_with(&t[v * self.n + a]);
                }
            }
        }
    }

    /// Exact test that `members ∪ {v}` is admissible, given that `members`
    /// is. `member_set` must equal `members` as a bitset.
    pub fn can_extend(&self, members: &[usize], member_set: &FixedBitSet, v: usize) -> bool {
        if members.iter().any(|&a| self.pairs[v].contains(a)) {
            return false;
        }
        if let Some(t) = &self.triples {
            for &a in members {
                if t[v * self.n + a].intersection(member_set).next().is_some() {
                    return false;
                }
            }
        }
        !self.visibility || self.visibility_extends(members, member_set, v)
    }

    fn visibility_extends(&self, members: &[usize], member_set: &FixedBitSet, v: usize) -> bool {
        let g = self.g;
        let d = g.distances();
        let mut blocked = member_set.clone();
        for &a in members {
            if d.get(v, a).is_none() {
                continue;
            }
            blocked.set(a, false);
            let ok = geodesic_avoids(g, v, a, &blocked);
            blocked.insert(a);
            if !ok {
                return false;
            }
        }
        blocked.insert(v);
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !d.between(a, v, b) {
                    continue;
                }
                blocked.set(a, false);
                blocked.set(b, false);
                let ok = geodesic_avoids(g, a, b, &blocked);
                blocked.insert(a);
                blocked.insert(b);
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Exact admissibility of a whole set.
    pub fn is_valid(&self, set: &[usize]) -> bool {
        let mut members = Vec::with_capacity(set.len());
        let mut member_set = FixedBitSet::with_capacity(self.n);
        for &v in set {
            if member_set.contains(v) {
                continue;
            }
            if !self.can_extend(&members, &member_set, v) {
                return false;
            }
            members.push(v);
            member_set.insert(v);
        }
        true
    }

    /// True when no vertex outside the admissible set `set` can be added.
    pub fn is_maximal(&self, set: &[usize]) -> bool {
        let mut member_set = FixedBitSet::with_capacity(self.n);
        for &v in set {
            member_set.insert(v);
        }
        (0..self.n).all(|v| member_set.contains(v) || !self.can_extend(set, &member_set, v))
    }

    /// Candidates compatible with `members ∪ {v}` among `cands`, using the
    /// pair and triple tables.
    fn narrow(&self, cands: &FixedBitSet, members: &[usize], v: usize) -> FixedBitSet {
        let mut block = FixedBitSet::with_capacity(self.n);
        self.block_with(v, members, &mut block);
        block.insert(v);
        let mut next = cands.clone();
        next.difference_with(&block);
        next
    }

    /// A maximum admissible set, optionally required to contain `forced`.
    /// Branching follows descending degree with ties by id, so the witness
    /// is deterministic.
    pub fn max_set(&self, forced: Option<usize>, budget: &Budget) -> Result<Vec<usize>> {
        let mut meter = budget.meter("maximum position set search");
        self.max_set_metered(forced, &mut meter)
    }

    pub(crate) fn max_set_metered(
        &self,
        forced: Option<usize>,
        meter: &mut Meter,
    ) -> Result<Vec<usize>> {
        let order = self.g.degree_order();
        let mut cands = FixedBitSet::with_capacity(self.n);
        cands.insert_range(..);
        let mut members = Vec::new();
        if let Some(f) = forced {
            members.push(f);
            cands = self.narrow(&cands, &[], f);
        }
        let mut best = members.clone();
        let mut member_set = FixedBitSet::with_capacity(self.n);
        for &m in &members {
            member_set.insert(m);
        }
        self.max_rec(
            &order,
            &mut members,
            &mut member_set,
            cands,
            &mut best,
            meter,
        )?;
        best.sort_unstable();
        Ok(best)
    }

    fn max_rec(
        &self,
        order: &[usize],
        members: &mut Vec<usize>,
        member_set: &mut FixedBitSet,
        mut cands: FixedBitSet,
        best: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        if members.len() > best.len() {
            *best = members.clone();
        }
        for &v in order {
            if !cands.contains(v) {
                continue;
            }
            if members.len() + cands.count_ones(..) <= best.len() {
                return Ok(());
            }
            cands.set(v, false);
            if self.visibility && !self.can_extend(members, member_set, v) {
                continue;
            }
            let next = self.narrow(&cands, members, v);
            members.push(v);
            member_set.insert(v);
            self.max_rec(order, members, member_set, next, best, meter)?;
            members.pop();
            member_set.set(v, false);
        }
        Ok(())
    }

    /// Reports admissible sets (sorted) according to `mode`.
    pub fn for_each_set(
        &self,
        mode: SetSearch,
        budget: &Budget,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<()> {
        let mut meter = budget.meter("position set enumeration");
        let mut cands = FixedBitSet::with_capacity(self.n);
        cands.insert_range(..);
        let mut members = Vec::new();
        let mut member_set = FixedBitSet::with_capacity(self.n);
        self.enum_rec(
            mode,
            &mut members,
            &mut member_set,
            cands,
            &mut meter,
            visit,
        )
    }

    fn enum_rec(
        &self,
        mode: SetSearch,
        members: &mut Vec<usize>,
        member_set: &mut FixedBitSet,
        mut cands: FixedBitSet,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<()> {
        meter.tick()?;
        match mode {
            SetSearch::ExactSize(s) => {
                if members.len() == s {
                    visit(members);
                    return Ok(());
                }
            }
            SetSearch::Maximal => {
                if self.is_maximal(members) {
                    visit(members);
                    return Ok(());
                }
            }
        }
        // candidates are visited in increasing id order, so each set is
        // generated once with its members ascending
        let verts: Vec<usize> = cands.ones().collect();
        for v in verts {
            if let SetSearch::ExactSize(s) = mode {
                if members.len() + cands.count_ones(..) < s {
                    return Ok(());
                }
            }
            cands.set(v, false);
            if self.visibility && !self.can_extend(members, member_set, v) {
                continue;
            }
            let next = self.narrow(&cands, members, v);
            members.push(v);
            member_set.insert(v);
            self.enum_rec(mode, members, member_set, next, meter, visit)?;
            members.pop();
            member_set.set(v, false);
        }
        Ok(())
    }
}

/// Vertices other than `u, v` lying on every shortest `u`–`v` path.
fn forced_vertices(g: &Graph, u: usize, v: usize) -> FixedBitSet {
    let n = g.order();
    let d = g.distances();
    let mut out = FixedBitSet::with_capacity(n);
    let Some(duv) = d.get(u, v) else {
        return out;
    };
    if duv < 2 {
        return out;
    }
    let sigma_u = geodesic_counts(g, u);
    let sigma_v = geodesic_counts(g, v);
    for w in 0..n {
        if w == u || w == v || !d.between(u, w, v) {
            continue;
        }
        let forced = match (sigma_u[w], sigma_v[w], sigma_u[v]) {
            (Some(a), Some(b), Some(total)) => a.checked_mul(b).map(|p| p == total),
            _ => None,
        };
        let forced = forced.unwrap_or_else(|| {
            let mut blocked = FixedBitSet::with_capacity(n);
            blocked.insert(w);
            !geodesic_avoids(g, u, v, &blocked)
        });
        if forced {
            out.insert(w);
        }
    }
    out
}

/// Number of shortest paths from `s` to every vertex; `None` on overflow.
fn geodesic_counts(g: &Graph, s: usize) -> Vec<Option<u128>> {
    let d = g.distances();
    let mut order: Vec<usize> = (0..g.order()).filter(|&x| d.get(s, x).is_some()).collect();
    order.sort_by_key(|&x| d.get(s, x));
    let mut sigma = vec![Some(0u128); g.order()];
    sigma[s] = Some(1);
    for &x in &order[1..] {
        let dx = d.get(s, x).unwrap();
        let mut acc = Some(0u128);
        for &y in g.neighbours(x) {
            if d.get(s, y) == Some(dx - 1) {
                acc = match (acc, sigma[y]) {
                    (Some(a), Some(b)) => a.checked_add(b),
                    _ => None,
                };
            }
        }
        sigma[x] = acc;
    }
    sigma
}
