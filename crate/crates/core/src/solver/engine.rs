//! Exact partition search: split the vertex set into at most `k`
//! admissible classes of a [`ConflictModel`].
//!
//! Vertices are chosen dynamically (fewest usable classes first, then
//! descending degree, then id). A vertex may open a new class only as the
//! next unused index. Each class keeps the set of vertices its members
//! exclude, so usable classes can be counted without re-testing triples.
//! Two capacity arguments prune further: `cap[v]` bounds the size of any
//! class containing `v`, so a class holding `v` has at most `cap[v]`
//! members, and summing `1/cap[v]` over a class never exceeds one.

use fixedbitset::FixedBitSet;

use crate::budget::Meter;
use crate::error::Result;
use crate::position::ConflictModel;

const EPS: f64 = 1e-9;

struct Search<'a, 'g> {
    model: &'a ConflictModel<'g>,
    k: usize,
    cap: &'a [usize],
    weight: Vec<f64>,
    assign: Vec<usize>,
    members: Vec<Vec<usize>>,
    member_sets: Vec<FixedBitSet>,
    block: Vec<FixedBitSet>,
    class_cap: Vec<usize>,
    class_weight: Vec<f64>,
    open: usize,
    remaining: usize,
    unassigned_weight: f64,
    degree: Vec<usize>,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a, 'g> Search<'a, 'g> {
    fn new(model: &'a ConflictModel<'g>, cap: &'a [usize], k: usize) -> Self {
        let n = model.order();
        let weight: Vec<f64> = cap.iter().map(|&c| 1.0 / c.max(1) as f64).collect();
        let g = model.graph();
        Search {
            model,
            k,
            cap,
            unassigned_weight: weight.iter().sum(),
            weight,
            assign: vec![UNASSIGNED; n],
            members: vec![Vec::new(); k],
            member_sets: vec![FixedBitSet::with_capacity(n); k],
            block: vec![FixedBitSet::with_capacity(n); k],
            class_cap: vec![usize::MAX; k],
            class_weight: vec![0.0; k],
            open: 0,
            remaining: n,
            degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    #[inline]
    fn usable(&self, c: usize, x: usize) -> bool {
        let size = self.members[c].len();
        !self.block[c].contains(x) && size < self.class_cap[c] && size < self.cap[x]
    }

    /// Unassigned vertex with fewest options; `None` when all are assigned.
    /// Returns the option count too (0 means a dead end).
    fn select(&self) -> Option<(usize, usize)> {
        let fresh = usize::from(self.open < self.k);
        let mut best: Option<(usize, usize)> = None;
        for x in 0..self.assign.len() {
            if self.assign[x] != UNASSIGNED {
                continue;
            }
            let opts = (0..self.open).filter(|&c| self.usable(c, x)).count() + fresh;
            let better = match best {
                None => true,
                Some((b, bo)) => opts < bo || (opts == bo && self.degree[x] > self.degree[b]),
            };
            if better {
                best = Some((x, opts));
                if opts == 0 {
                    break;
                }
            }
        }
        best
    }

    fn weight_bound_fails(&self) -> bool {
        let room: f64 = (0..self.open)
            .map(|c| 1.0 - self.class_weight[c])
            .sum::<f64>()
            + (self.k - self.open) as f64;
        self.unassigned_weight > room + EPS
    }

    fn place(&mut self, x: usize, c: usize) -> FixedBitSet {
        let saved = self.block[c].clone();
        self.model
            .block_with(x, &self.members[c], &mut self.block[c]);
        self.members[c].push(x);
        self.member_sets[c].insert(x);
        self.class_weight[c] += self.weight[x];
        self.class_cap[c] = self.class_cap[c].min(self.cap[x]);
        self.assign[x] = c;
        self.remaining -= 1;
        self.unassigned_weight -= self.weight[x];
        if c == self.open {
            self.open += 1;
        }
        saved
    }

    fn unplace(&mut self, x: usize, c: usize, saved: FixedBitSet, cap_before: usize) {
        self.block[c] = saved;
        self.members[c].pop();
        self.member_sets[c].set(x, false);
        self.class_weight[c] -= self.weight[x];
        self.class_cap[c] = cap_before;
        self.assign[x] = UNASSIGNED;
        self.remaining += 1;
        self.unassigned_weight += self.weight[x];
        if self.members[c].is_empty() {
            self.open -= 1;
        }
    }

    fn run(&mut self, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        if self.remaining == 0 {
            return Ok(true);
        }
        if self.weight_bound_fails() {
            return Ok(false);
        }
        let Some((x, opts)) = self.select() else {
            return Ok(true);
        };
        if opts == 0 {
            return Ok(false);
        }
        let last = if self.open < self.k {
            self.open + 1
        } else {
            self.open
        };
        for c in 0..last {
            if c < self.open && !self.usable(c, x) {
                continue;
            }
            if c < self.open
                && self.model.needs_exact_check()
                && !self
                    .model
                    .can_extend(&self.members[c], &self.member_sets[c], x)
            {
                continue;
            }
            let cap_before = self.class_cap[c];
            let saved = self.place(x, c);
            let found = self.run(meter)?;
            if found {
                return Ok(true);
            }
            self.unplace(x, c, saved, cap_before);
        }
        Ok(false)
    }
}

/// Searches for a partition into at most `k` classes. `cap[v]` must be an
/// upper bound on the size of every admissible set containing `v`.
pub(crate) fn colour_with(
    model: &ConflictModel,
    cap: &[usize],
    k: usize,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let n = model.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search::new(model, cap, k);
    if s.run(meter)? {
        Ok(Some(s.assign))
    } else {
        Ok(None)
    }
}

/// Greedy first-fit colouring in the order given, starting from the
/// classes in `seed` (which must be admissible).
pub(crate) fn greedy(model: &ConflictModel, order: &[usize], seed: &[Vec<usize>]) -> Vec<usize> {
    let n = model.order();
    let mut assign = vec![UNASSIGNED; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut sets: Vec<FixedBitSet> = Vec::new();
    for class in seed {
        let mut set = FixedBitSet::with_capacity(n);
        for &v in class {
            set.insert(v);
            assign[v] = members.len();
        }
        members.push(class.clone());
        sets.push(set);
    }
    for &v in order {
        if assign[v] != UNASSIGNED {
            continue;
        }
        let c = (0..members.len())
            .find(|&c| model.can_extend(&members[c], &sets[c], v))
            .unwrap_or_else(|| {
                members.push(Vec::new());
                sets.push(FixedBitSet::with_capacity(n));
                members.len() - 1
            });
        members[c].push(v);
        sets[c].insert(v);
        assign[v] = c;
    }
    assign
}

/// Greedy colouring that always extends the vertex with fewest usable
/// classes (ties by degree, then id).
pub(crate) fn greedy_saturation(model: &ConflictModel) -> Vec<usize> {
    let n = model.order();
    let cap = vec![n.max(1); n];
    let mut s = Search::new(model, &cap, n.max(1));
    while let Some((x, _)) = s.select() {
        let c = (0..s.open)
            .find(|&c| s.usable(c, x) && s.model.can_extend(&s.members[c], &s.member_sets[c], x))
            .unwrap_or(s.open);
        s.place(x, c);
    }
    s.assign
}
