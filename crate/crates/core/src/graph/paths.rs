//! Induced-path routines: the monophonic betweenness relation and the
//! monophonic diameter. Both are exhaustive backtracking searches over
//! induced path extensions and run under a [`Budget`].

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};

/// For every pair `u, v`, the vertices lying on some induced `u`–`v` path,
/// endpoints excluded.
#[derive(Clone, Debug)]
pub struct InducedTriples {
    n: usize,
    inner: Vec<FixedBitSet>,
}

impl InducedTriples {
    /// Enumerates every induced path of `g`.
    pub fn compute(g: &Graph, budget: &Budget) -> Result<InducedTriples> {
        let n = g.order();
        let mut inner = vec![FixedBitSet::with_capacity(n); n * n];
        let mut meter = budget.meter("induced path enumeration");
        for s in 0..n {
            walk_induced(g, s, &mut meter, &mut |path| {
                let y = *path.last().unwrap();
                if y > s {
                    let row = &mut inner[s * n + y];
                    for &w in &path[1..path.len() - 1] {
                        row.insert(w);
                    }
                }
            })?;
        }
        for u in 0..n {
            for v in 0..u {
                inner[u * n + v] = inner[v * n + u].clone();
            }
        }
        Ok(InducedTriples { n, inner })
    }

    /// True when some induced `u`–`v` path passes through `w`.
    #[inline]
    pub fn contains(&self, u: usize, w: usize, v: usize) -> bool {
        self.inner[u * self.n + v].contains(w)
    }

    /// Interior vertices of induced `u`–`v` paths.
    pub fn interior(&self, u: usize, v: usize) -> &FixedBitSet {
        &self.inner[u * self.n + v]
    }
}

/// Depth-first walk over all induced paths with first vertex `s` and at
/// least one edge; `visit` sees each path once.
fn walk_induced(
    g: &Graph,
    s: usize,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let n = g.order();
    let mut path = vec![s];
    // blocked[x] > 0 when x is on the path or adjacent to a non-final path vertex
    let mut blocked = vec![0u32; n];
    blocked[s] += 1;
    // frame: index into neighbours of the last path vertex
    let mut next = vec![0usize];
    while let Some(idx) = next.last_mut() {
        let x = *path.last().unwrap();
        if *idx >= g.degree(x) {
            next.pop();
            path.pop();
            blocked[x] -= 1;
            if let Some(&p) = path.last() {
                for &z in g.neighbours(p) {
                    blocked[z] -= 1;
                }
            }
            continue;
        }
        let y = g.neighbours(x)[*idx];
        *idx += 1;
        if blocked[y] > 0 {
            continue;
        }
        meter.tick()?;
        // x stops being the final vertex: its neighbours become forbidden
        for &z in g.neighbours(x) {
            blocked[z] += 1;
        }
        blocked[y] += 1;
        path.push(y);
        visit(&path);
        next.push(0);
    }
    Ok(())
}

/// True when some induced `u`–`v` path contains `w`.
pub fn exists_induced_path_through(
    g: &Graph,
    u: usize,
    w: usize,
    v: usize,
    budget: &Budget,
) -> Result<bool> {
    for x in [u, w, v] {
        g.check_vertex(x)?;
    }
    if u == w || w == v || u == v {
        return Err(Error::Precondition(
            "the three vertices must be distinct".into(),
        ));
    }
    let mut meter = budget.meter("induced path search");
    let mut found = false;
    // walk_induced has no early exit; the search is bounded by the budget
    // and u-v paths are filtered here.
    let res = walk_induced(g, u, &mut meter, &mut |path| {
        if !found && *path.last().unwrap() == v && path.contains(&w) {
            found = true;
        }
    });
    match res {
        Ok(()) => Ok(found),
        Err(_) if found => Ok(true),
        Err(e) => Err(e),
    }
}

/// Length (edge count) of a longest induced path, maximised over components.
pub fn monophonic_diameter(g: &Graph, budget: &Budget) -> Result<u32> {
    let mut meter = budget.meter("monophonic diameter");
    let mut best = 0usize;
    for s in 0..g.order() {
        walk_induced(g, s, &mut meter, &mut |path| {
            best = best.max(path.len() - 1);
        })?;
    }
    Ok(best as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Brute force: every vertex sequence that forms an induced path.
    fn all_induced_paths(g: &Graph) -> Vec<Vec<usize>> {
        fn rec(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if path.len() >= 2 {
                out.push(path.clone());
            }
            for y in 0..g.order() {
                if path.contains(&y) {
                    continue;
                }
                path.push(y);
                let ok = (0..path.len()).all(|i| {
                    (i + 1..path.len()).all(|j| g.adjacent(path[i], path[j]) == (j == i + 1))
                });
                if ok {
                    rec(g, path, out);
                }
                path.pop();
            }
        }
        let mut out = Vec::new();
        for s in 0..g.order() {
            rec(g, &mut vec![s], &mut out);
        }
        out
    }

    fn petersen() -> Graph {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, i + 5)));
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn monophonic_diameters() {
        let b = Budget::default();
        // 0-1-2-3-4 is an induced path in C_6
        assert_eq!(monophonic_diameter(&cycle(6), &b).unwrap(), 4);
        assert_eq!(monophonic_diameter(&cycle(9), &b).unwrap(), 7);
        let p6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(monophonic_diameter(&p6, &b).unwrap(), 5);
        assert_eq!(monophonic_diameter(&Graph::complete(5), &b).unwrap(), 1);
        assert_eq!(monophonic_diameter(&Graph::empty(3), &b).unwrap(), 0);
    }

    #[test]
    fn triple_queries() {
        let b = Budget::default();
        assert!(exists_induced_path_through(&cycle(5), 0, 1, 2, &b).unwrap());
        let k4 = Graph::complete(4);
        assert!(!exists_induced_path_through(&k4, 0, 1, 2, &b).unwrap());
        assert!(exists_induced_path_through(&k4, 0, 0, 2, &b).is_err());
    }

    #[test]
    fn table_matches_brute_force() {
        for g in [petersen(), cycle(6), cycle(7)] {
            let n = g.order();
            let t = InducedTriples::compute(&g, &Budget::default()).unwrap();
            let mut expect = vec![FixedBitSet::with_capacity(n); n * n];
            for p in all_induced_paths(&g) {
                let (u, v) = (p[0], *p.last().unwrap());
                for &w in &p[1..p.len() - 1] {
                    expect[u * n + v].insert(w);
                }
            }
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(t.interior(u, v), &expect[u * n + v], "pair {u},{v}");
                }
            }
            let d = all_induced_paths(&g)
                .iter()
                .map(|p| p.len() - 1)
                .max()
                .unwrap();
            assert_eq!(
                monophonic_diameter(&g, &Budget::default()).unwrap() as usize,
                d
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = InducedTriples::compute(&petersen(), &Budget::nodes(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }
}
