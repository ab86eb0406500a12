use std::collections::VecDeque;

use super::Graph;

const INF: u32 = u32::MAX;

/// All-pairs hop distances. Pairs in different components have no
/// distance; [`DistanceMatrix::get`] returns `None` for them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn bfs(g: &Graph) -> DistanceMatrix {
        let n = g.order();
        let mut d = vec![INF; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbours(u) {
                    if row[v] == INF {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != INF).then_some(x)
    }

    /// True when `w` lies on some shortest `u`–`v` path (endpoints included).
    /// False whenever any of the three distances is undefined.
    #[inline]
    pub fn between(&self, u: usize, w: usize, v: usize) -> bool {
        let n = self.n;
        let (a, b, c) = (self.d[u * n + w], self.d[w * n + v], self.d[u * n + v]);
        c != INF && a != INF && b != INF && a + b == c
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&x| x != INF)
            .max()
            .unwrap_or(0)
    }
}

/// Connected components with their diameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStructure {
    /// Component index of each vertex, numbered by smallest member.
    pub component_of: Vec<usize>,
    /// Diameter of each component.
    pub diameters: Vec<u32>,
    /// Maximum component diameter (0 for the empty graph).
    pub diam_star: u32,
}

impl ComponentStructure {
    pub fn new(g: &Graph) -> ComponentStructure {
        let n = g.order();
        let mut component_of = vec![usize::MAX; n];
        let mut diameters = Vec::new();
        let dm = g.distances();
        for s in 0..n {
            if component_of[s] != usize::MAX {
                continue;
            }
            let id = diameters.len();
            let members = g.bfs_order(s);
            let mut diam = 0;
            for &u in &members {
                component_of[u] = id;
                for &v in &members {
                    diam = diam.max(dm.get(u, v).expect("same component"));
                }
            }
            diameters.push(diam);
        }
        let diam_star = diameters.iter().copied().max().unwrap_or(0);
        ComponentStructure {
            component_of,
            diameters,
            diam_star,
        }
    }

    pub fn count(&self) -> usize {
        self.diameters.len()
    }

    /// Sorted vertex lists, one per component.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count()];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
        let n = g.order();
        let mut d = vec![vec![None; n]; n];
        for u in 0..n {
            d[u][u] = Some(0);
            for &v in g.neighbours(u) {
                d[u][v] = Some(1);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    #[test]
    fn small_examples() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.dist(0, 2), Some(2));
        let two = Graph::empty(2);
        assert_eq!(two.dist(0, 1), None);
        assert!(!two.distances().between(0, 1, 1));
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.components().diam_star, 4);
        let k3_p3 = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let cs = k3_p3.components();
        assert_eq!(cs.diameters, vec![1, 2]);
        assert_eq!(cs.diam_star, 2);
    }

    proptest! {
        #[test]
        fn bfs_matches_floyd_warshall(g in arb_graph(12)) {
            let fw = floyd_warshall(&g);
            let dm = g.distances();
            for u in 0..g.order() {
                for v in 0..g.order() {
                    prop_assert_eq!(dm.get(u, v), fw[u][v]);
                    prop_assert_eq!(dm.get(u, v) == Some(1), g.adjacent(u, v));
                }
            }
        }

        #[test]
        fn cartesian_distances_add(g in arb_graph(5), h in arb_graph(5)) {
            let p = Graph::cartesian(&g, &h);
            let m = h.order();
            for a in 0..p.order() {
                for b in 0..p.order() {
                    let expect = match (g.dist(a / m, b / m), h.dist(a % m, b % m)) {
                        (Some(x), Some(y)) => Some(x + y),
                        _ => None,
                    };
                    prop_assert_eq!(p.dist(a, b), expect);
                }
            }
        }
    }
}
