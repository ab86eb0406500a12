use proptest::prelude::*;

use super::*;
use crate::testutil::{arb_graph, cycle, path, petersen};

/// All simple paths of `g` as vertex sequences with at least two vertices.
fn simple_paths(g: &Graph) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.len() >= 2 {
            out.push(p.clone());
        }
        let last = *p.last().unwrap();
        for &y in g.neighbours(last) {
            if !p.contains(&y) {
                p.push(y);
                rec(g, p, out);
                p.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        rec(g, &mut vec![s], &mut out);
    }
    out
}

/// Reference oracle built from explicit path lists.
struct PathOracle {
    n: usize,
    geodesics: Vec<Vec<usize>>,
    induced: Vec<Vec<usize>>,
    adj: Vec<Vec<bool>>,
}

impl PathOracle {
    fn new(g: &Graph) -> PathOracle {
        let n = g.order();
        let all = simple_paths(g);
        let mut shortest = vec![vec![usize::MAX; n]; n];
        for p in &all {
            let (u, v) = (p[0], *p.last().unwrap());
            shortest[u][v] = shortest[u][v].min(p.len());
        }
        let geodesics = all
            .iter()
            .filter(|p| shortest[p[0]][*p.last().unwrap()] == p.len())
            .cloned()
            .collect();
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| g.adjacent(u, v)).collect())
            .collect();
        let induced = all
            .into_iter()
            .filter(|p| (0..p.len()).all(|i| (i + 2..p.len()).all(|j| !adj[p[i]][p[j]])))
            .collect();
        PathOracle {
            n,
            geodesics,
            induced,
            adj,
        }
    }

    fn holds(&self, s: &[usize], kind: PositionKind) -> bool {
        if kind.is_independent() && s.iter().any(|&u| s.iter().any(|&v| self.adj[u][v])) {
            return false;
        }
        let count = |p: &Vec<usize>| p.iter().filter(|x| s.contains(x)).count();
        match kind.base() {
            PositionKind::Gp => self.geodesics.iter().all(|p| count(p) <= 2),
            PositionKind::Mono => self.induced.iter().all(|p| count(p) <= 2),
            _ => s.iter().all(|&u| {
                s.iter().all(|&v| {
                    let mut same_comp = u == v;
                    let mut visible = u == v;
                    for p in &self.geodesics {
                        if p[0] == u && *p.last().unwrap() == v {
                            same_comp = true;
                            if p[1..p.len() - 1].iter().all(|x| !s.contains(x)) {
                                visible = true;
                            }
                        }
                    }
                    !same_comp || visible
                })
            }),
        }
    }

    fn max_size(&self, kind: PositionKind) -> usize {
        (0u32..1 << self.n)
            .filter_map(|mask| {
                let s: Vec<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
                self.holds(&s, kind).then_some(s.len())
            })
            .max()
            .unwrap()
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

#[test]
fn kind_names_round_trip() {
    for k in PositionKind::ALL {
        assert_eq!(k.name().parse::<PositionKind>().unwrap(), k);
        assert_eq!(k.independent().base(), k.base());
    }
    assert_eq!("gpi".parse::<PositionKind>().unwrap(), PositionKind::GpI);
    assert!("nope".parse::<PositionKind>().is_err());
}

#[test]
fn membership_examples() {
    let p4 = path(4);
    assert!(!is_position_set(&p4, &[0, 1, 3], PositionKind::Gp).unwrap());
    let c6 = cycle(6);
    assert!(is_position_set(&c6, &[0, 2, 4], PositionKind::Mu).unwrap());
    // no geodesic of C_6 holds three of 0, 2, 4: d(0,2)+d(2,4)=4 > d(0,4)=2
    assert!(is_position_set(&c6, &[0, 2, 4], PositionKind::Gp).unwrap());
    let oracle = PathOracle::new(&c6);
    assert!(oracle.holds(&[0, 2, 4], PositionKind::Gp));
    assert!(!is_position_set(&c6, &[0, 2, 4], PositionKind::Mono).unwrap());
    let p = petersen();
    assert!(is_position_set(&p, &[0, 2, 3, 5, 7, 8], PositionKind::Gp).unwrap());
    assert!(is_position_set(&p, &[1, 4, 6, 9], PositionKind::Gp).unwrap());
    assert!(is_position_set(&p, &[], PositionKind::Mono).unwrap());
    assert!(is_position_set(&p, &[99], PositionKind::Gp).is_err());
}

#[test]
fn disconnected_convention() {
    // P_3 and K_1: the cross-component triple never violates
    let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
    for k in PositionKind::ALL {
        assert!(is_position_set(&g, &[0, 2, 3], k).unwrap(), "{k}");
    }
    assert!(!is_position_set(&g, &[0, 1, 2, 3], PositionKind::Mu).unwrap());
}

#[test]
fn geodesic_avoiding_examples() {
    let c6 = cycle(6);
    assert!(geodesic_avoiding(&c6, 0, 3, &[1, 2]).unwrap());
    assert!(!geodesic_avoiding(&c6, 0, 3, &[1, 4]).unwrap());
    assert!(!geodesic_avoiding(&path(4), 0, 3, &[1]).unwrap());
    assert!(geodesic_avoiding(&Graph::empty(2), 0, 1, &[]).is_err());
}

#[test]
fn position_number_examples() {
    let p = petersen();
    assert_eq!(position_number(&p, PositionKind::Gp).unwrap().value, 6);
    let ladder = Graph::cartesian(&path(2), &path(8));
    assert_eq!(position_number(&ladder, PositionKind::Gp).unwrap().value, 3);
    let k7 = Graph::complete(7);
    assert_eq!(position_number(&k7, PositionKind::Mono).unwrap().value, 7);
    assert_eq!(position_number(&k7, PositionKind::GpI).unwrap().value, 1);
    for n in 2..9 {
        assert_eq!(
            position_number(&path(n), PositionKind::Gp).unwrap().value,
            2
        );
    }
    assert_eq!(
        position_number(&cycle(4), PositionKind::Gp).unwrap().value,
        2
    );
    let w = position_number(&p, PositionKind::Mono).unwrap();
    assert!(is_position_set(&p, &w.witness, PositionKind::Mono).unwrap());
}

#[test]
fn maximality_examples() {
    // {0,4} in P_5: adding any internal vertex makes it collinear
    assert!(is_maximal_position_set(&path(5), &[0, 4], PositionKind::Gp).unwrap());
    assert!(is_maximal_position_set(&cycle(4), &[0, 2], PositionKind::Gp).unwrap());
    assert!(!is_maximal_position_set(&cycle(6), &[0, 2], PositionKind::Gp).unwrap());
    assert!(is_maximal_position_set(&path(4), &[0, 1, 3], PositionKind::Gp).is_err());
    for (g, s) in [(path(5), vec![0, 4]), (cycle(4), vec![0, 2])] {
        let oracle = PathOracle::new(&g);
        let extendable = (0..g.order()).filter(|v| !s.contains(v)).any(|v| {
            let mut t = s.clone();
            t.push(v);
            oracle.holds(&t, PositionKind::Gp)
        });
        assert!(!extendable);
    }
}

#[test]
fn oracles_agree_with_path_lists_on_small_graphs() {
    for g in [petersen(), cycle(6), cycle(7), path(5)] {
        let oracle = PathOracle::new(&g);
        for k in PositionKind::ALL {
            assert_eq!(
                position_number(&g, k).unwrap().value,
                oracle.max_size(k),
                "{k}"
            );
        }
    }
}

#[test]
fn enumerations() {
    let c6 = cycle(6);
    let oracle = PathOracle::new(&c6);
    for k in PositionKind::ALL {
        let mut expect: Vec<Vec<usize>> = subsets(6)
            .filter(|s| s.len() == 3 && oracle.holds(s, k))
            .collect();
        expect.sort();
        let mut got = position_sets_of_size(&c6, k, 3, &Budget::default()).unwrap();
        got.sort();
        assert_eq!(got, expect, "{k}");

        let mut maximal: Vec<Vec<usize>> = subsets(6)
            .filter(|s| oracle.holds(s, k))
            .filter(|s| {
                (0..6).filter(|v| !s.contains(v)).all(|v| {
                    let mut t = s.clone();
                    t.push(v);
                    !oracle.holds(&t, k)
                })
            })
            .collect();
        maximal.sort();
        let mut got = maximal_position_sets(&c6, k, &Budget::default()).unwrap();
        got.sort();
        assert_eq!(got, maximal, "{k}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_path_oracle(g in arb_graph(7)) {
        let oracle = PathOracle::new(&g);
        for s in subsets(g.order()) {
            for k in PositionKind::ALL {
                prop_assert_eq!(is_position_set(&g, &s, k).unwrap(), oracle.holds(&s, k));
            }
        }
    }

    #[test]
    fn position_number_matches_exhaustive(g in arb_graph(7)) {
        let oracle = PathOracle::new(&g);
        for k in PositionKind::ALL {
            let w = position_number(&g, k).unwrap();
            prop_assert_eq!(w.value, oracle.max_size(k));
            prop_assert_eq!(w.witness.len(), w.value);
            prop_assert!(oracle.holds(&w.witness, k));
        }
    }

    #[test]
    fn heredity_and_chain(g in arb_graph(9), mask in any::<u32>(), sub in any::<u32>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let t: Vec<usize> = s.iter().copied().filter(|&v| sub >> v & 1 == 1).collect();
        for k in PositionKind::ALL {
            if is_position_set(&g, &s, k).unwrap() {
                prop_assert!(is_position_set(&g, &t, k).unwrap());
            }
        }
        if is_position_set(&g, &s, PositionKind::Mono).unwrap() {
            prop_assert!(is_position_set(&g, &s, PositionKind::Gp).unwrap());
        }
        if is_position_set(&g, &s, PositionKind::Gp).unwrap() {
            prop_assert!(is_position_set(&g, &s, PositionKind::Mu).unwrap());
        }
    }
}
