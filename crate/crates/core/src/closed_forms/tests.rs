use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::families::{parse_spec, random_split_graph};
use crate::solver::{chromatic_position_number, Optimality};
use crate::testutil::{all_graphs, arb_graph};

fn chi(g: &Graph, kind: PositionKind) -> usize {
    let c = chromatic_position_number(g, kind, &Budget::default()).unwrap();
    assert_eq!(c.optimality, Optimality::Exact);
    c.k()
}

fn predict(text: &str, kind: PositionKind) -> Prediction {
    predicted_chi(&parse_spec(text).unwrap(), kind)
}

/// Minimum number of classes, each a clique or an independent set.
fn brute_force_cochromatic(g: &Graph) -> usize {
    fn ok(g: &Graph, c: &[usize]) -> bool {
        g.is_clique(c) || g.is_independent(c)
    }
    fn rec(g: &Graph, v: usize, classes: &mut Vec<Vec<usize>>, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if v == g.order() {
            *best = classes.len();
            return;
        }
        for c in 0..=classes.len() {
            if c == classes.len() {
                classes.push(vec![v]);
            } else {
                classes[c].push(v);
            }
            if ok(g, &classes[c]) {
                rec(g, v + 1, classes, best);
            }
            if classes[c].len() == 1 {
                classes.pop();
            } else {
                classes[c].pop();
            }
        }
    }
    let mut best = g.order() + 1;
    rec(g, 0, &mut Vec::new(), &mut best);
    best
}

fn partitions(n: usize, max: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        partitions(n - p, p, out, cur);
        cur.pop();
    }
}

#[test]
fn worked_examples() {
    assert_eq!(predict("cycle:9", PositionKind::Gp).exact_value(), Some(3));
    assert_eq!(
        predict("line_complete:6", PositionKind::Gp).exact_value(),
        Some(4)
    );
    assert_eq!(
        predict("multipartite:3,1", PositionKind::Gp).exact_value(),
        Some(2)
    );
    assert_eq!(predict("H:5,5", PositionKind::Gp).exact_value(), Some(4));
    assert_eq!(predict("H:5,5", PositionKind::Mono).exact_value(), Some(6));
    assert!(predict("Q:5", PositionKind::Gp).is_unknown());
    assert_eq!(line_complete_formula(4), 2);
    assert_eq!(line_complete_formula(5), 3);
    assert_eq!(line_complete_formula(7), 4);
    assert_eq!(line_complete_formula(9), 4);
    assert_eq!(line_complete_formula(18), 9);
    assert_eq!(p3_grid_lower_bound(12), 10);
}

#[test]
fn cycle_formulas_match_solver() {
    for n in 5..=15 {
        let g = FamilySpec::Cycle(n).generate().unwrap();
        assert_eq!(
            Some(chi(&g, PositionKind::Gp)),
            predict(&format!("cycle:{n}"), PositionKind::Gp).exact_value()
        );
    }
    for n in 4..=12 {
        let g = FamilySpec::Cycle(n).generate().unwrap();
        assert_eq!(
            Some(chi(&g, PositionKind::Mono)),
            predict(&format!("cycle:{n}"), PositionKind::Mono).exact_value()
        );
    }
    // the triangle is a clique, so one class suffices
    assert_eq!(
        predict("cycle:3", PositionKind::Mono).exact_value(),
        Some(1)
    );
}

#[test]
fn multipartite_formula_is_the_cochromatic_number() {
    for n in 1..=7 {
        let mut all = Vec::new();
        partitions(n, n, &mut all, &mut Vec::new());
        for parts in all {
            let spec = FamilySpec::Multipartite(parts.clone());
            let g = spec.generate().unwrap();
            let f = multipartite_formula(&parts);
            assert_eq!(f, brute_force_cochromatic(&g), "{parts:?}");
            assert_eq!(f, chi(&g, PositionKind::Gp), "{parts:?}");
        }
    }
}

#[test]
fn predictions_agree_with_solver_on_small_instances() {
    let specs = [
        "path:7",
        "cycle:4",
        "kneser2:5",
        "petersen",
        "line_complete:4",
        "line_complete:5",
        "turan:3,7",
        "tree_leaves:3,2",
        "T:3,5",
        "H:3,3",
        "H:4,2",
        "J:1,2",
        "J:2,2",
        "G_star:3,6",
        "G:3,5",
        "S:3,2",
        "S:4,2",
        "complete_minus_cliques:6,3",
        "cycle_join_clique:3,7",
        "split_random:7,3",
        "complementary_prism(split_random:4,1)",
        "cartesian(path:2,path:5)",
        "cartesian(path:3,path:4)",
        "cartesian(path:4,path:4)",
        "strong(path:3,path:4)",
        "strong(path:2,path:4)",
        "block_random:10,5",
    ];
    for text in specs {
        let spec = parse_spec(text).unwrap();
        let g = spec.generate().unwrap();
        for kind in PositionKind::ALL {
            let p = predicted_chi(&spec, kind);
            let k = chi(&g, kind);
            assert!(p.admits(k), "{text} {kind}: predicted {p:?}, solver {k}");
        }
    }
}

#[test]
fn characterisation_of_value_two() {
    let b = Budget::default();
    let p5 = FamilySpec::Path(5).generate().unwrap();
    assert!(!chi_gp_two_characterization(&p5, &b).unwrap());
    for seed in 0..30 {
        let g = random_split_graph(9, seed);
        assert!(chi_gp_two_characterization(&g, &b).unwrap());
    }
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert_eq!(
                chi_gp_two_characterization(&g, &b).unwrap(),
                chi(&g, PositionKind::Gp) == 2,
                "{:?}",
                g.edges()
            );
        }
    }
}

fn classes_with(n: usize, kind: PositionKind, value: usize) -> BTreeSet<String> {
    all_graphs(n)
        .filter(|g| chi(g, kind) == value)
        .map(|g| g.canonical_graph6().unwrap())
        .collect()
}

fn codes(gs: &[Graph]) -> BTreeSet<String> {
    gs.iter().map(|g| g.canonical_graph6().unwrap()).collect()
}

#[test]
fn large_value_catalogues_match_exhaustive_classification() {
    for n in 2..=5 {
        let cat = large_value_characterization(n).unwrap();
        assert_eq!(
            classes_with(n, PositionKind::Gp, n - 1),
            codes(&cat.gp_n_minus_1),
            "n = {n}"
        );
        assert_eq!(
            classes_with(n, PositionKind::Mono, n - 1),
            codes(&cat.gp_n_minus_1),
            "n = {n}"
        );
        assert_eq!(
            classes_with(n, PositionKind::Gp, n - 2),
            codes(&cat.gp_n_minus_2),
            "n = {n}"
        );
        assert_eq!(
            classes_with(n, PositionKind::Mono, n - 2),
            codes(&cat.mono_n_minus_2),
            "n = {n}"
        );
        // the stated list misses K_{n-1} plus an isolated vertex
        let mut gpi = codes(&cat.gpi_n_minus_1);
        let mut extra = Graph::disjoint_union(&Graph::complete(n - 1), &Graph::empty(1));
        extra = extra.permuted(&(0..n).collect::<Vec<_>>());
        gpi.insert(extra.canonical_graph6().unwrap());
        assert_eq!(classes_with(n, PositionKind::GpI, n - 1), gpi, "n = {n}");
    }
    assert!(large_value_characterization(7).is_err());
}

#[test]
fn split_detection() {
    assert!(Graph::complete(4).is_split());
    assert!(FamilySpec::Path(4).generate().unwrap().is_split());
    assert!(!FamilySpec::Cycle(4).generate().unwrap().is_split());
    assert!(!FamilySpec::Cycle(5).generate().unwrap().is_split());
    for seed in 0..20 {
        assert!(random_split_graph(8, seed).is_split());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characterisation_matches_solver(g in arb_graph(7)) {
        prop_assert_eq!(
            chi_gp_two_characterization(&g, &Budget::default()).unwrap(),
            chi(&g, PositionKind::Gp) == 2
        );
    }
}
