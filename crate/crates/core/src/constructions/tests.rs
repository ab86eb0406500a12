use super::*;
use crate::families::{parse_spec, random_block_graph, random_split_graph};
use crate::solver::{chromatic_position_number, clique_cover_number, total_domination_number};

fn build_text(text: &str, kind: PositionKind) -> CertifiedColouring {
    construct_colouring(&parse_spec(text).unwrap(), kind).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn solver_chi(text: &str, kind: PositionKind) -> usize {
    let g = parse_spec(text).unwrap().generate().unwrap();
    let c = chromatic_position_number(&g, kind, &Budget::default()).unwrap();
    assert_eq!(c.optimality, Optimality::Exact);
    c.k()
}

fn exact_prediction(text: &str, kind: PositionKind) -> usize {
    predicted_chi(&parse_spec(text).unwrap(), kind)
        .exact_value()
        .unwrap_or_else(|| panic!("{text}: no exact value"))
}

#[test]
fn kirkman_systems() {
    let k3 = kirkman_triple_system(3).unwrap();
    assert_eq!(k3.classes, vec![vec![[1, 2, 3]]]);
    let k9 = kirkman_triple_system(9).unwrap();
    assert_eq!(k9.classes.len(), 4);
    assert!(k9.classes.iter().all(|c| c.len() == 3));
    assert_eq!(k9.classes[0], vec![[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
    let k15 = kirkman_triple_system(15).unwrap();
    assert_eq!(k15.classes.len(), 7);
    assert!(k15.classes.iter().all(|c| c.len() == 5));
    let back: TripleSystem = serde_json::from_str(&k15.to_json()).unwrap();
    assert_eq!(back, k15);
    assert!(matches!(
        kirkman_triple_system(21),
        Err(Error::Unsupported(_))
    ));
    let mut broken = k9.clone();
    broken.classes[1][0][0] = broken.classes[1][1][0];
    assert!(broken.audit().is_err());
}

#[test]
fn worked_examples() {
    let c = build_text("cycle:9", PositionKind::Gp);
    assert_eq!(
        c.colouring.classes(),
        vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]
    );
    assert!(c.verified);
    let n = 6;
    let c = build_text("kneser2:6", PositionKind::Gp);
    assert_eq!(c.k(), 3);
    let pair = |a, b| two_subset_index(n, a, b);
    let classes = c.colouring.classes();
    let mut within4: Vec<usize> = crate::families::two_subsets(4)
        .into_iter()
        .map(|(a, b)| pair(a, b))
        .collect();
    within4.sort_unstable();
    assert_eq!(classes[0], within4);
    assert_eq!(classes[1], (1..5).map(|a| pair(a, 5)).collect::<Vec<_>>());
    assert_eq!(
        build_text("cartesian(path:4,path:6)", PositionKind::Gp).k(),
        7
    );
}

#[test]
fn counts_equal_exact_predictions() {
    let mut cases: Vec<String> = Vec::new();
    cases.extend((5..=15).map(|n| format!("cycle:{n}")));
    cases.extend((5..=8).map(|n| format!("kneser2:{n}")));
    cases.extend(
        (3..=9)
            .chain([13, 15])
            .map(|n| format!("line_complete:{n}")),
    );
    cases.extend((3..=12).map(|n| format!("cartesian(path:2,path:{n})")));
    cases.extend([
        "cartesian(path:3,path:12)".into(),
        "cartesian(path:12,path:3)".into(),
        "cartesian(path:3,path:24)".into(),
    ]);
    cases.extend((4..=10).map(|n| format!("cartesian(path:4,path:{n})")));
    cases.extend(
        [
            "H:3,3",
            "H:4,6",
            "H:6,3",
            "complete_minus_cliques:9,3",
            "cycle_join_clique:4,10",
            "turan:3,8",
        ]
        .map(String::from),
    );
    for text in &cases {
        let kind = if text.starts_with("cycle_join_clique") {
            PositionKind::Mono
        } else {
            PositionKind::Gp
        };
        let c = build_text(text, kind);
        assert_eq!(c.k(), exact_prediction(text, c.kind), "{text}");
        assert_eq!(c.optimality, Optimality::Exact, "{text}");
    }
    for n in 10..=17 {
        let c = build_text(&format!("line_complete:{n}"), PositionKind::Gp);
        assert_eq!(
            c.k(),
            exact_prediction(&format!("line_complete:{n}"), PositionKind::Gp),
            "n = {n}"
        );
    }
    let c = build_text("line_complete:18", PositionKind::Gp);
    assert_eq!((c.k(), c.optimality), (10, Optimality::UpperBoundOnly));
}

#[test]
fn multipartite_constructions() {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            partitions(n - p, p, cur, out);
            cur.pop();
        }
    }
    for n in 1..=8 {
        let mut all = Vec::new();
        partitions(n, n, &mut Vec::new(), &mut all);
        for parts in all {
            let spec = FamilySpec::Multipartite(parts.clone());
            let c = construct_colouring(&spec, PositionKind::Gp).unwrap();
            assert_eq!(c.k(), multipartite_formula(&parts), "{parts:?}");
        }
    }
}

#[test]
fn mono_and_independent_constructions_match_solver() {
    for text in [
        "cycle:3",
        "cycle:8",
        "path:9",
        "T:3,5",
        "S:3,2",
        "H:3,3",
        "H:4,2",
        "cycle_join_clique:3,7",
    ] {
        let c = build_text(text, PositionKind::Mono);
        assert_eq!(c.k(), solver_chi(text, PositionKind::Mono), "{text}");
    }
    for kind in [PositionKind::GpI, PositionKind::MonoI] {
        let c = build_text("turan:3,7", kind);
        assert_eq!(c.k(), solver_chi("turan:3,7", kind));
    }
    for text in [
        "H:3,3",
        "H:3,0",
        "H:4,1",
        "G_star:3,6",
        "G:3,5",
        "tree_leaves:3,2",
        "complete_minus_cliques:6,3",
    ] {
        assert_eq!(
            build_text(text, PositionKind::Gp).k(),
            solver_chi(text, PositionKind::Gp),
            "{text}"
        );
    }
}

#[test]
fn strong_grids_against_solver() {
    for m in 2..=4usize {
        for n in m..=4 {
            let text = format!("strong(path:{m},path:{n})");
            let gp = build_text(&text, PositionKind::Gp);
            assert!(gp.k() <= m.div_ceil(2) * n.div_ceil(2));
            let mu = build_text(&text, PositionKind::Mu);
            assert_eq!(mu.k(), solver_chi(&text, PositionKind::Mu), "{text}");
            if m % 2 == 0 && n % 2 == 0 {
                assert_eq!(gp.k(), solver_chi(&text, PositionKind::Gp), "{text}");
            }
        }
    }
    let c = build_text("strong(path:7,path:5)", PositionKind::Mu);
    assert_eq!(c.k(), 3);
}

#[test]
fn cylinder_and_tessellation() {
    let c = build_text("cartesian(path:5,cycle:7)", PositionKind::Gp);
    assert_eq!((c.k(), c.optimality), (7, Optimality::Exact));
    let c = build_text("cartesian(cycle:11,path:10)", PositionKind::Gp);
    assert_eq!((c.k(), c.optimality), (22, Optimality::Exact));
    let c = build_text("cartesian(path:7,cycle:9)", PositionKind::Gp);
    assert_eq!(c.k(), 9 + 2 * 5);
    // the open neighbourhoods miss boundary-column vertices of the grid, so
    // some sizes end one above the stated bound
    for (n1, n2, slack) in [(3, 4, 0), (5, 8, 0), (7, 12, 1), (9, 8, 1)] {
        let bound = n1 * n2 / 4 + if n2 % 3 == 0 { n2 / 12 } else { n2 / 12 + 1 };
        for text in [
            format!("cartesian(path:{n1},path:{n2})"),
            format!("cartesian(path:{n2},path:{n1})"),
        ] {
            let c = build_text(&text, PositionKind::Gp);
            assert_eq!(c.k(), bound + slack, "{text}");
            assert!(c.k() >= (n1 * n2).div_ceil(4));
        }
    }
}

#[test]
fn torus_seven() {
    let seed = torus_seed(49, 49).unwrap();
    assert_eq!(
        seed,
        vec![
            (0, 0),
            (7, 2),
            (14, 25),
            (21, 27),
            (28, 1),
            (35, 3),
            (42, 26)
        ]
    );
    let c = build_text("cartesian(cycle:49,cycle:49)", PositionKind::Gp);
    assert_eq!(c.k(), 343);
    assert!(c.colouring.classes().iter().all(|class| class.len() == 7));
    assert_eq!(c.optimality, Optimality::Exact);
    assert!(!verify_torus_cyclic(49, 49, &[seed]));
}

#[test]
fn peeling() {
    let p7 = FamilySpec::Path(7).generate().unwrap();
    let c = colour_block_graph_peeling(&p7).unwrap();
    assert_eq!(
        c.colouring.classes(),
        vec![vec![0, 6], vec![1, 5], vec![2, 4], vec![3]]
    );
    let mut edges = Graph::complete(4).edges();
    edges.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]);
    let bowtie = Graph::new(7, &edges).unwrap();
    assert_eq!(colour_block_graph_peeling(&bowtie).unwrap().k(), 2);
    for seed in 0..50 {
        let g = random_block_graph(14, seed);
        let c = colour_block_graph_peeling(&g).unwrap();
        assert_eq!(c.k() as u32, (g.diameter() + 2) / 2, "seed {seed}");
    }
    let c4 = FamilySpec::Cycle(4).generate().unwrap();
    assert!(matches!(
        colour_block_graph_peeling(&c4),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn cover_based_colourings() {
    let b = Budget::default();
    for seed in 0..10 {
        let g = random_split_graph(9, seed);
        let c = colour_by_clique_cover(&g, PositionKind::Gp).unwrap();
        assert!(c.k() <= clique_cover_number(&g, &b).unwrap());
    }
    let p8 = FamilySpec::Path(8).generate().unwrap();
    let c = colour_by_total_domination(&p8).unwrap();
    assert_eq!(c.k(), 4);
    assert_eq!(total_domination_number(&p8, &b).unwrap(), 4);
    let c6 = FamilySpec::Cycle(6).generate().unwrap();
    assert!(colour_by_total_domination(&c6).unwrap().verified);
    let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(matches!(
        colour_by_total_domination(&diamond),
        Err(Error::Precondition(_))
    ));
    assert!(colour_by_clique_cover(&p8, PositionKind::GpI).is_err());
}

#[test]
fn unsupported_pairs() {
    for (text, kind) in [
        ("Q:5", PositionKind::Gp),
        ("cycle:7", PositionKind::Mu),
        ("cartesian(path:3,path:5)", PositionKind::Gp),
    ] {
        assert!(
            matches!(
                construct_colouring(&parse_spec(text).unwrap(), kind),
                Err(Error::Unsupported(_))
            ),
            "{text}"
        );
    }
}
