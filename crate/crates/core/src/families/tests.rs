use super::*;
use crate::budget::Budget;
use crate::position::{position_number, PositionKind};
use crate::solver::chromatic_position_number;

fn gen(text: &str) -> Graph {
    parse_spec(text).unwrap().generate().unwrap()
}

fn girth(g: &Graph) -> Option<usize> {
    // shortest cycle through each edge: remove it and measure the distance
    let mut best = None;
    for (u, v) in g.edges() {
        let rest: Vec<_> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
        let h = Graph::new(g.order(), &rest).unwrap();
        if let Some(d) = h.dist(u, v) {
            let len = d as usize + 1;
            best = Some(best.map_or(len, |b: usize| b.min(len)));
        }
    }
    best
}

#[test]
fn kneser_five_is_petersen_shaped() {
    let k = gen("kneser2:5");
    assert_eq!(k.order(), 10);
    assert!((0..10).all(|v| k.degree(v) == 3));
    assert_eq!(girth(&k), Some(5));
    assert_eq!(girth(&petersen()), Some(5));
    assert_eq!(k.label(0), Some("{1,2}"));
    assert_eq!(two_subset_index(5, 4, 5), 9);
    assert_eq!(two_subset_index(5, 3, 1), 1);
    for n in 5..=9 {
        let g = kneser2(n);
        assert_eq!(g.order(), n * (n - 1) / 2);
        let d = (n - 2) * (n - 3) / 2;
        assert!((0..g.order()).all(|v| g.degree(v) == d));
        for (i, &(a, b)) in two_subsets(n).iter().enumerate() {
            assert_eq!(two_subset_index(n, a, b), i);
        }
    }
}

#[test]
fn proof_graphs_have_expected_shape() {
    let h = gen("H:5,5");
    assert_eq!((h.order(), h.diameter()), (16, 7));
    let l = gen("line_complete:4");
    assert_eq!(l.order(), 6);
    assert!((0..6).all(|v| l.degree(v) == 4));
    let t = gen("T:3,5");
    assert_eq!(t.order(), 7);
    assert_eq!(t.degree(3), 4);
    let g = gen("G:3,5");
    assert_eq!((g.order(), g.size()), (9, 3 + 6));
    let j = gen("J:2,2");
    assert_eq!(j.order(), 11);
    assert_eq!(j.label(0), Some("(1,1)"));
    let s = gen("S:3,2");
    assert_eq!((s.order(), s.size()), (8, 7));
    let c = gen("complete_minus_cliques:7,3");
    assert_eq!(c.size(), 21 - 1 - 3);
    let cj = gen("cycle_join_clique:3,7");
    assert_eq!(cj.size(), 5 + 1 + 10);
    let m = gen("multipartite:1,3,2");
    assert_eq!(m, complete_multipartite(&[3, 2, 1]));
    assert_eq!(gen("turan:3,7"), complete_multipartite(&[3, 2, 2]));
    let grid = gen("cartesian(path:3,path:4)");
    // (2,3) sits at (2-1)*4 + (3-1)
    assert_eq!(grid.label(6), Some("(2,3)"));
}

#[test]
fn q_graphs_have_general_position_number_three() {
    for r in 4..=8 {
        let q = FamilySpec::Q(r).generate().unwrap();
        assert_eq!(q.order(), r + 1);
        assert_eq!(
            position_number(&q, PositionKind::Gp).unwrap().value,
            3,
            "r = {r}"
        );
    }
}

#[test]
fn complementary_prism_counts() {
    for text in ["cycle:5", "path:4", "petersen", "random:7,0.4,3"] {
        let base = gen(text);
        let p = gen(&format!("complementary_prism({text})"));
        let n = base.order();
        assert_eq!(p.order(), 2 * n);
        assert_eq!(p.size(), base.size() + (n * (n - 1) / 2 - base.size()) + n);
    }
}

#[test]
fn parameter_ranges_are_checked() {
    for bad in [
        "H:2,3",
        "Q:3",
        "kneser2:4",
        "T:3,2",
        "cycle:2",
        "complete_minus_cliques:5,3",
    ] {
        let err = parse_spec(bad).unwrap().generate().unwrap_err();
        assert!(matches!(err, Error::ParameterOutOfRange(_)), "{bad}");
    }
    for bad in [
        "",
        "cycle",
        "cycle:x",
        "cycle:5,",
        "cartesian(path:3)",
        "nope:3",
        "path:3)",
    ] {
        assert!(parse_spec(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn text_form_round_trips() {
    for text in [
        "cycle:9",
        "kneser2:7",
        "complete_minus_cliques:7,3",
        "cartesian(path:4,path:6)",
        "strong(cycle:5,complete:2)",
        "complementary_prism(cartesian(path:2,path:3))",
        "random:8,0.5,42",
        "multipartite:3,2,2",
        "petersen",
        "G_star:3,6",
    ] {
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.to_string(), text);
        assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
    }
    assert_eq!(
        parse_spec(" turan( 3 , 7 ) ").unwrap(),
        FamilySpec::Turan { a: 3, n: 7 }
    );
}

#[test]
fn random_generators_are_reproducible() {
    let a = crate::graph::graph6::encode(&random_graph(8, 0.5, 11)).unwrap();
    let b = crate::graph::graph6::encode(&random_graph(8, 0.5, 11)).unwrap();
    assert_eq!(a, b);
    assert_ne!(random_graph(12, 0.5, 1), random_graph(12, 0.5, 2));
    for seed in 0..100 {
        let g = random_block_graph(12, seed);
        assert_eq!(g.order(), 12);
        assert!(g.is_block_graph() && g.is_connected(), "seed {seed}");
        let s = random_split_graph(9, seed);
        assert!(s.is_connected() && s.size() < 36, "seed {seed}");
    }
}

#[test]
fn random_split_graphs_have_gp_chromatic_number_two() {
    for seed in 0..100 {
        let g = random_split_graph(9, seed);
        let c = chromatic_position_number(&g, PositionKind::Gp, &Budget::default()).unwrap();
        assert_eq!(c.k(), 2, "seed {seed}");
    }
}

#[test]
fn kneser_maximal_gp_sets_have_four_shapes() {
    use crate::position::maximal_position_sets;
    for n in [5, 6] {
        let g = kneser2(n);
        let subsets = two_subsets(n);
        let sets = maximal_position_sets(&g, PositionKind::Gp, &Budget::default()).unwrap();
        assert!(!sets.is_empty());
        for s in sets {
            let pairs: Vec<(usize, usize)> = s.iter().map(|&v| subsets[v]).collect();
            let mut symbols: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            symbols.sort_unstable();
            symbols.dedup();
            let triangle = pairs.len() == 3 && symbols.len() == 3;
            let four = pairs.len() == 6 && symbols.len() == 4;
            let clique = symbols.len() == 2 * pairs.len();
            let star = pairs.len() == n - 1
                && (1..=n).any(|x| pairs.iter().all(|&(a, b)| a == x || b == x));
            assert!(triangle || four || clique || star, "n = {n}: {pairs:?}");
        }
    }
}
