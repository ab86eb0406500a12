use poscolour::suites::{partitions, random_connected, run_suite, SuiteOptions, SUITES};
use poscolour::{families::parse_spec, Error};

#[test]
fn reports_are_consistent_and_deterministic() {
    let opts = SuiteOptions {
        count: Some(5),
        seed: 3,
        max_n: Some(5),
        ..SuiteOptions::default()
    };
    for name in [
        "petersen",
        "block-graphs",
        "multipartite",
        "reduction",
        "inequalities",
        "ng-check",
    ] {
        let a = run_suite(name, &opts).unwrap();
        assert_eq!(a.passed + a.failed, a.records.len(), "{name}");
        assert!(a.all_pass(), "{name}: {:?}", a.failures().next());
        let b = run_suite(name, &opts).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{name}");
    }
    assert!(SUITES.contains(&"ng-check"));
    assert!(matches!(
        run_suite("nope", &opts),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn ng_check_on_supplied_graphs() {
    let g = parse_spec("petersen").unwrap().generate().unwrap();
    let opts = SuiteOptions {
        graphs: Some(vec![g]),
        ..SuiteOptions::default()
    };
    let r = run_suite("ng-check", &opts).unwrap();
    assert_eq!(r.records.len(), 1);
    assert!(r.all_pass());
}

#[test]
fn helpers() {
    assert_eq!(
        partitions(4),
        vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1]
        ]
    );
    assert_eq!(partitions(9).len(), 30);
    for seed in 0..50 {
        let g = random_connected(seed);
        assert!(g.is_connected() && g.order() <= 9);
    }
}
