use std::io::Write;
use std::process::{Command, Output, Stdio};

const PETERSEN: &str = "Ihe@GT@DG";

fn pos(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pos"))
        .args(args)
        .env_remove("POS_TIME_LIMIT")
        .env_remove("POS_NODE_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading, e.g. on a flag error
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn compute_modes() {
    let o = pos(&["compute", "--kind", "gp", "--exact"], PETERSEN);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["k"], 2);
    let c9 = stdout(&pos(&["family", "cycle:9"], ""));
    let o = pos(&["compute", "--kind", "mono", "--bounds"], &c9);
    assert!(json(&o)["lower"].as_u64().unwrap() >= 5);
    let k4 = stdout(&pos(&["family", "complete:4"], ""));
    assert_eq!(
        json(&pos(&["compute", "--kind", "gpi", "--exact"], &k4))["k"],
        4
    );
    let two = format!("{PETERSEN}\n{k4}");
    assert_eq!(
        stdout(&pos(&["compute", "--kind", "mu"], &two))
            .lines()
            .count(),
        2
    );
}

#[test]
fn input_errors_and_budget() {
    assert_eq!(
        pos(&["compute"], "not graph6 at all\n").status.code(),
        Some(2)
    );
    assert_eq!(
        pos(&["compute", "--kind", "weird"], PETERSEN).status.code(),
        Some(2)
    );
    assert_eq!(pos(&["compute"], "").status.code(), Some(2));
    let o = pos(
        &["--node-limit", "3", "compute", "--kind", "mono"],
        PETERSEN,
    );
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_pos"))
        .args(["family", "kneser2:7"])
        .output()
        .unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_pos"))
        .args(["compute", "--kind", "gp"])
        .env("POS_NODE_LIMIT", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    assert_eq!(child.wait().unwrap().code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("petersen.g6");
    std::fs::write(&graph, PETERSEN).unwrap();
    let col = dir.path().join("c.json");
    let solved = stdout(&pos(&["compute", "--kind", "gp"], PETERSEN));
    std::fs::write(&col, solved.trim()).unwrap();
    let (g, c) = (graph.to_str().unwrap(), col.to_str().unwrap());
    assert_eq!(pos(&["verify", g, c], "").status.code(), Some(0));
    assert_eq!(
        pos(&["verify", g, c, "--kind", "mono"], "").status.code(),
        Some(1)
    );
    std::fs::write(&col, r#"{"n":10,"classes":[[0,1,2,3,4,5,6,7,8]]}"#).unwrap();
    assert_eq!(
        pos(&["verify", g, c, "--kind", "gp"], "").status.code(),
        Some(2)
    );
    std::fs::write(&col, "{").unwrap();
    assert_eq!(
        pos(&["verify", g, c, "--kind", "gp"], "").status.code(),
        Some(2)
    );
}

#[test]
fn family_construct_reduce() {
    let o = pos(&["family", "kneser2:6"], "");
    let line = stdout(&o);
    let n = line.as_bytes()[0] - 63;
    assert_eq!(n, 15);
    let k = pos(&["family", "kneser2:6", "--json"], "");
    assert_eq!(json(&k)["n"], 15);
    let o = pos(&["construct", "cycle:12", "gp"], "");
    assert_eq!(json(&o)["classes"].as_array().unwrap().len(), 4);
    assert_eq!(pos(&["construct", "Q:5", "gp"], "").status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("x.cnf");
    std::fs::write(&cnf, "p nae3 4 3\n1 3 4\n2 -3 -4\n-1 -2 3\n").unwrap();
    let o = pos(&["reduce", cnf.to_str().unwrap(), "--check"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    let report: serde_json::Value = serde_json::from_str(&lines[2]).unwrap();
    assert_eq!(
        (report["agree"].clone(), report["order"].clone()),
        (true.into(), 26.into())
    );
}

#[test]
fn suites_and_determinism() {
    let args = ["suite", "reduction", "--count", "10", "--seed", "7"];
    let a = pos(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(json_all(&a)["passed"], 13);
    assert_eq!(stdout(&a), stdout(&pos(&args, "")));
    let o = pos(&["suite", "ng-check", "--max-n", "5"], "");
    assert_eq!(json_all(&o)["failed"], 0);
    let o = pos(&["suite", "ng-check", "--graphs", "-"], PETERSEN);
    assert_eq!(json_all(&o)["records"].as_array().unwrap().len(), 1);
    assert_eq!(pos(&["suite", "missing"], "").status.code(), Some(2));
}

fn json_all(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}
