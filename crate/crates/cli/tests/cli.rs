use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn loopcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopcut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn chain_network_needs_no_cutset() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "chain.net", "node a 2\nnode b 3\nnode c 2\nedge a b\nedge b c\n");
    let o = loopcut(&["solve", "--input", &f, "--kind", "network", "--algorithm", "mga"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "members\t"), "{out}");
    assert!(out.lines().any(|l| l == "instances\t1"), "{out}");
}

#[test]
fn pinned_self_loop_is_a_solver_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "x.g", "vertex x inf\nedge x x\n");
    let o = loopcut(&["solve", "--input", &f, "--kind", "graph"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unbreakable cycle"));
}

#[test]
fn single_loop_cut_at_root() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "loop.net",
        "node a 2\nnode b 2\nnode c 2\nedge a b\nedge b c\nedge a c\n",
    );
    for alg in ["mga", "exact"] {
        let o = loopcut(&["solve", "--input", &f, "--algorithm", alg, "--format", "json", "--trace"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["members"], serde_json::json!(["a"]));
        assert_eq!(v["instances"], "2");
    }
}

#[test]
fn input_errors_exit_one_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.net", "node a 2\nnode b 2\nedge a b\nedge b a\n");
    let o = loopcut(&["solve", "--input", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    assert_eq!(loopcut(&["solve", "--input", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(loopcut(&["solve", "--input", &f, "--algorithm", "nope"]).status.code(), Some(1));
    assert_eq!(loopcut(&["--help"]).status.code(), Some(0));
}

#[test]
fn gen_is_reproducible_and_feeds_experiment() {
    let (x, y) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&x, &y] {
        let out = d.path().to_string_lossy().into_owned();
        let o = loopcut(&[
            "gen", "--nodes", "15", "--edges", "25", "--domains", "2:4", "--seed", "7", "--count", "3", "--out", &out,
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    for name in ["inst_00000.net", "inst_00002.net", "manifest.txt"] {
        assert_eq!(fs::read(x.path().join(name)).unwrap(), fs::read(y.path().join(name)).unwrap());
    }
    let dir = x.path().to_string_lossy().into_owned();
    let o = loopcut(&["experiment", "--dir", &dir, "--algorithms", "ga,mga", "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("# ratio\tmga\t3\t")), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("inst_")).count(), 9);
    let o = loopcut(&["experiment", "--dir", &dir, "--format", "json", "--sequential"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instances"], 3);
}

#[test]
fn infeasible_gen_exits_one() {
    let d = tempfile::tempdir().unwrap();
    let out = d.path().to_string_lossy().into_owned();
    let o = loopcut(&["gen", "--nodes", "3", "--edges", "9", "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
}
