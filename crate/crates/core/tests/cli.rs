use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(format!("{name}.graph"))
}

fn trifree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(args)
        .env_remove("TRIFREE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trifree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn oracle_and_solve() {
    let c5 = corpus("c5");
    let o = trifree(&["oracle", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alpha: 2\n"));

    let o = trifree(&["solve", "--trace", corpus("member14").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("size: 5\n") && out.contains("met: true"), "{out}");
}

#[test]
fn input_errors_exit_with_2() {
    assert_eq!(trifree(&["oracle", "/nonexistent/graph"]).status.code(), Some(2));
    let bad = scratch("bad.graph", "3 2\n1: 2\n2: 1 3\n3: 1\n");
    assert_eq!(trifree(&["solve", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(trifree(&["suite", "--mode", "sideways"]).status.code(), Some(2));
    let cube = corpus("cube");
    assert_eq!(
        trifree(&["find-configs", "--kind", "C9", cube.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(trifree(&["enumerate", "--n", "40"]).status.code(), Some(2));
}

#[test]
fn violations_exit_with_1() {
    let k4 = scratch("k4.graph", "4 6\n1: 3 4 2\n2: 3 1 4\n3: 4 1 2\n4: 2 1 3\n");
    let o = trifree(&["validate", k4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("triangle-free=false"));
}

#[test]
fn seed_comes_from_the_environment() {
    let flag = trifree(&["gen-extremal", "--steps", "4", "--seed", "9"]);
    let env = Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(["gen-extremal", "--steps", "4"])
        .env("TRIFREE_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(stdout(&flag), stdout(&env));
    let other = trifree(&["gen-extremal", "--steps", "4", "--seed", "10"]);
    assert_ne!(stdout(&flag), stdout(&other));
    let g = trifree::plane::parse(&stdout(&flag)).unwrap();
    assert_eq!(g.vertex_count(), 17);
}

#[test]
fn generators_round_trip_through_validate() {
    let o = trifree(&["gen-random", "--n", "15", "--count", "3", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let file = scratch("random.graphs", &stdout(&o));
    let v = trifree(&["validate", file.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).lines().count(), 3);

    let o = trifree(&["enumerate", "--n", "7", "--count-only"]);
    assert_eq!(stdout(&o).lines().last(), Some("n=7 graphs=55"));
}

#[test]
fn configurations_and_membership() {
    let cube = corpus("cube");
    let o = trifree(&["find-configs", "--kind", "c3", cube.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 12);

    let o = trifree(&["member", "--set", corpus("c5_double_dagger").to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.contains("terminal C5"), "{out}");
    assert!(out
        .lines()
        .any(|l| l.starts_with("set: ") && l.split_whitespace().count() == 5));
}

#[test]
fn discharging_commands() {
    let witness = corpus("dangerous_witness");
    let o = trifree(&["dangerous", witness.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("dangerous cycles: 0"));

    let o = trifree(&["discharge", "--ledger", "--audit", witness.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(
        out.contains("final sum: -8") && out.contains("rejected: dangerous cycle"),
        "{out}"
    );

    let c5 = scratch(
        "c5_outer.graph",
        "5 5\n1: 2 5\n2: 1 3\n3: 2 4\n4: 3 5\n5: 1 4\nouter: 1 2 3 4 5\n",
    );
    let o = trifree(&["discharge", "--ledger", c5.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("R0 ")).count(), 5);
    // A file without an outer face cannot be discharged.
    assert_eq!(
        trifree(&["discharge", corpus("cube").to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn golden_suite_as_json() {
    let o = trifree(&["suite", "--mode", "golden", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["violations"], 0, "{last}");
    assert_eq!(out.lines().count(), 10);
}
