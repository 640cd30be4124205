//! Every example runs to completion with small arguments.

use std::process::Command;

const EXAMPLES: &[(&str, &[&str])] = &[
    ("plane_graph_io", &[]),
    ("extremal_family", &["3", "2"]),
    ("find_configurations", &[]),
    ("reductions", &[]),
    ("solve", &[]),
    ("discharging", &[]),
    ("enumerate_corpus", &["7"]),
    ("random_graphs", &[]),
    ("suite", &["golden"]),
];

#[test]
fn examples_run() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let names: Vec<&str> = EXAMPLES.iter().map(|(n, _)| *n).collect();
    let mut on_disk: Vec<String> = std::fs::read_dir(format!("{dir}/examples"))
        .unwrap()
        .filter_map(|e| e.ok()?.file_name().to_str()?.strip_suffix(".rs").map(String::from))
        .collect();
    on_disk.sort();
    let mut listed: Vec<String> = names.iter().map(|n| n.to_string()).collect();
    listed.sort();
    assert_eq!(on_disk, listed, "examples directory and list disagree");
    let mut build = Command::new(env!("CARGO"));
    build.current_dir(dir).args(["build", "--quiet"]);
    for n in &names {
        build.args(["--example", n]);
    }
    assert!(build.status().expect("cargo runs").success());

    for (name, args) in EXAMPLES {
        let out = Command::new(env!("CARGO"))
            .current_dir(dir)
            .args(["run", "--quiet", "--example", name, "--"])
            .args(*args)
            .output()
            .expect("cargo runs");
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
