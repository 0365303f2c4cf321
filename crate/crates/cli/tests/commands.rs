use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-lattice"))
        .args(args)
        .env_remove("CLUSTER_LATTICE_GUARD_N")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn counts_and_lists() {
    assert_eq!(stdout(&["nnc", "count", "--n", "3"]), "15\n");
    assert_eq!(stdout(&["nc", "count", "--n", "4"]), "14\n");
    assert_eq!(stdout(&["nc", "list", "--n", "1"]), "{{1}}\n");
    assert_eq!(
        stdout(&["--json", "nc", "count", "--n", "4"]),
        "{\"count\":14,\"n\":4}\n"
    );
}

#[test]
fn kreweras_examples() {
    assert_eq!(stdout(&["kreweras", "--p", "1,3|2|4,5,6"]), "1,2|3,6|4|5\n");
    assert_eq!(stdout(&["kreweras", "--p", "1|2"]), "1,2\n");
    assert_eq!(
        stdout(&["kreweras", "--twice", "--p", "1,3|2|4,5,6"]),
        "1|2,6|3,4,5\nrotation assertion OK\n"
    );
}

#[test]
fn tstructure_examples() {
    let heart = stdout(&["--json", "tstruct", "heart", "--ts", "1,2; 1:0,2:0"]);
    let arcs: Vec<String> = serde_json::from_str(&heart).unwrap();
    assert_eq!(arcs.len(), 2);
    assert_eq!(
        stdout(&[
            "tstruct",
            "meet",
            "--ts",
            "1,2; 1:0,2:0",
            "--other",
            "1|2; 1:1,2:-3"
        ]),
        "1|2; 1:0,2:-3\n"
    );
    let tri = stdout(&[
        "tstruct",
        "approx",
        "--ts",
        "1,2; 1:0,2:0",
        "--arc",
        "[1:2,2:3]",
    ]);
    let v: serde_json::Value = serde_json::from_str(&tri).unwrap();
    assert!(v.get("first").is_some() && v.get("last").is_some());
}

#[test]
fn hasse_of_nc3_has_five_nodes() {
    let dot = stdout(&[
        "lattice", "hasse", "--what", "nc", "--n", "3", "--format", "dot",
    ]);
    assert_eq!(dot.matches("[label=").count(), 5);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["nc", "list", "--n", "20"]).status.code(), Some(3));
    assert_eq!(cli(&["kreweras", "--p", "1,3|2,4"]).status.code(), Some(2));
    assert_eq!(
        cli(&["tstruct", "heart", "--ts", "1|2; a2,2:0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cli(&["render", "--object", "arcs", "--n", "2", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}
