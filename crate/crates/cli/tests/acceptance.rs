//! Acceptance suite. Each test prints one `criterion <id> [PASS|FAIL]` line
//! and fails when its criterion does. Sample sizes, windows and seeds are
//! pinned in `cluster_lattice::verify`.

use std::process::Command;

use cluster_lattice::verify::{self, CriterionReport};
use cluster_lattice::{Arc, Partition, TStructure, Triangle};

fn report(r: cluster_lattice::Result<CriterionReport>) {
    let r = r.expect("criterion raised an error");
    println!("{r}");
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_1_counting() {
    report(verify::criterion_1());
}

#[test]
fn criterion_2_kreweras() {
    report(verify::criterion_2());
}

#[test]
fn criterion_3_thick_classification() {
    report(verify::criterion_3());
}

#[test]
fn criterion_4_tstructure_classification() {
    report(verify::criterion_4());
}

#[test]
fn criterion_5_orthogonality_and_approximation() {
    report(verify::criterion_5());
}

#[test]
fn criterion_6_lattice() {
    report(verify::criterion_6());
}

#[test]
fn criterion_7a_equivalence_classes() {
    report(verify::criterion_7a());
}

/// Top class bounded below and bottom class bounded above, exactly as
/// stated. Fails: under aisle inclusion the top class has the coarsest
/// partition, which is bounded above.
#[test]
fn criterion_7b_extremes_of_class_lattice() {
    report(verify::criterion_7b());
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_cluster-lattice"))
        .args(args)
        .output()
        .expect("failed to start the binary");
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

const SIX_POINT_TS: &str = "1,3|2|4,5,6; 1:0,2:0,3:0,4:0,5:0,6:0";

/// Byte comparison of two runs per invocation, then a parse and re-print of
/// every JSON output.
fn cli_determinism() -> Vec<String> {
    let mut failures = Vec::new();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["--json", "nnc", "list", "--n", "3"],
        vec!["--json", "kreweras", "--p", "1,3|2|4,5,6"],
        vec![
            "--json",
            "tstruct",
            "meet",
            "--ts",
            "1,2; 1:0,2:0",
            "--other",
            "1|2; 1:1,2:-3",
        ],
        vec![
            "tstruct",
            "approx",
            "--ts",
            "1,2; 1:0,2:0",
            "--arc",
            "[1:2,2:3]",
        ],
        vec!["--json", "tstruct", "heart", "--ts", "1,2; 1:0,2:0"],
        vec![
            "lattice", "hasse", "--what", "nc", "--n", "4", "--format", "dot",
        ],
        vec![
            "lattice", "hasse", "--what", "nnc", "--n", "3", "--format", "json",
        ],
        vec![
            "render",
            "--object",
            "aisle",
            "--ts",
            SIX_POINT_TS,
            "--format",
            "svg",
        ],
        vec![
            "render",
            "--object",
            "coaisle",
            "--ts",
            SIX_POINT_TS,
            "--format",
            "svg",
        ],
        vec![
            "render",
            "--object",
            "arcs",
            "--n",
            "3",
            "--arcs",
            "[1:0,3:2];[2:-1,2:1]",
        ],
        vec![
            "render", "--object", "hasse", "--what", "nc", "--n", "3", "--format", "dot",
        ],
        vec![
            "render",
            "--object",
            "thick",
            "--p",
            "1,3|2|4,5,6",
            "--format",
            "json",
        ],
    ];
    for args in &invocations {
        let (a, b) = (run_cli(args), run_cli(args));
        if a != b {
            failures.push(format!("{args:?}: bytes differ"));
        }
    }

    let text = |args: &[&str]| String::from_utf8(run_cli(args)).unwrap();
    let p_json = text(&invocations[1]);
    let p: Partition = serde_json::from_str(&p_json).unwrap();
    if serde_json::to_string(&p).unwrap() != p_json.trim_end() {
        failures.push("partition JSON not byte-stable".into());
    }
    let all: Vec<Partition> = serde_json::from_str(&text(&invocations[0])).unwrap();
    if all.len() != 15 {
        failures.push(format!("nnc list --n 3 gave {} partitions", all.len()));
    }
    let ts_json = text(&invocations[2]);
    let ts: TStructure = serde_json::from_str(&ts_json).unwrap();
    if serde_json::to_string(&ts).unwrap() != ts_json.trim_end() {
        failures.push("t-structure JSON not byte-stable".into());
    }
    let tri_json = text(&invocations[3]);
    let tri: Triangle = serde_json::from_str(&tri_json).unwrap();
    if serde_json::to_string(&tri).unwrap() != tri_json.trim_end() {
        failures.push("triangle JSON not byte-stable".into());
    }
    let heart_json = text(&invocations[4]);
    let heart: Vec<Arc> = serde_json::from_str(&heart_json).unwrap();
    if heart.len() != 2 || serde_json::to_string(&heart).unwrap() != heart_json.trim_end() {
        failures.push("heart JSON not byte-stable".into());
    }
    let svg = text(&invocations[7]);
    if !svg.starts_with("<svg") {
        failures.push("render did not produce SVG".into());
    }
    failures
}

#[test]
fn criterion_8_determinism_and_round_trip() {
    let lib = verify::criterion_8_library().expect("criterion raised an error");
    let failures = cli_determinism();
    let passed = lib.passed && failures.is_empty();
    let detail = if failures.is_empty() {
        format!(
            "{}; CLI outputs byte-identical across runs, JSON re-parses to the same bytes",
            lib.detail
        )
    } else {
        format!("{}; CLI failures {failures:?}", lib.detail)
    };
    let r = CriterionReport {
        passed,
        detail,
        ..lib
    };
    println!("{r}");
    assert!(r.passed, "{r}");
}
