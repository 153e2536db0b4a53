use std::io::Write;
use std::process::{Command, Output, Stdio};

use ldc_core::{parse_graph, validate_cycle, CycleWitness, DirectedGraph};

fn ldc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ldc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(g: &DirectedGraph) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "# test graph\n{g}").unwrap();
    f
}

#[test]
fn solve_c5_det() {
    let f = graph_file(&DirectedGraph::cycle(5));
    let out = ldc(
        &[
            "solve",
            "--k",
            "2",
            "--mode",
            "det",
            "--input",
            f.path().to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES 5 0 1 2 3 4\n");
}

#[test]
fn solve_triangle_k4_is_no() {
    let out = ldc(
        &["solve", "--k", "4", "--mode", "det"],
        "3 3\n0 1\n1 2\n2 0\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "NO\n");
}

#[test]
fn solve_rand_json_record() {
    let out = ldc(
        &[
            "solve", "--k", "3", "--mode", "rand", "--seed", "7", "--json",
        ],
        &DirectedGraph::cycle(6).to_string(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["mode"], "rand");
    assert_eq!(v["backend"], "color-coding");
    let w: CycleWitness = serde_json::from_value(v["witness"].clone()).unwrap();
    assert!(validate_cycle(&DirectedGraph::cycle(6), &w, 3));
}

#[test]
fn mixed_backend_is_flagged() {
    let out = ldc(
        &[
            "solve", "--k", "2", "--mode", "rand", "--kpath", "dp", "--json",
        ],
        "3 3\n0 1\n1 2\n2 0\n",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mixed_backend"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("note"));
}

#[test]
fn oracle_on_dag() {
    let out = ldc(&["oracle"], "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "LONGEST 0\n");
    let out = ldc(&["oracle"], &DirectedGraph::cycle(4).to_string());
    assert_eq!(stdout(&out), "LONGEST 4 0 1 2 3\n");
}

#[test]
fn gen_round_trips() {
    for args in [
        vec!["gen", "--n", "10", "--density", "0.3", "--seed", "4"],
        vec![
            "gen",
            "--n",
            "12",
            "--t",
            "7",
            "--density",
            "0.1",
            "--forbid-short",
            "--seed",
            "5",
        ],
    ] {
        let out = ldc(&args, "");
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout(&out);
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(
            parsed.graph.to_string(),
            text.lines()
                .filter(|l| !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join("\n")
        );
        assert_eq!(ldc(&args, "").stdout, out.stdout, "same seed, same output");
    }
}

#[test]
fn planted_instance_is_solved() {
    let text = stdout(&ldc(
        &[
            "gen",
            "--n",
            "12",
            "--t",
            "7",
            "--density",
            "0.1",
            "--forbid-short",
            "--seed",
            "9",
        ],
        "",
    ));
    let out = ldc(&["solve", "--k", "3"], &text);
    assert!(stdout(&out).starts_with("YES "));
}

#[test]
fn experiments_print_reports() {
    let out = ldc(
        &[
            "experiment",
            "split",
            "--k",
            "2",
            "--trials",
            "20000",
            "--seed",
            "1",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("split-probability k=2"));
    let args = [
        "experiment",
        "amplification",
        "--k",
        "2",
        "--amplification",
        "3",
        "--meta-trials",
        "500",
        "--json",
    ];
    let a = ldc(&args, "");
    assert_eq!(a.stdout, ldc(&args, "").stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["test"], "lower-bound");
}

#[test]
fn verify_universal_family() {
    let out = ldc(&["verify-universal", "--n", "6", "--t", "3"], "");
    assert_eq!(stdout(&out), "UNIVERSAL\n");
    let constants = "# universal-set n=3 t=2\n000\n111\n";
    let out = ldc(&["verify-universal"], constants);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("VIOLATED"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(ldc(&["solve"], "").status.code(), Some(1));
    assert_eq!(
        ldc(&["solve", "--k", "2", "--mode", "fast"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        ldc(&["solve", "--k", "2"], "3 1\n0 9\n").status.code(),
        Some(1)
    );
    assert_eq!(ldc(&["solve", "--k", "1"], "2 0\n").status.code(), Some(1));
    assert_eq!(ldc(&["bogus"], "").status.code(), Some(1));
    assert_eq!(ldc(&["--help"], "").status.code(), Some(0));
}

#[test]
fn capacity_errors_exit_2() {
    let big = DirectedGraph::cycle(20).to_string();
    let out = ldc(&["oracle", "--cap", "14"], &big);
    assert_eq!(out.status.code(), Some(2));
    let out = ldc(&["verify-universal", "--n", "20", "--t", "16"], "");
    assert_eq!(out.status.code(), Some(2));
}
