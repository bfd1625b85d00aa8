use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_strongclique");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
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

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn graph6_of(args: &[&str]) -> String {
    let o = run(&[&["generate"], args].concat(), "");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn sc_of_c5() {
    let c5 = graph6_of(&["--family", "cycle", "--n", "5"]);
    let o = run(&["sc", "--json"], &c5);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graphs"][0]["sc"], 5);
    assert_eq!(v["graphs"][0]["witness"].as_array().unwrap().len(), 5);
    assert_eq!(v["config"]["command"], "sc");
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn text_output_starts_with_config() {
    let c5 = graph6_of(&["--family", "cycle", "--n", "5"]);
    let o = run(&["sc", "--seed", "9"], &c5);
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("# config {"));
    assert!(first.contains("\"seed\":9"));
    assert!(text.contains("sc=5"));
}

#[test]
fn free_finds_the_hexagon() {
    let c6 = graph6_of(&["--family", "cycle", "--n", "6"]);
    let o = run(&["free", "--lengths", "6", "--json"], &c6);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let r = &v["graphs"][0]["lengths"][0];
    assert_eq!(r["found"], true);
    assert_eq!(r["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn distance_between_edges() {
    // edges of P4: 0 = {0,1}, 1 = {1,2}, 2 = {2,3}
    let o = run(
        &[
            "distance", "--format", "edgelist", "--edges", "0,2", "--json",
        ],
        "4 3\n0 1\n1 2\n2 3\n",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["graphs"][0]["distance"], 2);
}

#[test]
fn verify_sharp_bipartite_example() {
    let o = run(
        &[
            "verify",
            "--family",
            "bipartite_pendant_extremal",
            "--p",
            "2",
            "--spec",
            "THM19",
            "--k",
            "3",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let agg = &json(&o)["aggregates"][0];
    assert_eq!(agg["holds"], 1);
    assert_eq!(agg["tight"], 1);
}

#[test]
fn verify_from_piped_generator() {
    let g = graph6_of(&[
        "--family",
        "bipartite-pendant-extremal",
        "--k",
        "3",
        "--p",
        "2",
    ]);
    let o = run(&["verify", "--spec", "THM19", "--k", "3"], &g);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("THM19(k=3): applicable=1 holds=1 tight=1"));
}

#[test]
fn counterexamples_exit_two_with_evidence() {
    let dir = tempfile::tempdir().unwrap();
    let ev = dir.path().join("evidence");
    let k4 = graph6_of(&["--family", "complete", "--n", "4"]);
    let o = run(
        &[
            "verify",
            "--spec",
            "CONJ15",
            "--k",
            "3",
            "--evidence-dir",
            ev.to_str().unwrap(),
        ],
        &k4,
    );
    assert_eq!(o.status.code(), Some(2));
    let g6 = fs::read_to_string(ev.join("counterexamples.g6")).unwrap();
    assert_eq!(g6.trim(), k4.lines().last().unwrap());
    let reports: Value =
        serde_json::from_str(&fs::read_to_string(ev.join("counterexamples.json")).unwrap())
            .unwrap();
    assert_eq!(reports[0]["reports"][0]["status"], "counterexample");
}

#[test]
fn no_evidence_without_flag() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = graph6_of(&["--family", "complete", "--n", "4"]);
    let o = Command::new(BIN)
        .args(["verify", "--spec", "CONJ15", "--k", "3", "--input", "-"])
        .current_dir(dir.path())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(k4.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn theorem_sweep_on_small_enumeration() {
    let o = run(
        &[
            "verify",
            "--enumerate",
            "5",
            "--spec",
            "theorems",
            "--k",
            "2,3,4",
            "--json",
        ],
        "",
    );
    let v = json(&o);
    let bad: Vec<String> = v["aggregates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["counterexamples"] != 0)
        .map(|a| a["spec"].to_string())
        .collect();
    // the only theorem bound that fails at n <= 5 is the C_{2k}-free one
    // with 10k^2 coefficient, and only at maximum degree 1
    for g in v["counterexamples"].as_array().unwrap() {
        for r in g["reports"].as_array().unwrap() {
            if r["status"] == "counterexample" {
                assert_eq!(r["spec"]["id"], "THM16ii");
                assert_eq!(r["max_degree"], 1);
            }
        }
    }
    assert!(bad.iter().all(|s| s.contains("THM16ii")), "{bad:?}");
}

#[test]
fn output_is_reproducible() {
    let args = [
        "verify",
        "--family",
        "random",
        "--n",
        "7",
        "--prob",
        "0.5",
        "--count",
        "20",
        "--seed",
        "3",
        "--spec",
        "all",
        "--k",
        "2,3",
        "--reports",
        "--audit",
        "--json",
    ];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn worker_count_does_not_change_summary() {
    let base = [
        "verify",
        "--enumerate",
        "5",
        "--spec",
        "THM19,CONJ15",
        "--k",
        "2",
        "--reports",
        "--json",
    ];
    let one = json(&run(&[&base[..], &["--workers", "1"]].concat(), ""));
    let four = json(&run(&[&base[..], &["--workers", "4"]].concat(), ""));
    for key in ["graphs", "aggregates", "counterexamples", "reports"] {
        assert_eq!(one[key], four[key], "{key}");
    }
}

#[test]
fn audit_passes_on_small_graphs() {
    let o = run(
        &[
            "verify",
            "--enumerate",
            "5",
            "--spec",
            "THM23",
            "--audit",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let a = &json(&o)["audit"];
    assert_eq!(a["failures"].as_array().unwrap().len(), 0);
    assert_eq!(a["skipped"], 1);
    assert_eq!(a["audited"], 1023);
}

#[test]
fn malformed_input_reports_line() {
    let o = run(&["sc"], "Dhc\nD!!\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn malformed_edge_list_reports_line() {
    let o = run(&["sc", "--format", "edgelist"], "3 2\n0 1\n1 1\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn missing_input_file() {
    let o = run(&["sc", "--input", "/nonexistent/graphs.g6"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"], "").status.code(), Some(1));
    assert_eq!(run(&["sc", "--bogus"], "").status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--spec", "NOPE", "--k", "2"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--spec", "THM19", "--k", "1"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["enumerate", "--n", "9"], "").status.code(), Some(1));
    assert_eq!(
        run(
            &["generate", "--family", "c5_blowup", "--t", "2", "--q", "3"],
            ""
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--n", "4", "--dedup", "--json"], "");
    assert_eq!(json(&o)["count"], 11);
    let o = run(&["enumerate", "--n", "3"], "");
    assert_eq!(
        stdout(&o).lines().filter(|l| !l.starts_with('#')).count(),
        8
    );
}

#[test]
fn generate_random_is_seeded() {
    let args = [
        "--family", "random", "--n", "8", "--prob", "0.4", "--count", "3", "--seed", "11",
    ];
    let a = graph6_of(&args);
    assert_eq!(a, graph6_of(&args));
    assert_eq!(a.lines().filter(|l| !l.starts_with('#')).count(), 3);
}

#[test]
fn generate_from_job_file() {
    let dir = tempfile::tempdir().unwrap();
    let job = dir.path().join("job.json");
    fs::write(
        &job,
        r#"[{"family":"c5_blowup","t":2},{"family":"complete_plus_pendants","q":5,"p":2}]"#,
    )
    .unwrap();
    let o = run(&["generate", "--job", job.to_str().unwrap(), "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graphs"][0]["label"], "c5_blowup(t=2)");
    assert_eq!(v["graphs"][1]["edges"], 20);
}

fn witness(construction: &str, graph: &str, extra: &[&str]) -> (Option<i32>, Value) {
    let o = run(
        &[&["witness", construction, "--json"], extra].concat(),
        graph,
    );
    let v = if o.stdout.is_empty() {
        Value::Null
    } else {
        json(&o)
    };
    (o.status.code(), v)
}

#[test]
fn witness_constructions() {
    let k44 = graph6_of(&["--family", "complete_bipartite", "--a", "4", "--b", "4"]);
    let (code, v) = witness("lemma21-path", &k44, &[]);
    assert_eq!(code, Some(0));
    assert_eq!(v["construction"], "lemma21-path");
    assert_eq!(v["graphs"][0]["length"], 7);
    assert_eq!(v["graphs"][0]["uses_all_matching_edges"], true);

    let (code, v) = witness("lemma21-cycle", &k44, &[]);
    assert_eq!(code, Some(0));
    assert_eq!(v["graphs"][0]["length"], 6);
    assert!(v["graphs"][0]["matching_edges_used"].as_u64().unwrap() >= 2);

    let c5 = graph6_of(&["--family", "cycle", "--n", "5"]);
    let (code, v) = witness("s-minimal", &c5, &[]);
    assert_eq!(code, Some(0));
    assert_eq!(v["graphs"][0]["all_pass"], true);

    let sm = graph6_of(&["--family", "special_matching", "--m", "4"]);
    let (code, v) = witness("xm-path", &sm, &["--x", "0", "--length", "3"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["graphs"][0]["found"], true);
}

#[test]
fn witness_rejects_non_bipartite() {
    let c5 = graph6_of(&["--family", "cycle", "--n", "5"]);
    let (code, _) = witness("lemma21-path", &c5, &[]);
    assert_eq!(code, Some(1));
}

#[test]
fn input_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    fs::write(&path, graph6_of(&["--family", "petersen"])).unwrap();
    let o = run(&["sc", "--json", "--input", path.to_str().unwrap()], "");
    assert_eq!(json(&o)["graphs"][0]["sc"], 5);
    assert!(Path::new(&path).exists());
}
