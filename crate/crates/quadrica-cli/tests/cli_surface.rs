//! The command-line surface: exit codes, output formats, and determinism.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> PathBuf {
    // target/debug/quadrica next to the test binary's directory
    let mut p = std::env::current_exe().unwrap();
    p.pop(); // deps
    p.pop(); // debug
    p.push(format!("quadrica{}", std::env::consts::EXE_SUFFIX));
    p
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn betti_of_cycle4_prints_table_i() {
    let (code, stdout, _) = run(&["betti", fixture("cycle4.ideal").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "| 0 1 2 3\n0 | 1 -- -- --\n1 | -- 4 4 1\n");
}

#[test]
fn betti_of_the_empty_ideal_is_the_ring() {
    let dir = std::env::temp_dir().join("quadrica-empty-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.ideal");
    std::fs::write(&path, "ring QQ [x, y] order grevlex\n").unwrap();
    let (code, stdout, _) = run(&["betti", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "| 0\n0 | 1\n");
}

#[test]
fn gb_output_is_reparseable_and_deterministic() {
    let (code, first, _) = run(&["gb", fixture("engheta_ia2.ideal").to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["gb", fixture("engheta_ia2.ideal").to_str().unwrap()]);
    assert_eq!(first, second, "byte-identical across runs");
    // the output is itself a valid ideal file
    let (ring, gens) = quadrica::parse::parse_ideal_file(&first).unwrap();
    assert_eq!(ring.nvars(), 4);
    assert_eq!(gens.len(), 4);
}

#[test]
fn gb_with_low_degree_cap_reports_truncation_with_exit_3() {
    let dir = std::env::temp_dir().join("quadrica-cap-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("growing.ideal");
    std::fs::write(
        &path,
        "ring QQ [x, y, z, w] order lex\nx*y - z^2\ny*z - w^2\n",
    )
    .unwrap();
    let (code, stdout, _) = run(&["gb", path.to_str().unwrap(), "--order", "lex", "--degree-cap", "2"]);
    assert_eq!(code, 3);
    assert!(stdout.contains("# truncated"));
}

#[test]
fn invariants_json_shape() {
    let (code, stdout, stderr) =
        run(&["invariants", fixture("cycle4.ideal").to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["Q"], serde_json::json!([1, 0, -4, 4, -1]));
    assert_eq!(v["c"], 2);
    assert_eq!(v["e"], 2);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["K"], serde_json::json!([1, 2, -1]));
    assert!(v.get("unmixed").is_none());
    assert!(stderr.contains("top-dimensional"));
    // with the check requested, the cycle ideal is unmixed
    let (_, stdout, _) = run(&[
        "invariants",
        fixture("cycle4.ideal").to_str().unwrap(),
        "--check-unmixed",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["unmixed"], serde_json::json!(true));
}

#[test]
fn socle_rejects_positive_dimension_with_exit_2() {
    let (code, _, stderr) = run(&["socle", fixture("cycle4.ideal").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("artinian"));
}

#[test]
fn colon_intersect_unmixed_roundtrip() {
    let dir = std::env::temp_dir().join("quadrica-colon-test");
    std::fs::create_dir_all(&dir).unwrap();
    let sq = dir.join("sq.ideal");
    std::fs::write(&sq, "ring QQ [x, y, z, w] order grevlex\nx^2\nx*y\ny^2\n").unwrap();
    let (code, stdout, _) = run(&["colon", sq.to_str().unwrap(), "--by", "x*z + y*w"]);
    assert_eq!(code, 0);
    let (_, gens) = quadrica::parse::parse_ideal_file(&stdout).unwrap();
    assert_eq!(gens.len(), 2); // (x, y)

    let a = dir.join("a.ideal");
    let b = dir.join("b.ideal");
    std::fs::write(&a, "ring QQ [x, y, z, w] order grevlex\nx\ny\n").unwrap();
    std::fs::write(&b, "ring QQ [x, y, z, w] order grevlex\nz\nw\n").unwrap();
    let (code, stdout, _) = run(&["intersect", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, gens) = quadrica::parse::parse_ideal_file(&stdout).unwrap();
    assert_eq!(gens.len(), 4);

    let emb = dir.join("emb.ideal");
    std::fs::write(&emb, "ring QQ [x, y, z] order grevlex\nx^2\nx*y\nx*z\n").unwrap();
    let (code, stdout, _) = run(&["unmixed", emb.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.trim() == "x"));
}

#[test]
fn construct_edge_table1_matches_fixture() {
    let (code, stdout, _) = run(&["construct", "edge", "--table1", "i-a"]);
    assert_eq!(code, 0);
    let (ring, gens) = quadrica::parse::parse_ideal_file(&stdout).unwrap();
    assert_eq!(ring.nvars(), 4);
    assert_eq!(gens.len(), 4);
    // unknown label is a validation error
    let (code, _, _) = run(&["construct", "edge", "--table1", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn construct_engheta_and_classify_pipeline() {
    let dir = std::env::temp_dir().join("quadrica-pipeline-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("ii.ideal");
    let (code, _, _) = run(&[
        "construct",
        "engheta-ii",
        "--g",
        "4",
        "--field",
        "Fp:7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&["classify", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "ii");
}

#[test]
fn construct_zj_prints_scaled_koszul_table() {
    let (code, stdout, _) = run(&[
        "construct",
        "zj",
        "--ring",
        "ring QQ [x, a, b, c] order grevlex",
        "--z",
        "x",
        "--forms",
        "a;b;c",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("complex-ok: true\n"));
    assert!(stdout.contains("1 | -- 3 3 1"));
}

#[test]
fn check_koszul_reports_verdicts() {
    let (code, stdout, _) = run(&[
        "check-koszul",
        fixture("engheta_ia2.ideal").to_str().unwrap(),
        "--trials",
        "0",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: g-quadratic-witnessed"));
    assert!(stdout.contains("table-label: i"));

    let dir = std::env::temp_dir().join("quadrica-cubic-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cubic = dir.join("cubic.ideal");
    std::fs::write(&cubic, "ring QQ [x, y] order grevlex\nx^3\n").unwrap();
    let (code, stdout, _) = run(&["check-koszul", cubic.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: fails-necessary"));
}

#[test]
fn sample_csv_is_byte_deterministic() {
    let args = [
        "sample", "--n", "3", "--g", "2", "--count", "6", "--seed", "99", "--trials", "1",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    let mut lines = first.lines();
    assert_eq!(
        lines.next().unwrap(),
        "seed,n,g,codim,e,pd,reg,betti_bound_ok,table_label,witness_found"
    );
    assert_eq!(lines.count(), 6);
}

#[test]
fn verify_paper_filter_runs_a_subset() {
    let (code, stdout, _) = run(&["verify-paper", "--only", "05-colon"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS 05-colon-identities"));
    assert!(stdout.contains("1 passed, 0 failed"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = std::env::temp_dir().join("quadrica-parse-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ideal");
    std::fs::write(&bad, "ring QQ [x, y] order grevlex\nx + q\n").unwrap();
    let (code, _, stderr) = run(&["betti", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown variable"));
}
