use std::path::PathBuf;
use std::process::{Command, Output};

fn here(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subword-lab"))
        .args(args)
        .env("SUBWORD_LAB_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(here("golden").join(name)).unwrap()
}

#[test]
fn enumerate_b3_has_42_lines() {
    let out = stdout(&["enumerate", "--type", "B3"]);
    assert_eq!(out.lines().count(), 42);
    assert_eq!(out.lines().next(), Some("121232123"));
}

#[test]
fn enumerate_a1() {
    assert_eq!(stdout(&["enumerate", "--type", "A1"]), "1\n");
}

#[test]
fn count_only_a3() {
    assert_eq!(stdout(&["enumerate", "--type", "A3", "--count-only"]), "16\n");
    assert_eq!(stdout(&["enumerate", "--type", "A3", "--word", "121", "--count-only"]), "2\n");
}

#[test]
fn enumerate_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["enumerate", "--type", "A2", "--format", "json"])).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["words"], serde_json::json!(["121", "212"]));
}

#[test]
fn abelian_tables() {
    assert_eq!(stdout(&["abelian", "--type", "A4"]), golden("a4_abelian.txt"));
    let a4 = golden("a4_abelian.txt");
    assert!(a4.starts_with("21 abelian vectors"));
    assert!(a4.contains("(4,3,2,1)"));
    let b2 = stdout(&["abelian", "--type", "B2"]);
    assert_eq!(b2.lines().skip(1).collect::<Vec<_>>(), ["(2,2)\t2"]);
    let a5 = stdout(&["abelian", "--type", "A5"]);
    assert!(a5.starts_with("97 abelian vectors; 292864 reduced words; min (1,2,3,2,1); max (5,6,6,6,5)"));
}

#[test]
fn abelian_csv() {
    let out = stdout(&["abelian", "--type", "B2", "--format", "csv"]);
    assert_eq!(out, "s1,s2,words\n2,2,2\n");
}

#[test]
fn punctual_signs_a3() {
    assert_eq!(stdout(&["signs", "--type", "A3", "--kind", "punctual"]), golden("a3_punctual.txt"));
}

#[test]
fn punctual_is_product_of_s_and_t() {
    let table = |kind: &str| -> Vec<(String, String)> {
        stdout(&["signs", "--type", "B3", "--kind", kind, "--format", "csv"])
            .lines()
            .skip(1)
            .map(|l| {
                let (w, s) = l.split_once(',').unwrap();
                (w.to_string(), s.to_string())
            })
            .collect()
    };
    let (s, t, st) = (table("s"), table("t"), table("punctual"));
    assert_eq!(s.len(), 42);
    for ((a, b), c) in s.iter().zip(&t).zip(&st) {
        assert_eq!(a.0, c.0);
        let prod: i32 = a.1.parse::<i32>().unwrap() * b.1.parse::<i32>().unwrap();
        assert_eq!(prod.to_string(), c.1);
    }
}

#[test]
fn det_model4() {
    let fixture = here("fixtures/example-model4.json");
    let out = stdout(&["det", "--type", "B2", "--word", "1212", "--tensor", fixture.to_str().unwrap()]);
    assert_eq!(out, golden("b2_model4_det.txt"));
    assert!(out.contains("det = -(x3 - x1)*(x4 - x2)*(x1 - x2 + x3 - x4)"));
    // the fixture and the built-in tensor agree
    assert_eq!(out, stdout(&["det", "--word", "1212", "--tensor", "builtin:model4"]));
}

#[test]
fn det_counting_tensor_with_m() {
    let out = stdout(&["det", "--word", "213231", "--tensor", "builtin:a3-s2s1s3", "--m", "1", "--verify"]);
    assert!(out.contains("expanded determinant agrees: yes"));
}

#[test]
fn det_random_is_reproducible() {
    let a = stdout(&["det", "--type", "A2", "--seed", "7", "--samples", "3", "--format", "json"]);
    let b = stdout(&["det", "--type", "A2", "--seed", "7", "--samples", "3", "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"ok\": true"));
}

#[test]
fn graph_a1_comm_is_one_node() {
    let out = stdout(&["graph", "--type", "A1", "--minor", "comm"]);
    assert!(out.starts_with("graph"));
    assert_eq!(out.matches("[label=").count(), 1);
}

#[test]
fn graph_a3_comm_golden() {
    assert_eq!(stdout(&["graph", "--type", "A3", "--minor", "comm"]), golden("a3_comm.dot"));
}

#[test]
fn graph_table_reports_bipartiteness() {
    let out = stdout(&["graph", "--type", "H3", "--minor", "even", "--format", "table"]);
    assert!(out.contains("bipartite\tyes"), "{out}");
}

#[test]
fn facets_b2() {
    assert_eq!(stdout(&["facets", "--type", "B2", "--word", "121212", "--format", "csv"]), golden("b2_facets.csv"));
}

#[test]
fn check_cyclic_polytope() {
    let yes = run(&["check", "signature", "--type", "B2", "--word", "121212", "--tensor", "builtin:model4"]);
    assert_eq!(yes.status.code(), Some(0));
    let no = run(&["check", "theorem-c", "--type", "B2", "--word", "1212", "--tensor", "builtin:model4", "--x", "2,1,3,4"]);
    assert_eq!(no.status.code(), Some(1));
    let text = String::from_utf8(no.stdout).unwrap();
    assert!(text.contains("verdict: no"));
    assert!(text.contains("positions 1,2,3,4: sign 0"));
}

#[test]
fn check_constant_matrix() {
    let m = here("fixtures/constant.csv");
    let out = run(&["check", "signature", "--type", "A2", "--word", "1212", "--matrix", m.to_str().unwrap()]);
    // columns e1, e2, e3, 0: 121 at 1,2,3 is positive, 212 at 2,3,4 hits the zero column
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("occurrences checked: 2"), "{text}");
    assert!(text.contains("witness: 212 at positions 2,3,4: sign 0"), "{text}");
}

#[test]
fn extract_round_trip() {
    let json = stdout(&["extract", "--type", "B2", "--word", "1212", "--matrix", here("fixtures/constant.csv").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["N"], 3);
    assert_eq!(v["d"], 2);
}

#[test]
fn dual_cauchy_identity() {
    let out = stdout(&["dual-cauchy", "--a", "2", "--b", "4"]);
    assert!(out.contains("non-zero minors 15, all equal to 1: true"));
    assert!(!out.contains(": no"));
}

#[test]
fn usage_and_resource_errors_exit_2() {
    assert_eq!(run(&["enumerate", "--type", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--type", "A6", "--budget-words", "10"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--type", "A3", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--type", "A3", "--word", "11"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("subword-lab-{}.txt", std::process::id()));
    let out = run(&["enumerate", "--type", "A2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "121\n212\n");
    let _ = std::fs::remove_file(path);
}
