//! End-to-end smoke tests of the `cvt` binary: construct, analyse and
//! classify through real files, checking exit codes and report shape.

use std::path::Path;
use std::process::{Command, Output};

fn cvt(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cvt"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json_field(stdout: &[u8], field: &str) -> String {
    let text = String::from_utf8_lossy(stdout);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON report");
    value["data"][field]
        .as_str()
        .map(str::to_string)
        .unwrap_or_else(|| value["data"][field].to_string())
}

#[test]
fn construct_aut_classify_find_pipeline() {
    let dir = tempdir();
    // construct spx(5,1) with its wreath group
    let out = cvt(
        &["construct", "spx", "--r", "5", "--s", "1", "--with-group", "--out", "."],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.join("spx-5-1.graph.txt").exists());
    assert!(dir.join("spx-5-1.group.txt").exists());

    // automorphism group has order 2^5 * 10 = 320
    let out = cvt(&["aut", "--graph", "spx-5-1.graph.txt", "--out", "."], &dir);
    assert!(out.status.success());
    assert_eq!(json_field(&out.stdout, "order"), "320");

    // classification lands in SPX(5,1)
    let out = cvt(
        &[
            "classify",
            "--graph",
            "spx-5-1.graph.txt",
            "--group",
            "spx-5-1.group.txt",
            "--out",
            ".",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_field(&out.stdout, "family"), "SPX(5,1)");

    // semiregular witness of order at least 5, oracle-checked
    let out = cvt(
        &[
            "find-semiregular",
            "--graph",
            "spx-5-1.graph.txt",
            "--group",
            "spx-5-1.group.txt",
            "--oracle",
            "--out",
            ".",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let order: u64 = json_field(&out.stdout, "order").parse().unwrap();
    assert!(order >= 5);
}

#[test]
fn construct_spx_five_two_has_forty_vertices() {
    // |V| = r * 2^(s+1) from the vertex set Z2^s x Zr x {+,-}
    let dir = tempdir();
    let out = cvt(
        &["construct", "spx", "--r", "5", "--s", "2", "--out", "."],
        &dir,
    );
    assert!(out.status.success());
    let graph_text = std::fs::read_to_string(dir.join("spx-5-2.graph.txt")).unwrap();
    assert!(graph_text.starts_with("vertices 40\n"));
}

#[test]
fn classify_non_cubic_input_is_a_usage_error() {
    let dir = tempdir();
    std::fs::write(dir.join("c6.graph.txt"), "vertices 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
        .unwrap();
    std::fs::write(dir.join("c6.group.txt"), "degree 6\n(0 1 2 3 4 5)\n").unwrap();
    let out = cvt(
        &[
            "classify",
            "--graph",
            "c6.graph.txt",
            "--group",
            "c6.group.txt",
            "--out",
            ".",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_without_witness_subgroup_is_a_verification_failure() {
    let dir = tempdir();
    // K33 under its regular Z6: no abelian normal non-semiregular subgroup
    let out = cvt(&["construct", "moebius", "--n", "3", "--out", "."], &dir);
    assert!(out.status.success());
    std::fs::write(
        dir.join("z6.group.txt"),
        "degree 6\n(0 1 2 3 4 5)\n",
    )
    .unwrap();
    let out = cvt(
        &[
            "classify",
            "--graph",
            "moebius-3.graph.txt",
            "--group",
            "z6.group.txt",
            "--out",
            ".",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_parameters_exit_two() {
    let dir = tempdir();
    let out = cvt(&["construct", "px", "--r", "3", "--s", "3", "--out", "."], &dir);
    assert_eq!(out.status.code(), Some(2));
    let out = cvt(&["construct", "nonsense", "--out", "."], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_section_alias_and_determinism() {
    let dir = tempdir();
    let out1 = cvt(
        &["verify-paper", "--section", "construction-counts", "--out", "run1"],
        &dir,
    );
    assert!(out1.status.success());
    // historical alias for the r = 4 uniqueness harness
    let out2 = cvt(&["verify-paper", "--section", "lemma-boring", "--out", "run2"], &dir);
    assert!(out2.status.success());
    // byte-identical reports for identical inputs and flags
    let out3 = cvt(
        &["verify-paper", "--section", "construction-counts", "--out", "run3"],
        &dir,
    );
    assert!(out3.status.success());
    assert_eq!(out1.stdout, out3.stdout);
    let a = std::fs::read(dir.join("run1/verify-paper.json")).unwrap();
    let b = std::fs::read(dir.join("run3/verify-paper.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn corpus_command_writes_manifest_and_files() {
    let dir = tempdir();
    let out = cvt(
        &["corpus", "--out", ".", "--max-order", "12", "--max-vertices", "12"],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("corpus.json")).unwrap()).unwrap();
    let entries = manifest["data"].as_array().unwrap();
    assert!(!entries.is_empty());
    for entry in entries {
        let graph_file = entry["graph_file"].as_str().unwrap();
        let group_file = entry["group_file"].as_str().unwrap();
        assert!(dir.join(graph_file).exists());
        assert!(dir.join(group_file).exists());
    }
}

#[test]
fn decomp_verify_reports_single_classes() {
    let dir = tempdir();
    let out = cvt(&["decomp-verify", "--out", "."], &dir);
    assert!(out.status.success());
    let text: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    let graphs = text["data"]["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 3);
    for g in graphs {
        assert_eq!(g["conjugacy_class_count"], 1);
    }
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "cvt-cli-test-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
