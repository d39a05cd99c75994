use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ternary_lrc::constructions::LENGTH12_DISTANCE6;
use ternary_lrc::gf3::Gf3Matrix;
use ternary_lrc::matrix_file;

fn tlrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_class_8_writes_the_length12_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    let out = tlrc(&["construct", "--class", "8", "-o", path_str(&h)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let m = matrix_file::read(&h).unwrap();
    assert_eq!(m, Gf3Matrix::from_digits(&LENGTH12_DISTANCE6).unwrap());
    assert!(fs::read_to_string(&h).unwrap().starts_with("GF3 7 12\n"));
}

#[test]
fn construct_shapes() {
    for (args, header) in [
        (vec!["--class", "2", "--g", "4"], "GF3 3 9\n"),
        (vec!["--class", "1", "--k", "2", "--r", "1"], "GF3 2 4\n"),
    ] {
        let mut full = vec!["construct"];
        full.extend(args);
        let out = tlrc(&full);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with(header), "{}", stdout(&out));
    }
}

#[test]
fn construct_rejects_bad_parameters() {
    let out = tlrc(&["construct", "--class", "6", "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("l >= 3"), "{}", stderr(&out));
    let out = tlrc(&["construct", "--class", "1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--r"));
    let out = tlrc(&["construct", "--class", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_then_verify_is_optimal() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["--class", "1", "--k", "5", "--r", "2"],
        &["--class", "2", "--g", "0"],
        &["--class", "3", "--k", "3"],
        &["--class", "4"],
        &["--class", "5", "--n", "12", "--k", "6"],
        &["--class", "5", "--n", "8", "--k", "3"],
        &["--class", "6", "--l", "3"],
        &["--class", "7", "--l", "4"],
        &["--class", "8"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let h = dir.path().join(format!("h{i}.txt"));
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend(["-o", path_str(&h)]);
        assert_eq!(tlrc(&full).status.code(), Some(0));
        let out = tlrc(&["verify", path_str(&h), "--format", "kv"]);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("\noptimal=true\n"), "{args:?}");
    }
}

#[test]
fn verify_near_mds_kv() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    tlrc(&[
        "construct",
        "--class",
        "5",
        "--n",
        "12",
        "--k",
        "6",
        "-o",
        path_str(&h),
    ]);
    let out = tlrc(&["verify", path_str(&h), "--format", "kv", "--r", "5"]);
    let text = stdout(&out);
    let head: Vec<&str> = text.lines().take(10).collect();
    assert_eq!(
        head,
        [
            "n=12",
            "k=6",
            "d=6",
            "locality=5,5,5,5,5,5,5,5,5,5,5,5",
            "r=5",
            "r_declared=5",
            "target_d=6",
            "target_d_declared=6",
            "optimal=true",
            "class=5"
        ]
    );
    assert!(text.lines().last().unwrap().starts_with("elapsed_ms="));
}

#[test]
fn verify_single_parity_text() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    tlrc(&[
        "construct",
        "--class",
        "1",
        "--k",
        "6",
        "--r",
        "2",
        "-o",
        path_str(&h),
    ]);
    let out = tlrc(&["verify", path_str(&h)]);
    let text = stdout(&out);
    assert!(text.contains("code: [9, 6, 2]"));
    assert!(text.contains("code locality: 2"));
    assert!(text.contains("optimal: true"));
    assert!(text.contains("class: 1"));
}

#[test]
fn verify_errors() {
    let dir = tempfile::tempdir().unwrap();
    let identity = dir.path().join("id.txt");
    fs::write(&identity, "GF3 3 3\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let out = tlrc(&["verify", path_str(&identity)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("k = 0: no nonzero codewords"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "GF3 2 3\n1 0 0\n0 5 0\n").unwrap();
    let out = tlrc(&["verify", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn verify_not_optimal_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    fs::write(&h, "GF3 2 4\n1 1 1 0\n0 0 1 1\n").unwrap();
    let out = tlrc(&["verify", path_str(&h), "--format", "kv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("optimal=false"));
}

#[test]
fn classify_examples() {
    let out = tlrc(&["classify", "12", "5", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("class 8, d=6, exists"));
    let out = tlrc(&["classify", "8", "2", "1"]);
    assert_eq!(stdout(&out).lines().next(), Some("class 4, d=6, exists"));
    let out = tlrc(&["classify", "7", "4", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out).lines().next(),
        Some("no class, d_target=3, does not exist")
    );
    let out = tlrc(&["classify", "7", "4", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_finds_and_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let out = tlrc(&["search", "6", "3", "2", "-o", path_str(&w)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("FOUND"));
    let out = tlrc(&["verify", path_str(&w), "--format", "kv"]);
    let text = stdout(&out);
    assert!(text.starts_with("n=6\nk=3\nd=3\n"), "{text}");
    assert!(text.contains("\nr=2\n"));
}

#[test]
fn search_not_found() {
    let out = tlrc(&["search", "7", "4", "2", "--workers", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "NOT FOUND (531441 examined)");
}

#[test]
fn search_count_all() {
    let out = tlrc(&["search", "4", "2", "1", "--mode", "count-all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("FOUND ("));
    assert!(stdout(&out).contains("81 examined"));
}

#[test]
fn search_cap() {
    let out = tlrc(&["search", "9", "5", "2", "--cap", "3^19"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds cap"), "{}", stderr(&out));
    let out = tlrc(&["search", "6", "3", "2", "--cap", "729"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tlrc(&["search", "6", "3", "2", "--cap", "19683"]);
    assert_eq!(out.status.code(), Some(0));
    let out = tlrc(&["search", "6", "3", "2", "--cap", "lots"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_has_27_optimal_rows() {
    let out = tlrc(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("class")).collect();
    assert_eq!(rows.len(), 27);
    assert!(rows.iter().all(|r| r.ends_with("optimal: true")));
    let class4 = rows.iter().find(|r| r.starts_with("class 4")).unwrap();
    assert!(class4.contains("n=8 ") && class4.contains("k=2 ") && class4.contains("r=1 d=6"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(tlrc(&[]).status.code(), Some(2));
    assert_eq!(tlrc(&["classify", "7", "x", "2"]).status.code(), Some(2));
    assert_eq!(tlrc(&["--help"]).status.code(), Some(0));
}
