use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const FIG8: &str = include_str!("../../core/examples/figure-eight.job");

fn write_job(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn twistvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistvol"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn v_column(csv: &str) -> Vec<String> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().to_string())
        .collect()
}

#[test]
fn compute_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "k.job", FIG8);
    let args = [
        "compute",
        job.to_str().unwrap(),
        "--n",
        "2..9",
        "--format",
        "csv",
    ];
    let a = twistvol(&args);
    let b = twistvol(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_and_csv_agree() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "k.job", FIG8);
    let path = job.to_str().unwrap();
    let table = stdout(&twistvol(&["compute", path, "--n", "2..8"]));
    let csv = stdout(&twistvol(&[
        "compute", path, "--n", "2..8", "--format", "csv",
    ]));
    let table_rows: Vec<Vec<&str>> = table
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    let csv_rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(table_rows.len(), 7);
    assert_eq!(table_rows.len(), csv_rows.len());
    for (t, c) in table_rows.iter().zip(&csv_rows) {
        assert_eq!(t[0], c[0]);
        assert_eq!(t[1], c[1]);
        if t[3] != "-" {
            let shown: f64 = t[3].parse().unwrap();
            let full: f64 = c[3].parse().unwrap();
            assert!(
                (shown - full).abs() <= 5e-6 * full.abs().max(1.0),
                "{} vs {}",
                t[3],
                c[3]
            );
        }
    }
    assert!(table.contains("0.544397"));
}

#[test]
fn conjugate_embedding_gives_same_estimates() {
    let dir = TempDir::new().unwrap();
    let a = write_job(&dir, "a.job", FIG8);
    let b = write_job(
        &dir,
        "b.job",
        &FIG8.replace("embed: -0.5 0.8660254", "embed: -0.5 -0.87"),
    );
    let va = stdout(&twistvol(&[
        "compute",
        a.to_str().unwrap(),
        "--n",
        "4..9",
        "--format",
        "csv",
    ]));
    let vb = stdout(&twistvol(&[
        "compute",
        b.to_str().unwrap(),
        "--n",
        "4..9",
        "--format",
        "csv",
    ]));
    assert_eq!(v_column(&va), v_column(&vb));
    assert_eq!(v_column(&va).len(), 6);
}

#[test]
fn broken_representation_fails_check() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "bad.job", &FIG8.replace("[[0,-1],[1]]", "[[-1],[1]]"));
    let out = twistvol(&["check", job.to_str().unwrap()]);
    assert!(!out.status.success());
    let text = stdout(&out);
    assert!(text.contains("FAIL relations"), "{text}");
    assert!(text.contains("some checks failed"));
}

#[test]
fn trivial_relation_passes_check() {
    let dir = TempDir::new().unwrap();
    let job = write_job(
        &dir,
        "free.job",
        &FIG8.replace("rel: aBAba = baBAb", "rel: ab = ab"),
    );
    let out = twistvol(&["check", job.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn bundled_job_passes_check() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "k.job", FIG8);
    let out = twistvol(&["check", job.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("PASS"))
            .count(),
        7
    );
}

#[test]
fn small_range_has_no_estimates() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "k.job", FIG8);
    let out = twistvol(&[
        "compute",
        job.to_str().unwrap(),
        "--n",
        "2..3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.ends_with(",,,")), "{text}");
}

#[test]
fn invariant_output() {
    let dir = TempDir::new().unwrap();
    let job = write_job(&dir, "k.job", FIG8);
    let out = stdout(&twistvol(&["invariant", job.to_str().unwrap(), "--n", "2"]));
    assert!(out.contains("pretty: t^2 - 4*t + 1"), "{out}");
    assert!(out.contains("value at t = 1: [-2]"), "{out}");
    let trivial = stdout(&twistvol(&[
        "invariant",
        job.to_str().unwrap(),
        "--trivial-rep",
    ]));
    assert!(
        trivial.contains("undefined (denominator vanishes)"),
        "{trivial}"
    );
}

#[test]
fn diagnostics_name_the_stage() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.job");
    let out = twistvol(&["compute", missing.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).starts_with("twistvol: parse failed"),
        "{}",
        stderr(&out)
    );

    let bad = write_job(&dir, "bad.job", &FIG8.replace("[[0,-1],[1]]", "[[-1],[1]]"));
    let out = twistvol(&["compute", bad.to_str().unwrap(), "--n", "4"]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(
        err.starts_with("twistvol: ") && err.contains(" failed: "),
        "{err}"
    );
    assert!(!err.contains("parse failed"), "{err}");

    let garbled = write_job(&dir, "garbled.job", "gens: a b\nrel: a = \n");
    let out = twistvol(&["check", garbled.to_str().unwrap()]);
    assert!(
        stderr(&out).starts_with("twistvol: parse failed"),
        "{}",
        stderr(&out)
    );
}
