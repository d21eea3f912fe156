use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splithp")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const TRIO: &str = "p split 4 3\ne 1 2\ne 1 3\ne 1 4\n";

/// K = {1..4}, I = {5..8}; 5:{2,4}, 6:{1,2}, 7:{3,4}, 8:{1,3}
const SQUARE: &str = "p split 8 14\nk 1\nk 2\nk 3\nk 4\n\
e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n\
e 2 5\ne 4 5\ne 1 6\ne 2 6\ne 3 7\ne 4 7\ne 1 8\ne 3 8\n";

#[test]
fn solve_pendant_trio_is_no_with_cut_set() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("trio.graph"), TRIO).unwrap();
    let o = run(&["solve", "trio.graph"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness CutSet 1"), "{}", stdout(&o));
    assert!(o.stderr.is_empty());
}

#[test]
fn malformed_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.graph"), "c x\np split 5 1\ne 0 5\n").unwrap();
    let o = run(&["solve", "bad.graph"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3: vertex out of range"));
}

#[test]
fn planted_instance_solves_and_certificate_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = run(&["gen", "--kind", "PLANTED_HP", "--nk", "10", "--ni", "9", "--seed", "1", "--out", "p.graph"], d);
    assert_eq!(g.status.code(), Some(0));
    let o = run(&["solve", "p.graph", "--certificate", "p.cert", "--trace"], d);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("path ")));
    assert!(out.lines().any(|l| l.starts_with("trace ")));
    assert_eq!(run(&["check", "p.graph", "p.cert"], d).status.code(), Some(0));

    // repeat the first vertex of the path
    let cert = fs::read_to_string(d.join("p.cert")).unwrap();
    let tampered: String = cert
        .lines()
        .map(|l| match l.strip_prefix("path ") {
            Some(rest) => {
                let mut v: Vec<&str> = rest.split(' ').collect();
                v[1] = v[0];
                format!("path {}\n", v.join(" "))
            }
            None => format!("{l}\n"),
        })
        .collect();
    fs::write(d.join("bad.cert"), tampered).unwrap();
    let o = run(&["check", "p.graph", "bad.cert"], d);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NotAPermutation"));
}

#[test]
fn json_mirrors_text() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("trio.graph"), TRIO).unwrap();
    let o = run(&["solve", "trio.graph", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "NO");
    assert_eq!(v["witness"]["kind"], "CutSet");
    assert_eq!(v["witness"]["payload"], serde_json::json!([1]));
}

#[test]
fn oracle_agrees_on_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("trio.graph"), TRIO).unwrap();
    fs::write(dir.path().join("sq.graph"), SQUARE).unwrap();
    assert_eq!(run(&["oracle", "trio.graph"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["oracle", "sq.graph", "--max-n", "12"], dir.path()).status.code(), Some(0));
}

#[test]
fn reduce_writes_one_file_per_edge() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("sq.graph"), SQUARE).unwrap();
    let o = run(&["reduce", "sq.graph", "--out-dir", "red"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> =
        fs::read_dir(dir.path().join("red")).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 8);
    assert_eq!(names[0], "sq_1.graph");
    let first = fs::read_to_string(dir.path().join("red/sq_1.graph")).unwrap();
    assert!(first.starts_with("c reduced-from edge 1 6\np split 11 20\n"));
}

#[test]
fn sweep_passes_on_a_generated_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = run(&["gen", "--kind", "K14FREE_D3", "--nk", "14", "--ni", "10", "--count", "30", "--out", "corp"], d);
    assert_eq!(g.status.code(), Some(0));
    assert!(d.join("corp/manifest.txt").exists());
    let o = run(&["sweep", "--corpus", "corp"], d);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("instances 30"));
}

#[test]
fn sweep_flags_a_broken_instance() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("corp");
    fs::create_dir(&d).unwrap();
    fs::write(d.join("x.graph"), "p split 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
    let o = run(&["sweep", "--corpus", "corp"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_emits_the_four_columns() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["bench", "--sizes", "30,60", "--seeds", "1,2"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,regime,solver_ms,oracle_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 4 && l.ends_with(",NA")));

    let o = run(&["bench", "--kind", "PLANTED_HP", "--sizes", "14", "--seeds", "3"], dir.path());
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "14");
    assert!(row[3].parse::<f64>().is_ok());
}
