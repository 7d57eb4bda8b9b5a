use std::path::Path;
use std::process::{Command, Output};

use subspace_codes::codefile::{parse_code, parse_report};

fn subcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcode")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, kind: &str, q: &str) -> String {
    let path = dir.join(format!("{kind}-{q}.txt"));
    let p = path.to_str().unwrap();
    let o = subcode(&["construct", kind, "--q", q, "-o", p]);
    assert!(o.status.success(), "{o:?}");
    p.to_string()
}

#[test]
fn construct_sizes_and_determinism() {
    for (kind, q, n) in [("construction-a", "2", 77), ("lmrd", "2", 64), ("plane-spread", "3", 28), ("core-plus-s", "2", 71)] {
        let a = subcode(&["construct", kind, "--q", q]);
        let b = subcode(&["construct", kind, "--q", q]);
        assert_eq!(a.stdout, b.stdout);
        let text = stdout(&a);
        assert_eq!(text.lines().count(), n + 1);
        assert_eq!(parse_code(&text).unwrap().len(), n);
    }
}

#[test]
fn verify_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "construction-a", "2");
    let o = subcode(&["verify", &a, "--min-distance", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("min_distance = 4"));
    assert_eq!(subcode(&["verify", &a, "--min-distance", "6"]).status.code(), Some(1));

    let spread = construct(dir.path(), "plane-spread", "2");
    assert_eq!(subcode(&["verify", &spread, "--min-distance", "6"]).status.code(), Some(0));

    let text = std::fs::read_to_string(&a).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let dup = lines[5];
    lines[0] = "subspace-code v=6 q=2 k=3 count=78";
    lines.push(dup);
    let bad = dir.path().join("dup.txt");
    std::fs::write(&bad, lines.join("\n")).unwrap();
    let o = subcode(&["verify", bad.to_str().unwrap(), "--min-distance", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("min_distance = 0 (codewords 4 and 77 coincide"));
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "construction-a", "2");
    let rep = dir.path().join("a.report");
    let o = subcode(&["analyze", &a, "--aut", "--report", rep.to_str().unwrap()]);
    assert!(o.status.success());
    let summary = stdout(&o);
    assert!(summary.contains("degree distribution: 5^7 9^56"));
    assert!(summary.contains("9-configurations: X^28 E^28"));
    assert!(summary.contains("168 collineations, self-dual"));
    let r = parse_report(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(r.seventeen_config_count, Some(1428));
    assert_eq!(r.aut.unwrap().collineations, 168);

    let l = construct(dir.path(), "lmrd", "2");
    let o = subcode(&["analyze", &l, "--kv"]);
    assert!(stdout(&o).contains("s_profile = 0^64\n"));
}

#[test]
fn bounds_output() {
    let o = subcode(&["bounds", "6", "4", "3", "2"]);
    assert!(stdout(&o).ends_with("bound = 81\n"));
    assert!(stdout(&subcode(&["bounds", "6", "4", "3", "3"])).contains("bound = 784"));
    assert!(stdout(&subcode(&["bounds", "5", "4", "2", "2"])).contains("bound = 9"));
    assert!(stdout(&subcode(&["bounds", "13", "6", "5", "2"])).contains("bound = unknown"));
    assert_eq!(subcode(&["bounds", "6", "5", "3", "2"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(subcode(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(subcode(&["spreads", "show", "Q"]).status.code(), Some(2));
    assert_eq!(subcode(&["verify", "/nonexistent/file", "--min-distance", "4"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "construction-a", "2");
    assert_eq!(subcode(&["--budget", "1", "analyze", &a, "--aut"]).status.code(), Some(3));
}

#[test]
fn spreads_and_selftest() {
    let o = subcode(&["spreads", "show", "ID'"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.trim_start().starts_with('L')).count(), 9);
    let o = subcode(&["--threads", "2", "selftest", "--seed", "11", "--cases", "2000"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("seed 11: PASS"));
}
