use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn revsynth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revsynth")).args(args).output().expect("run revsynth")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const IDENTITY3: &str = ".i 3\n.o 3\n000\n001\n010\n011\n100\n101\n110\n111\n";
/// Swaps lines 1 and 2 on three lines.
const SWAP12: &str = ".i 3\n.o 3\n000\n001\n100\n101\n010\n011\n110\n111\n";
const AND: &str = ".i 2\n.o 1\n0\n0\n0\n1\n";
const SWAP2: &str = ".i 2\n.o 2\n00\n10\n01\n11\n";

#[test]
fn synth_identity_is_empty() {
    let dir = TempDir::new().unwrap();
    let tt = file(&dir, "id.tt", IDENTITY3);
    let out = dir.path().join("id.rc");
    let o = revsynth(&["synth", s(&tt), "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 gates"));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), ".lines 3\n");
}

#[test]
fn synth_then_verify_swap() {
    let dir = TempDir::new().unwrap();
    let tt = file(&dir, "swap.tt", SWAP12);
    for method in ["pprm", "esop"] {
        let rc = dir.path().join(format!("swap-{method}.rc"));
        let o = revsynth(&["synth", s(&tt), "--order", "2,1,3", "--to-toffoli", method, "--out", s(&rc)]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(stdout(&o).contains("toffoli:"));
        let v = revsynth(&["verify", s(&rc), s(&tt)]);
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(stdout(&v), "equal\n");
    }
    // Without --out the circuit goes to stdout and counts to stderr.
    let o = revsynth(&["synth", s(&tt)]);
    assert!(stdout(&o).starts_with(".lines 3\n"));
    assert!(stderr(&o).contains("single-target:"));
}

#[test]
fn synth_rejects_non_reversible() {
    let dir = TempDir::new().unwrap();
    let tt = file(&dir, "and.tt", AND);
    let o = revsynth(&["synth", s(&tt)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not reversible"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_reports_first_difference() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.rc", ".lines 2\nt x1\n");
    let b = file(&dir, "b.rc", ".lines 2\nt x2\n");
    let o = revsynth(&["verify", s(&a), s(&b)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not equal: input 00 -> 10 vs 01\n");

    // A circuit followed by its inverse is the identity.
    let c = file(&dir, "c.rc", ".lines 2\nt x1 x2\nt x2 x1\nt x2 x1\nt x1 x2\n");
    let id = file(&dir, "id.tt", ".i 2\n.o 2\n00\n01\n10\n11\n");
    assert_eq!(stdout(&revsynth(&["verify", s(&c), s(&id)])), "equal\n");

    let three = file(&dir, "three.tt", IDENTITY3);
    assert_eq!(revsynth(&["verify", s(&a), s(&three)]).status.code(), Some(2));
}

#[test]
fn map_and_sim() {
    let dir = TempDir::new().unwrap();
    let rc = file(&dir, "or.rc", ".lines 3\nstg 3 : x1 ^ x2 ^ x1&x2\n");
    let o = revsynth(&["map", s(&rc), "--method", "esop"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), ".lines 3\nt x3\nt !x1 !x2 x3\n");
    let mapped = file(&dir, "mapped.rc", &stdout(&o));
    assert_eq!(stdout(&revsynth(&["verify", s(&rc), s(&mapped)])), "equal\n");

    assert_eq!(stdout(&revsynth(&["sim", s(&rc), "100"])), "101\n");
    assert_eq!(stdout(&revsynth(&["sim", s(&rc), "000"])), "000\n");
    assert_eq!(revsynth(&["sim", s(&rc), "10"]).status.code(), Some(2));
}

#[test]
fn bounds_table_and_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let o = revsynth(&["bounds", "--n-max", "16", "--csv", s(&csv)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 16);
    assert!(!text.contains("FAIL"));
    let csv = std::fs::read_to_string(csv).unwrap();
    assert!(csv.starts_with("n,lower_bound,exact,induction\n2,3,true,ok\n3,5,true,ok\n"));
}

#[test]
fn census_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for path in [&a, &b] {
        let o = revsynth(&["census", "--n", "4", "--samples", "200", "--seed", "9", "--csv", s(path), "--threads", "2"]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    assert!(String::from_utf8(text).unwrap().starts_with("metric,value,count\n"));

    let o = revsynth(&["census", "--n", "1", "--exhaustive"]);
    assert!(o.status.success());
    assert_eq!(revsynth(&["census", "--n", "4", "--exhaustive"]).status.code(), Some(2));
}

#[test]
fn halfv_subcommands() {
    let o = revsynth(&["halfv", "enumerate", "--n", "2", "--k", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "16 = 16 ok\n");

    let dir = TempDir::new().unwrap();
    let swap = file(&dir, "swap.tt", SWAP2);
    let o = revsynth(&["halfv", "check", s(&swap)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not realizable (gate 1, witness "));

    let f = file(&dir, "f.tt", ".i 2\n.o 3\n101\n011\n000\n110\n");
    let h = dir.path().join("h.rc");
    let back = dir.path().join("back.tt");
    assert!(revsynth(&["halfv", "encode", s(&f), "--k", "3", "--out", s(&h)]).status.success());
    assert!(std::fs::read_to_string(&h).unwrap().starts_with("# halfv n=3 k=3"));
    assert!(revsynth(&["halfv", "decode", s(&h), "--out", s(&back)]).status.success());
    assert_eq!(std::fs::read(&f).unwrap(), std::fs::read(&back).unwrap());

    let o = revsynth(&["halfv", "check", s(&h)]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("realizable (n=3 k=3)"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(revsynth(&[]).status.code(), Some(2));
    assert_eq!(revsynth(&["synth", "/nonexistent.tt"]).status.code(), Some(2));
    assert_eq!(revsynth(&["census", "--n", "3", "--exhaustive", "--samples", "5"]).status.code(), Some(2));
    assert!(revsynth(&["--help"]).status.success());
}
