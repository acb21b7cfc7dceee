use std::path::Path;
use std::process::{Command, Output};

fn eppo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eppo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    format!("file:{}", p.display())
}

#[test]
fn check_a5() {
    let o = eppo(&["check", "catalog:A5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("spectrum {1,2,3,5}"), "{out}");
    assert!(out.contains("verdict: EPPO"));
    assert!(out.contains("seed: 0"));
}

#[test]
fn check_metacyclic_witness() {
    let o = eppo(&["--format", "records", "check", "metacyclic", "p=5", "a=1", "q=2", "b=2", "r=4"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("exhaustive.witness.order: 10"), "{out}");
    assert!(out.contains("config.seed: 0"));
}

#[test]
fn files() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.grp", "degree 6\n(1 2 3 4 5 6)\n");
    assert_eq!(eppo(&["check", &c6]).status.code(), Some(1));
    let trivial = write(dir.path(), "trivial.grp", "# nothing moves\ndegree 3\n");
    let o = eppo(&["spectrum", &trivial]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("spectrum {1}"), "{}", stdout(&o));
    let s3 = write(dir.path(), "s3.grp", "degree 3\n(1 2 3)\n(1 2)\n");
    let o = eppo(&["classify", &s3]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solvable-eppo chief factors [2,3]"), "{}", stdout(&o));
    let broken = write(dir.path(), "broken.grp", "degree 3\n(1 4)\n");
    let o = eppo(&["check", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn spectra() {
    let o = eppo(&["spectrum", "catalog:PSL3(4)"]);
    assert!(stdout(&o).contains("{1,2,3,4,5,7}"));
    let o = eppo(&["spectrum", "catalog:Sz32", "--sample-n", "20000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(sampled)") && out.contains("seed: 7"), "{out}");
}

#[test]
fn classify_catalog() {
    let o = eppo(&["classify", "catalog:A5", "catalog:PSL2(17)", "catalog:PSL2(7)", "catalog:M9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("catalog:A5: a5-recognized"));
    assert!(out.contains("catalog:PSL2(17): simple-eppo PSL2(17)"));
    assert!(out.contains("catalog:PSL2(7): simple-eppo PSL2(7)"));
    assert!(out.contains("catalog:M9: solvable-eppo chief factors [2,2,2,9]"));
}

#[test]
fn refusals_and_errors() {
    let o = eppo(&["check", "catalog:Sz32", "--sample-n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the enumeration threshold"));
    let o = eppo(&["check", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid group source"));
    assert_eq!(eppo(&["check", "catalog:J1"]).status.code(), Some(2));
    assert_eq!(eppo(&["check", "genquat n=2"]).status.code(), Some(2));
    assert_eq!(eppo(&["--threshold", "0", "check", "catalog:A5"]).status.code(), Some(2));
    assert_eq!(eppo(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn threshold_switches_to_sampling() {
    let o = eppo(&["--threshold", "100", "check", "catalog:PSL2(7)", "--sample-n", "500"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sampled-consistent"));
}

#[test]
fn records_are_reproducible() {
    let args = ["--format", "records", "--seed", "11", "check", "catalog:Sz32", "--sample-n", "5000"];
    let (a, b) = (eppo(&args), eppo(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("sampled.seed: 11") || stdout(&a).contains(".seed: 11"));
}

#[test]
fn catalog_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psl28.grp");
    let o = eppo(&["catalog", "build", "PSL2(8)", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = eppo(&["--format", "records", "spectrum", &format!("file:{}", path.display())]);
    assert!(stdout(&o).contains(".order: 504"));
    assert!(stdout(&o).contains("spectrum.orders: 1,2,3,7,9"));
    let list = stdout(&eppo(&["catalog", "list"]));
    assert_eq!(list.lines().filter(|l| l.contains("order")).count(), 9);
}

#[test]
fn verify_subsets() {
    let o = eppo(&["verify", "--criterion", "3,6,10", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("criterion.3.status: pass") && out.contains("suite.status: pass"));
}

#[test]
fn corrupted_fixture_names_the_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let good = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/catalog.txt")).unwrap();
    let bad = good.replace("A5.spectrum: 1,2,3,5", "A5.spectrum: 1,2,3,5,6");
    assert_ne!(good, bad);
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, bad).unwrap();
    let o = eppo(&["catalog", "verify", "--skip-sampled", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED: criterion 1 (catalog)"), "{}", stdout(&o));
    let o = eppo(&["catalog", "verify", "--skip-sampled"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fixture_regenerates_identically() {
    let o = eppo(&["catalog", "fixture"]);
    let bundled = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/catalog.txt")).unwrap();
    assert_eq!(stdout(&o), bundled);
}
