//! One golden output per subcommand. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn check(golden: &str, args: &[&str], code: i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_filtralab"))
        .args(args)
        .current_dir(dir("fixtures"))
        .env_remove("FILTRALAB_KMAX")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = dir("golden").join(golden);
    let actual = String::from_utf8(out.stdout).expect("utf-8 output");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(dir("golden")).unwrap();
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output of {args:?} differs from {golden}");
}

#[test]
fn coeffs() {
    check("coeffs.json", &["coeffs", "plane.fl", "F"], 0);
    check("coeffs.txt", &["coeffs", "plane.fl", "F", "--format", "text"], 0);
}

#[test]
fn mixed() {
    check("mixed.json", &["mixed", "plane.fl", "P"], 0);
    check("mixed.csv", &["mixed", "plane.fl", "P", "--format", "csv"], 0);
}

#[test]
fn function() {
    check("function.json", &["function", "plane.fl", "F", "--window", "4"], 0);
}

#[test]
fn defect() {
    check("defect.json", &["defect", "plane.fl", "F"], 0);
    check("defect.csv", &["defect", "plane.fl", "F", "--format", "csv"], 0);
}

#[test]
fn postulation() {
    check("postulation.json", &["postulation", "plane.fl", "F"], 0);
}

#[test]
fn rr() {
    check("rr.json", &["rr", "plane.fl", "I", "--n", "1"], 0);
}

#[test]
fn intclosure() {
    check("intclosure.json", &["intclosure", "plane.fl", "I"], 0);
}

#[test]
fn cohomology() {
    check("cohomology.json", &["cohomology", "plane.fl", "F"], 0);
    check("cohomology.csv", &["cohomology", "plane.fl", "F", "--format", "csv"], 0);
}

#[test]
fn torsion() {
    check("torsion.json", &["torsion", "plane.fl", "F", "--window", "4"], 0);
}

#[test]
fn reduction() {
    check("reduction.json", &["reduction", "plane.fl", "F"], 0);
}

#[test]
fn verify() {
    for (theorem, file, target) in [
        ("northcott", "plane.fl", "F"),
        ("huneke-ooishi", "plane.fl", "F"),
        ("sally", "plane.fl", "F"),
        ("nonneg", "plane.fl", "F"),
        ("cohomology", "plane.fl", "F"),
        ("itoh-e2", "plane.fl", "I"),
        ("mgho", "plane.fl", "P"),
        ("e2zero-multi", "plane.fl", "P"),
        ("itoh-e3", "space.fl", "I"),
    ] {
        check(&format!("verify-{theorem}.json"), &["verify", theorem, file, target], 0);
    }
}

#[test]
fn run() {
    check("run.json", &["run", "quotient_unknown_cm.fl"], 0);
}

#[test]
fn corpus() {
    check("corpus.json", &["corpus", "."], 0);
    check("corpus.txt", &["corpus", ".", "--format", "text"], 0);
}

#[test]
fn fmt() {
    check("fmt.fl", &["fmt", "messy.txt"], 0);
}
