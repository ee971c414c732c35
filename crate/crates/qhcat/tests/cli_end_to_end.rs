//! End-to-end checks of the binary: file inputs, the environment cap, and
//! exit codes as observed by a real subprocess.

use qhcat::exactla::frac;
use qhcat::generators;
use std::process::Command;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_qhcat")
}

#[test]
fn certify_from_category_file() {
    let d = generators::temperley_lieb(3, frac(3, 2)).unwrap();
    let dir = std::env::temp_dir().join("qhcat-test-files");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tl3.cat");
    generators::save(&d.category, &d.cocycle, &path).unwrap();
    let out = Command::new(exe())
        .args(["certify", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn validate_catches_broken_file() {
    let dir = std::env::temp_dir().join("qhcat-test-files");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.cat");
    // Associativity violated: (a∘a)∘a = e but a∘(a∘a) = a.
    std::fs::write(
        &path,
        "OBJECTS\nX\nMORPHISMS\ne X X\na X X\nb X X\nIDENTITIES\nX e\nCOMP\n\
         e e e\ne a a\ne b b\na e a\na a b\na b a\nb e b\nb a e\nb b b\n",
    )
    .unwrap();
    let out = Command::new(exe())
        .args(["validate", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // The violation is visible in the report with its witness triple.
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stages"][0]["name"], "validate");
    assert_eq!(v["stages"][0]["pass"], serde_json::Value::Bool(false));
    let violations = v["stages"][0]["data"]["category_violations"]
        .as_array()
        .unwrap();
    assert!(
        violations
            .iter()
            .any(|x| x.as_str().unwrap().contains("Associativity")),
        "{:?}",
        violations
    );
}

#[test]
fn missing_file_is_usage_error() {
    let out = Command::new(exe())
        .args(["certify", "/nonexistent/path.cat"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_cap_forces_resource_exit() {
    let out = Command::new(exe())
        .args(["analyze", "builtin:t:3"])
        .env("QHCAT_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("27"), "{}", text);
}

#[test]
fn flag_overrides_env_cap() {
    let out = Command::new(exe())
        .args(["analyze", "builtin:t:3", "--max-dim", "100"])
        .env("QHCAT_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn round_trip_through_disk_preserves_reports() {
    // Save a twisted Brauer category, reload it, and compare the analyze
    // JSON against the builtin run.
    let d = generators::brauer(2, frac(1, 2)).unwrap();
    let dir = std::env::temp_dir().join("qhcat-test-files");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.cat");
    generators::save(&d.category, &d.cocycle, &path).unwrap();
    let (c2, a2) = generators::load(&path).unwrap();
    assert_eq!(c2, d.category);
    assert_eq!(a2, d.cocycle);
    let from_file = Command::new(exe())
        .args(["certify", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert_eq!(from_file.status.code(), Some(0));
    // Identical mathematical content: compare every stage except the input
    // descriptor.
    let builtin = Command::new(exe())
        .args(["certify", "builtin:brauer:2:1/2", "--json"])
        .output()
        .unwrap();
    let mut vf: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    let mut vb: serde_json::Value = serde_json::from_slice(&builtin.stdout).unwrap();
    vf["input"] = serde_json::Value::Null;
    vb["input"] = serde_json::Value::Null;
    assert_eq!(vf, vb);
}
