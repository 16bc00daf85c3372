//! End-to-end checks of the command-line interface and report format.

use std::process::Command;

fn liesym() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liesym"))
}

#[test]
fn verify_writes_a_deterministic_report() {
    let dir = std::env::temp_dir().join(format!("liesym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let r1 = dir.join("report1.jsonl");
    let r2 = dir.join("report2.jsonl");
    for path in [&r1, &r2] {
        let out = liesym()
            .args([
                "verify",
                "furcate",
                "--seed",
                "42",
                "--jobs",
                "3",
                "--report",
            ])
            .arg(path)
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read_to_string(&r1).unwrap();
    let b = std::fs::read_to_string(&r2).unwrap();
    // byte-identical modulo wall-clock timings
    let strip = |s: &str| -> Vec<serde_json::Value> {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("millis");
                v
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
    // records carry the expected fields
    let first: serde_json::Value = serde_json::from_str(a.lines().next().unwrap()).unwrap();
    for field in ["suite", "entry", "check", "status", "detail", "millis", "seed"] {
        assert!(first.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(first["seed"], 42);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn classify_c_reports_an_empty_diff() {
    let out = liesym().args(["classify", "c"]).output().expect("binary runs");
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("diff against the catalog: empty"), "{stdout}");
}

#[test]
fn bracket_table_prints_the_relations() {
    let out = liesym().arg("bracket-table").output().expect("binary runs");
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().count(), 14);
    assert!(stdout.contains("[Z^x, R]"));
}

#[test]
fn dump_catalog_emits_valid_json() {
    let out = liesym()
        .args(["dump", "catalog", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert!(v["entries"].as_array().unwrap().len() >= 20);
    assert!(v["reductions"].as_array().unwrap().len() == 14);
    assert!(v["edges"].as_array().unwrap().len() == 7);
}

#[test]
fn unknown_suite_fails() {
    let out = liesym().args(["verify", "nonsense"]).output().expect("binary runs");
    assert!(!out.status.success());
}
