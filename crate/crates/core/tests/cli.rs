//! The installed binary, driven as a user would.

use std::process::Command;

use abelslab::report::Report;

fn abelslab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_abelslab")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

#[test]
fn steinberg_g2_passes() {
    let (code, stdout, _) = abelslab(&["verify", "steinberg", "--type", "G2", "--ring", "zmod:5"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| l.contains(" pass ")), "{stdout}");
}

#[test]
fn pi1_query() {
    let (code, stdout, _) = abelslab(&["verify", "complex", "--n", "4", "--ring", "zmod:2", "--check", "pi1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "simply connected: yes");
}

#[test]
fn char2_b3_is_a_usage_error() {
    let (code, _, stderr) = abelslab(&["verify", "steinberg", "--type", "B3", "--ring", "zmod:2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("characteristic 2"));
}

#[test]
fn reports_are_deterministic_and_merge() {
    let dir = std::env::temp_dir().join(format!("abelslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.join(format!("r{i}.json"))).collect();
    for p in &paths {
        let (code, ..) = abelslab(&["verify", "presentations", "--n", "4", "--ring", "zmod:2", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let reports: Vec<Report> =
        paths.iter().map(|p| serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()).collect();
    assert_eq!(reports[0].canonical_json(), reports[1].canonical_json());

    let merged = dir.join("merged.json");
    let (code, ..) = abelslab(&["report", "merge", paths[0].to_str().unwrap(), "--out", merged.to_str().unwrap()]);
    assert_eq!(code, 0);
    let m: Report = serde_json::from_str(&std::fs::read_to_string(&merged).unwrap()).unwrap();
    assert!(m.checks.iter().all(|c| c.id.starts_with("presentations/")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tsv_and_export() {
    let (code, stdout, _) = abelslab(&["verify", "forms", "--type", "C2", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("suite\tid\t"));
    let (code, stdout, _) = abelslab(&["export", "complex", "--n", "4", "--ring", "zmod:2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().filter(|l| l.starts_with("3 ")).count(), 64);
}

#[test]
fn bad_arguments() {
    assert_eq!(abelslab(&["verify", "complex", "--check", "pi2"]).0, 2);
    assert_eq!(abelslab(&["verify", "forms", "--max-cosets", "0"]).0, 2);
    assert_eq!(abelslab(&["report", "merge", "/nonexistent.json"]).0, 2);
}
