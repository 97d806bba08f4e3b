use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kulideal")).args(args).current_dir(root()).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Byte comparison against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file instead.
fn golden(name: &str, args: &[&str]) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let actual = stdout(args);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(actual == expected, "{name} differs from the golden file; rerun with UPDATE_GOLDEN=1 to inspect");
}

#[test]
fn golden_dualnum_tables() {
    for p in ["2", "3"] {
        for report in ["krs", "hk"] {
            for (ext, flag) in [("json", "--json"), ("tsv", "--tsv")] {
                let name = format!("dualnum-p{p}-{report}-w8.{ext}");
                golden(&name, &["dualnum", "--p", p, "--report", report, "--window", "8", flag]);
            }
        }
        golden(&format!("dualnum-p{p}-chi-w6.txt"), &["dualnum", "--p", p, "--report", "chi", "--window", "6"]);
        golden(&format!("dualnum-p{p}-ab-w4.json"), &["dualnum", "--p", p, "--report", "ab", "--window", "4", "--json"]);
    }
}

#[test]
fn golden_algebra_reports() {
    for name in ["dual-numbers-p2", "gf3-c3", "gf2-klein-four"] {
        let path = format!("fixtures/algebras/{name}.json");
        golden(&format!("ideals-{name}.json"), &["ideals", &path, "--json"]);
    }
    for p in ["2", "3"] {
        golden(&format!("hh-dual-numbers-p{p}.tsv"), &["hh", &format!("builtin:dual-numbers-p{p}"), "--l-max", "6", "--tsv"]);
    }
    golden("fingerprint-c3-m2.txt", &["fingerprint", "builtin:gf3-c3", "fixtures/algebras/gf3-c3.json"]);
}

#[test]
fn golden_orbit_reports() {
    for p in ["2", "3"] {
        let path = format!("fixtures/orbit/dual-numbers-p{p}.json");
        golden(&format!("orbit-p{p}-cy.txt"), &["orbit", &path, "--report", "cy", "-D", "4"]);
        golden(&format!("orbit-p{p}-center-neg.tsv"), &["orbit", &path, "--sigma", "neg", "--report", "center", "--tsv"]);
    }
}

#[test]
fn builtin_and_file_inputs_agree() {
    for name in ["dual-numbers-p3", "m2-gf2", "three-dim-local-p2"] {
        let a = stdout(&["ideals", &format!("builtin:{name}"), "--json"]);
        let b = stdout(&["ideals", &format!("fixtures/algebras/{name}.json"), "--json"]);
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["dualnum", "--p", "3", "--report", "all", "--window", "6", "--json"];
    let one = Command::new(env!("CARGO_BIN_EXE_kulideal")).args(args).env("KUL_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_kulideal")).args(args).env("KUL_THREADS", "4").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn selftest_passes_with_the_default_seed() {
    let out = stdout(&["selftest"]);
    assert!(out.contains(", 0 failed"), "{out}");
    assert!(!out.contains("FAIL"), "{out}");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("kulideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"p\": 2, \"dim\": 2").unwrap();
    let bad_form = dir.join("bad-form.json");
    std::fs::write(
        &bad_form,
        r#"{"p":2,"dim":2,"labels":["1","x"],"unit":[1,0],"table":[[[1,0],[0,1]],[[0,1],[0,0]]],"form":[[1,0],[0,1]]}"#,
    )
    .unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["ideals".into(), bad.display().to_string()],
        vec!["ideals".into(), "does/not/exist.json".into()],
        vec!["ideals".into(), "builtin:nope".into()],
        vec!["hh".into(), bad_form.display().to_string()],
        vec!["orbit".into(), bad.display().to_string()],
        vec!["orbit".into(), "fixtures/orbit/dual-numbers-p2.json".into(), "--sigma".into(), "nope".into()],
        vec!["dualnum".into(), "--p".into(), "4".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn unusable_arguments_are_rejected_by_the_parser() {
    assert_eq!(run(&["dualnum", "--window", "many"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn small_windows_still_succeed() {
    for w in ["1", "2"] {
        let out = stdout(&["dualnum", "--p", "2", "--window", w]);
        assert!(!out.is_empty());
    }
}

#[test]
fn json_and_tsv_are_well_formed() {
    let json = stdout(&["dualnum", "--p", "2", "--report", "all", "--window", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["p"], 2);
    let tsv = stdout(&["dualnum", "--p", "3", "--report", "all", "--window", "5", "--tsv"]);
    for section in tsv.split("\n\n") {
        let mut lines = section.lines();
        let width = lines.next().expect("header").split('\t').count();
        assert!(lines.all(|l| l.split('\t').count() == width), "{section}");
    }
}
