use std::path::PathBuf;
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn agtop(args: &[&str]) -> Output {
    agtop_env(args, &[])
}

fn agtop_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_agtop"));
    cmd.args(args).env_remove("AGTOP_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("agtop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_difference_table() {
    let o = agtop(&["check", golden("z3.agt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("left-invertive: OK"), "{out}");
    assert!(out.contains("left identities: {0}"), "{out}");
    assert!(out.contains("zero: none"), "{out}");
}

#[test]
fn check_left_zero_fails_with_witness() {
    let f = temp_file("lz.agt", "2\n0 0\n1 1\n");
    let o = agtop(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("left-invertive: FAIL at (0, 0, 1)"));
    let o = agtop(&["check", "--json", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["leftInvertive"]["witness"], serde_json::json!([0, 0, 1]));
}

#[test]
fn check_bad_entry_reports_line() {
    let f = temp_file("bad.agt", "# comment\n2\n0 1\n1 7\n");
    let o = agtop(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn ideals_of_z6_and_z3() {
    let o = agtop(&["ideals", "--kind=two-sided", golden("z6.agt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6, "{out}");
    let o = agtop(&["ideals", "--kind=bi", golden("z3.agt").to_str().unwrap()]);
    assert_eq!(stdout(&o), "bi-ideal: 1\n{0,1,2}\n");
    let o = agtop(&["ideals", "--kind=left", "--predicates", "--json", golden("z6.agt").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["members"].as_array().unwrap().iter().all(|m| m.get("quasiPrime").is_some()));
}

#[test]
fn ideals_gate_and_cap() {
    let f = temp_file("lz2.agt", "2\n0 0\n1 1\n");
    assert_eq!(code(&agtop(&["ideals", f.to_str().unwrap()])), 3);
    let z6 = golden("z6.agt");
    let o = agtop_env(&["ideals", z6.to_str().unwrap()], &[("AGTOP_MAX_N", "4")]);
    assert_eq!(code(&o), 5);
    let o = agtop_env(&["ideals", z6.to_str().unwrap()], &[("AGTOP_MAX_N", "6")]);
    assert_eq!(code(&o), 0);
}

#[test]
fn spectrum_matches_golden_json_and_dot() {
    let z6 = golden("z6.agt");
    let o = agtop(&["topology", "--space=spectrum", "--json", z6.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("z6_spectrum.json")).unwrap());
    let o = agtop(&["topology", "--space=spectrum", "--dot", z6.to_str().unwrap()]);
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("z6_spectrum.dot")).unwrap());
}

#[test]
fn topology_without_zero_is_a_result() {
    let o = agtop(&["topology", "--space=omega", golden("z3.agt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "not-applicable: no zero\n");
}

#[test]
fn omega_on_z6() {
    let o = agtop(&["topology", "--space=omega", "--json", golden("z6.agt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verifier"]["status"], "holds");
    assert_eq!(v["preservation"]["status"], "holds");
}

#[test]
fn enumerate_streams_and_caps() {
    let o = agtop(&["enumerate", "--order=1"]);
    assert_eq!(stdout(&o), "1\n0\n");
    let a = agtop(&["enumerate", "--order=3"]);
    let b = agtop(&["enumerate", "--order=3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let blocks = stdout(&a).split("---\n").count();
    let census = agtop(&["enumerate", "--order=3", "--census"]);
    let v: serde_json::Value = serde_json::from_slice(&census.stdout).unwrap();
    assert_eq!(v["total"].as_u64().unwrap() as usize, blocks);
    assert_eq!(code(&agtop(&["enumerate", "--order=9"])), 1);
    let o = agtop(&["enumerate", "--order=3", "--limit=2"]);
    assert_eq!(stdout(&o).split("---\n").count(), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&agtop(&["verify", "--claims=C99", "--order=2"])), 1);
    assert_eq!(code(&agtop(&["verify"])), 1);
    let o = agtop(&["verify", "--order=2", "--claims=C1,C2,C21,C24", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["corpusSize"], 6);
    assert_eq!(v["claims"]["C1"]["holds"], 6);
    assert_eq!(v["claims"].as_object().unwrap().len(), 4);
    let o = agtop(&["verify", golden("z6.agt").to_str().unwrap(), "--claims=C1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("C1: holds 1 violated 0"));
    // the literal permutation identity fails on (Z6, x)
    let o = agtop(&["verify", golden("z6.agt").to_str().unwrap(), "--claims=C3"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn canon_relabels() {
    let f = temp_file("swapped.agt", "2\n1 0\n0 1\n");
    let o = agtop(&["canon", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "2\n0 1\n1 0\n");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&agtop(&["bogus"])), 1);
    assert_eq!(code(&agtop(&["ideals", "--kind=sideways", "x.agt"])), 1);
    assert_eq!(code(&agtop(&["--help"])), 0);
}
