use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nc-cayley"))
        .args(args)
        .env_remove("NC_CAYLEY_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(args: &[&str], expected: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), fs::read_to_string(fixture(expected)).unwrap(), "{args:?}");
}

#[test]
fn golden_outputs() {
    let g2 = fixture("generic2.json");
    let g2 = g2.to_str().unwrap();
    golden(&["charpoly", g2], "charpoly_generic2.txt");
    golden(&["preadjoint", g2], "preadjoint_generic2.txt");
    golden(&["verify", "thm22", g2], "verify_thm22_generic2.txt");
    golden(
        &["verify", "thm31", fixture("u2_random2.json").to_str().unwrap()],
        "verify_thm31_u2.txt",
    );
    golden(
        &["verify", "invariance", fixture("commutative_conj.json").to_str().unwrap()],
        "verify_invariance_commutative.json",
    );
    golden(
        &["ideal-membership", "--expr", "[x1,x2]*[x3,x4]*x1 - x1*[x1,x2]*[x3,x4]"],
        "ideal_membership.txt",
    );
}

#[test]
fn gen_is_reproducible() {
    let a = run(&["gen", "random", "--ring", "grassmann", "--n", "2", "--seed", "4"]);
    assert_eq!(stdout(&a), fs::read_to_string(fixture("grassmann2.json")).unwrap());
    let b = run(&["gen", "generic", "--n", "2"]);
    assert_eq!(stdout(&b), fs::read_to_string(fixture("generic2.json")).unwrap());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let g = fixture("grassmann2.json");
    let args = ["--json", "verify", "sandwich-product", g.to_str().unwrap()];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn exit_codes() {
    let g2 = fixture("generic2.json");
    let g2 = g2.to_str().unwrap();
    assert_eq!(run(&["verify", "thm22", g2]).status.code(), Some(0));
    // corrupting lambda_0 must be reported as a violation
    let bad = run(&["verify", "thm22", "--perturb-lambda", g2]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("verdict: violated"));
    // the sandwich identity does not hold over a free algebra
    assert_eq!(run(&["verify", "thm31", g2]).status.code(), Some(1));
    assert_eq!(run(&["ideal-membership", "--expr", "x1*x2*x3*x4"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "prop21", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "prop21", "--perturb-lambda", g2]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    fs::write(
        &path,
        r#"{"ring":{"kind":"free-algebra","generator_count":2},"n":2,"entries":[["x1","x2"],["x2","x1 +"]]}"#,
    )
    .unwrap();
    let out = run(&["charpoly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("entries[1][1]") && err.contains("byte 4"), "{err}");

    fs::write(&path, "{not json").unwrap();
    assert_eq!(run(&["charpoly", path.to_str().unwrap()]).status.code(), Some(2));

    fs::write(
        &path,
        r#"{"ring":{"kind":"rational"},"n":1,"entries":[["u(1,2,3)"]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["charpoly", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn size_cap() {
    let out = run(&["gen", "generic", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let ok = run(&["--max-n", "5", "gen", "generic", "--n", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stderr).unwrap().contains("warning"));
    let env = Command::new(env!("CARGO_BIN_EXE_nc-cayley"))
        .args(["gen", "generic", "--n", "5"])
        .env("NC_CAYLEY_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
}

#[test]
fn json_output() {
    let g2 = fixture("generic2.json");
    let out = run(&["--json", "charpoly", g2.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lambda"][2], "2");
    assert_eq!(v["ring"]["kind"], "free-algebra");

    let certify = run(&["--json", "ideal-membership", g2.to_str().unwrap()]);
    assert_eq!(certify.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&certify.stdout).unwrap();
    assert_eq!(v["certified"], v["total"]);
}

#[test]
fn oracle_subcommand() {
    let out = run(&["oracle", "commutative", "--n", "3", "--trials", "10", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "commutative oracle n=3 seed=1: 10 trials, all agree\n");
}

#[test]
fn timing_only_on_request() {
    let g2 = fixture("generic2.json");
    assert!(!stdout(&run(&["verify", "prop21", g2.to_str().unwrap()])).contains("elapsed"));
    assert!(stdout(&run(&["--timing", "verify", "prop21", g2.to_str().unwrap()])).contains("elapsed"));
}
