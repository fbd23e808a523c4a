use std::io::Write;
use std::process::Command;

fn fpp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fpp"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn resolve_prints_the_chain() {
    let (code, out, _) = fpp(&["resolve", "1/7(1,5)"]);
    assert_eq!(code, 0);
    assert!(out.contains("chain = (-2)-(-2)-(-3)"));
    assert!(out.contains("discrepancy_square = -3/7"));
}

#[test]
fn adjunction_sums_discrepancies() {
    let (code, out, _) = fpp(&[
        "adjunction",
        "1/7(1,5)",
        "1/7(1,5)",
        "1/7(1,5)",
        "--resolution-k2",
        "0",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("k2_singular = 9/7"));
}

#[test]
fn lefschetz_structured_output() {
    let (code, out, _) = fpp(&["--format", "structured", "lefschetz", "3", "5/2", "9"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["solutions"], "(3,6)");
}

#[test]
fn fibers_subcommand() {
    let (code, out, _) = fpp(&[
        "fibers",
        "12",
        "8",
        "A2 x4",
        "--multisection",
        "deg=6,sq=-3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("count = 3"));
}

#[test]
fn scenario_list_and_run() {
    let (code, out, _) = fpp(&["scenario", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 10);
    let (code, out, _) = fpp(&["scenario", "run", "thm-main1-case1", "prop-lf-p3"]);
    assert_eq!(code, 0);
    assert!(out.contains("scenario thm-main1-case1 [PASS]"));
    assert!(out.contains("scenario prop-lf-p3 [PASS]"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = fpp(&["resolve", "1/4(1,2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("ParseError"));
    assert_eq!(fpp(&["no-such-command"]).0, 2);
    assert_eq!(fpp(&["scenario", "run", "no-such-scenario"]).0, 2);

    let dir = std::env::temp_dir().join(format!("fpp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let failing = dir.join("failing.toml");
    let mut f = std::fs::File::create(&failing).unwrap();
    writeln!(
        f,
        "name = \"failing\"\n[[step]]\nid = \"a\"\nop = \"resolve\"\nsingularity = \"1/3(1,2)\"\n\
         [[expect]]\nstep = \"a\"\nfield = \"determinant\"\nvalue = \"4\""
    )
    .unwrap();
    let (code, out, _) = fpp(&["scenario", "run", failing.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("expected 4, got 3"));

    let cover = dir.join("cover.toml");
    std::fs::write(
        &cover,
        "name = \"cover\"\n[[step]]\nid = \"x\"\nop = \"cover\"\ndegree = 3\nbranch = [0, 1, 2]\n\
         [step.base]\nK2 = \"3\"\ne = 9\nsingularities = [\"1/3(1,2)\", \"1/3(1,2)\", \"1/3(1,2)\"]\n\
         [[expect]]\nstep = \"x\"\nfield = \"resolution_e\"\nvalue = \"3\"\n",
    )
    .unwrap();
    assert_eq!(fpp(&["cover", cover.to_str().unwrap()]).0, 0);

    let bad = dir.join("bad.toml");
    std::fs::write(
        &bad,
        "name = \"bad\"\n[[step]]\nid = \"a\"\nop = \"qhpp\"\nledger = \"@later\"\n",
    )
    .unwrap();
    assert_eq!(fpp(&["scenario", "run", bad.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
