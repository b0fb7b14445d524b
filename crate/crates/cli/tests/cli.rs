use std::io::Write;
use std::process::{Command, Output};

fn plucker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plucker")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_gb_quadrics_revlex_passes() {
    let o = plucker(&["verify", "gb-quadrics", "--order", "revlex", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS gb-quadrics n=5"));
}

#[test]
fn counts() {
    let o = plucker(&["count", "perfect", "--n", "5"]);
    assert_eq!(stdout(&o).trim(), "5");
    let o = plucker(&["count", "gorenstein", "--n", "6"]);
    assert_eq!(stdout(&o).trim(), "13");
    let o = plucker(&["count", "arcs", "--n", "7"]);
    assert_eq!(stdout(&o).trim(), "42");
    let o = plucker(&["--format", "json", "count", "gorenstein", "--n", "10"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "610");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(plucker(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(plucker(&["verify", "gb-quadrics"]).status.code(), Some(2));
    assert_eq!(plucker(&["verify", "no-such-check", "--n", "5"]).status.code(), Some(2));
    assert_eq!(plucker(&["count", "perfect", "--n", "5", "--bogus"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3_with_partial_report() {
    let o = Command::new(env!("CARGO_BIN_EXE_plucker"))
        .args(["--format", "json", "run-all", "--max-n", "6"])
        .env("PLUCKER_SPAIR_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert!(v["aborted"].as_str().unwrap().contains("budget"));
}

#[test]
fn out_of_range_is_skipped_and_not_a_pass() {
    let o = plucker(&["verify", "gb-appendix", "--n", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("SKIP"));
}

#[test]
fn json_report_fields() {
    let o = plucker(&["--format", "json", "--seed", "7", "verify", "sydney", "--n", "6", "--samples", "500"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    let r = &v["records"][0];
    assert_eq!(r["check"], "sydney");
    assert_eq!(r["n"], 6);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["parameters"]["mode"], "sampled");
}

#[test]
fn same_seed_same_report() {
    let run = || {
        let o = plucker(&["--format", "json", "verify", "gb-quadrics", "--order", "lex", "--n", "6"]);
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["records"][0]["wall_ms"] = 0.into();
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn run_all_to_six_passes() {
    let o = plucker(&["run-all", "--max-n", "6"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    assert!(out.contains("0 failed"));
}

#[test]
fn quadric_sign_mutation_is_caught() {
    let o = plucker(&["--mutate-quadric-sign", "run-all", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    for check in ["oracle", "gb-quadrics", "gb-appendix", "elimination", "asl-basis"] {
        assert!(out.contains(&format!("FAIL {check} ")), "{check} not caught:\n{out}");
    }
}

#[test]
fn show_commands() {
    let o = plucker(&["show", "fundamental-chain", "--n", "5"]);
    assert_eq!(stdout(&o).trim(), "12,13,14,15,25,35,45");

    let o = plucker(&["show", "join-irreducibles", "--n", "4"]);
    assert_eq!(stdout(&o), "13,14,23,34\npure: true\n");

    let o = plucker(&["show", "graph", "--system", "[1,4][3,5]"]);
    assert!(stdout(&o).ends_with("# cliques [1,4][3,5]\n"));

    let o = plucker(&["show", "fundamental-chain", "--system", "[1,3][4,5]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn show_reads_sublattice_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "n: 5\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n3 5\n4 5").unwrap();
    let path = f.path().to_str().unwrap();
    let o = plucker(&["show", "graph", "--file", path]);
    assert!(stdout(&o).contains("# cliques [1,4][3,5]"));
    let o = plucker(&["--format", "json", "show", "join-irreducibles", "--file", path]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pure"], true);
}

#[test]
fn gb_of_ideal_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "order: lex vars=[x[1],x[2],x[3]]").unwrap();
    writeln!(f, "x[2] - x[1]^2").unwrap();
    writeln!(f, "x[3] - x[1]^3").unwrap();
    let o = plucker(&["gb", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("order: lex"));
    // Twisted cubic, x[1] largest.
    let basis: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(basis, ["-x[2] + x[1]^2", "-x[3] + x[1]*x[2]", "-x[2]^2 + x[1]*x[3]", "-x[3]^2 + x[2]^3"]);
}
