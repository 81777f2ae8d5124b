//! End-to-end checks of the command-line surface: every subcommand, both
//! output formats, the seed fallback, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_naryalg"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("naryalg-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn catalog_pipes_into_check() {
    let out = bin()
        .args(["catalog", "simple", "--arity", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("nary v1\narity 3\ndim 4\nsymmetry skew\n"));

    let file = write_temp("a4.nary", &text);
    let out = bin()
        .args(["check", "--identity", "filippov"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "PASS\n");
}

#[test]
fn witness_output_is_exact() {
    let file = write_temp(
        "broken.nary",
        "nary v1\narity 3\ndim 4\nsymmetry skew\n[1 2 3] = 1*4\n[1 2 4] = 1*1\n",
    );
    let out = bin()
        .args(["check", "--identity", "filippov", "--format", "flat"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("result = witness"));
    assert!(text.contains("witness_tuple = 1 2 3 2 4"));
    assert!(text.contains("witness_defect = 0 0 0 -1"));
}

#[test]
fn sigma_twisted_checks_from_the_cli() {
    let out = bin()
        .args(["catalog", "matrix3", "--rows", "2", "--cols", "2"])
        .output()
        .unwrap();
    let file = write_temp("m22.nary", &stdout(&out));
    let pass = bin()
        .args(["check", "--identity", "sigma-total", "--sigma", "3,2,1"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(pass.status.code(), Some(0));
    let fail = bin()
        .args(["check", "--identity", "sigma-total", "--sigma", "1,2,3"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    // missing --sigma is a usage error
    let usage = bin()
        .args(["check", "--identity", "sigma-total"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn unknown_identity_and_unknown_catalog_are_usage_errors() {
    let file = write_temp("ab.nary", "nary v1\narity 3\ndim 3\nsymmetry skew\n");
    let out = bin()
        .args(["check", "--identity", "frobnicate"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["catalog", "nonesuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["catalog", "counterexample", "--arity", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = bin()
        .args(["check", "--identity", "filippov", "/nonexistent/x.nary"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mc_command_matches_sh_jacobi() {
    let good = bin()
        .args(["catalog", "filiform5", "--a", "1", "--b", "2"])
        .output()
        .unwrap();
    let file = write_temp("f5.nary", &stdout(&good));
    let out = bin().arg("mc").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let broken = write_temp(
        "f5broken.nary",
        &(stdout(&good) + "[1 2 3] = 1*1\n[1 2 5] = 1*1\n"),
    );
    let mc = bin()
        .args(["mc", "--format", "flat"])
        .arg(&broken)
        .output()
        .unwrap();
    assert_eq!(mc.status.code(), Some(1));
    assert!(stdout(&mc).contains("result = witness"));
    let sh = bin()
        .args(["check", "--identity", "sh-jacobi"])
        .arg(&broken)
        .output()
        .unwrap();
    assert_eq!(sh.status.code(), Some(1));
}

#[test]
fn groupalg_commands() {
    let out = bin()
        .args(["groupalg", "wv", "--arity", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "alpha = 5\n");

    let out = bin()
        .args(["groupalg", "colored", "--alpha", "2", "--beta", "-1", "--gamma", "1/2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "scalar = 3/2\n");

    let out = bin()
        .args(["groupalg", "wv", "--arity", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_rejects_non_skew_input() {
    let out = bin()
        .args(["catalog", "matrix3-plain", "--dim", "2"])
        .output()
        .unwrap();
    let file = write_temp("plain.nary", &stdout(&out));
    let analyze = bin().arg("analyze").arg(&file).output().unwrap();
    assert_eq!(analyze.status.code(), Some(2));
}

#[test]
fn seed_env_var_is_honored() {
    let out = bin()
        .args(["catalog", "filiform", "--arity", "3", "--dim", "6"])
        .output()
        .unwrap();
    let file = write_temp("model6.nary", &stdout(&out));
    let with_flag = bin()
        .args(["analyze", "--format", "flat", "--seed", "5"])
        .arg(&file)
        .output()
        .unwrap();
    let with_env = bin()
        .args(["analyze", "--format", "flat"])
        .env("NARYALG_SEED", "5")
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(with_flag.stdout, with_env.stdout);
}

#[test]
fn human_and_flat_formats_agree_on_the_verdict() {
    let out = bin()
        .args(["catalog", "jr", "--vars", "2", "--r", "5"])
        .output()
        .unwrap();
    let file = write_temp("jr.nary", &stdout(&out));
    for fmt in ["human", "flat"] {
        let r = bin()
            .args(["check", "--identity", "n-leibniz", "--format", fmt])
            .arg(&file)
            .output()
            .unwrap();
        assert_eq!(r.status.code(), Some(0), "format {fmt}");
    }
}
