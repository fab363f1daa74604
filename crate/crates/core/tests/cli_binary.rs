use std::process::{Command, Output};

fn parastat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parastat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn full_verification_succeeds() {
    let out = parastat(&[
        "verify", "--all", "--m", "1", "--n", "1", "--p", "2", "--level", "5",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["passed"], true);
}

#[test]
fn defining_relations_on_the_largest_small_case() {
    let out = parastat(&[
        "verify",
        "--defining",
        "--m",
        "3",
        "--n",
        "3",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with('\n'));
}

#[test]
fn violations_exit_with_one() {
    let out = parastat(&[
        "verify", "--dual", "--m", "1", "--n", "1", "--level", "4", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(parastat(&["matrix", "f9+"]).status.code(), Some(2));
    assert_eq!(parastat(&["matrix", "--bogus"]).status.code(), Some(2));
    assert_eq!(parastat(&["basis", "--m", "0"]).status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let out = parastat(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    for cmd in ["basis", "matrix", "verify", "character", "gtable", "cgc"] {
        assert!(stdout(&out).contains(cmd), "missing subcommand {cmd}");
    }
}

#[test]
fn every_format_ends_with_a_newline() {
    for format in ["json", "csv", "text"] {
        let out = parastat(&[
            "basis", "--m", "1", "--n", "1", "--level", "2", "--format", format,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(
            text.ends_with('\n') && !text.ends_with("\n\n"),
            "{format}: {text:?}"
        );
    }
}

#[test]
fn matrix_json_lists_the_basis() {
    let out = parastat(&["matrix", "f1+", "--m", "1", "--n", "1", "--level", "1"]);
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["dimension"], 3);
    assert_eq!(body["basis"][0], "[0,0 | 0]");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    std::fs::write(&path, "m = 2\nn = 1\nlevel_cap = 1\nformat = \"csv\"\n").unwrap();
    let cfg = path.to_str().unwrap();

    let from_file = stdout(&parastat(&["--config", cfg, "basis"]));
    assert!(from_file.starts_with("index,pattern"));
    assert!(from_file.contains("[1,0,0 | 0,0 | 0]"));

    let overridden = stdout(&parastat(&["--config", cfg, "basis", "--m", "1"]));
    assert!(overridden.contains("[1,0 | 0]"));

    std::fs::write(&path, "bogus = 1\n").unwrap();
    assert_eq!(parastat(&["--config", cfg, "basis"]).status.code(), Some(2));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = parastat(&[
        "gtable",
        "--level",
        "1",
        "--format",
        "text",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("k=1"));
}

#[test]
fn cgc_trace_prints_factors() {
    let out = parastat(&["cgc", "1,0|0", "--j", "1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[1,0 | 0] -> [2,0 | 1]"));
    assert!(text.contains("value = 1/2√2"));
}
