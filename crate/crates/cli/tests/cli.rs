//! End-to-end checks of the command-line surface: flags, formats, exit
//! codes, determinism, and the enumeration guard override.

use std::process::{Command, Output};

fn cevian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cevian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cevian_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cevian"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn count_reports_the_median_example() {
    let out = cevian(&["count", "--equal", "2", "--oracle"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("d = 1 (geometric)"), "{text}");
    assert!(text.contains("triangles = 16"), "{text}");
    assert!(text.contains("oracle agrees: yes"), "{text}");
}

#[test]
fn count_inline_feet() {
    let out = cevian(&["count", "--a", "1/2", "--b", "1/2", "--c", "1/3", "--oracle"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("triangles = 17"), "{text}");
    assert!(text.contains("d = 0"), "{text}");
}

#[test]
fn count_json_schema() {
    let out = cevian(&["count", "--equal", "2", "--json", "--oracle"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    // counts are decimal strings so arbitrary precision survives JSON
    assert_eq!(value["a"], "1");
    assert_eq!(value["b"], "1");
    assert_eq!(value["c"], "1");
    assert_eq!(value["d"], "1");
    assert_eq!(value["d_provenance"], "geometric");
    assert_eq!(value["triangle_count"], "16");
    assert_eq!(value["oracle_count"], "16");
    assert_eq!(value["oracle_agrees"], true);
}

#[test]
fn count_json_without_oracle_omits_oracle_fields() {
    let out = cevian(&["count", "--equal", "3", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["triangle_count"], "72");
    assert!(value.get("oracle_count").is_none());
    assert!(value.get("oracle_agrees").is_none());
}

#[test]
fn config_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("medians.cfg");
    std::fs::write(&path, "feet_a = 1/2\nfeet_b = 1/2\nfeet_c = 1/2\n").unwrap();
    let out = cevian(&["count", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("triangles = 16"));

    // empty lists are a valid config: the bare triangle
    let bare = dir.path().join("bare.cfg");
    std::fs::write(&bare, "feet_a =\nfeet_b =\nfeet_c =\n").unwrap();
    let out = cevian(&["count", "--config", bare.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("triangles = 1"));
}

#[test]
fn validation_failures_exit_one() {
    // malformed foot
    let out = cevian(&["count", "--a", "3/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("strictly between 0 and 1"));

    // conflicting sources
    let out = cevian(&["count", "--equal", "2", "--a", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("exactly one config source"));

    // no source at all
    let out = cevian(&["count"]);
    assert_eq!(out.status.code(), Some(1));

    // malformed config file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cfg");
    std::fs::write(&path, "feet_a = fish\n").unwrap();
    let out = cevian(&["count", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // bad arguments are validation errors too
    let out = cevian(&["fan", "--apex", "1", "--parallel", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cevian(&["seq", "--name", "d-of-n", "--limit", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cevian(&["table", "--equal-range", "5", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn io_failures_exit_three() {
    let out = cevian(&["count", "--config", "/nonexistent/path.cfg"]);
    assert_eq!(out.status.code(), Some(3));

    let out = cevian(&["render", "--equal", "2", "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_required_args_exit_one() {
    let out = cevian(&["scan", "--p-max", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cevian(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = cevian(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("count"));
}

#[test]
fn seq_lines_and_json() {
    let out = cevian(&["seq", "--name", "d-of-n", "--limit", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1\n0\n7\n0\n13\n");

    let out = cevian(&["seq", "--name", "d-of-n", "--limit", "6", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["name"], "d-of-n");
    assert_eq!(value["start"], "2");
    assert_eq!(value["values"], serde_json::json!(["1", "0", "7", "0", "13"]));

    // 15 appears; no odd prime power does
    let out = cevian(&["seq", "--name", "odd-positive", "--limit", "15"]);
    assert_eq!(stdout_of(&out), "15\n");

    // the shortest valid sequence is the single median count
    let out = cevian(&["seq", "--name", "d-of-n", "--limit", "2"]);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn table_csv_rows() {
    let out = cevian(&["table", "--equal-range", "2", "9", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,triangles,closed_form,closed_form_matches");
    assert!(lines.contains(&"4,7,183,183,true"));
    assert!(lines.contains(&"6,13,698,,"));
    assert!(lines.contains(&"9,0,2565,2565,true"));
}

#[test]
fn table_json_marks_prime_powers() {
    let out = cevian(&["table", "--equal-range", "2", "6", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[2]["n"], "4");
    assert_eq!(rows[2]["closed_form_matches"], true);
    assert_eq!(rows[4]["n"], "6");
    assert!(rows[4].get("closed_form_count").is_none());
}

#[test]
fn scan_reports_members() {
    let out = cevian(&["scan", "--family", "1", "--p-max", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("p=2  n=6  companion=3  has_solution=true"), "{text}");

    let out = cevian(&["scan", "--family", "2", "--p-max", "5", "--count-all"]);
    let text = stdout_of(&out);
    assert!(text.contains("n=20") && text.contains("n=63") && text.contains("n=275"));
    assert!(text.contains("solutions=61"), "{text}");

    let out = cevian(&["scan", "--family", "3", "--p-max", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["count", "--equal", "4", "--json", "--oracle"],
        vec!["render", "--equal", "2", "--highlight", "all-triangles"],
        vec!["table", "--equal-range", "2", "8", "--format", "csv"],
        vec!["scan", "--family", "1", "--p-max", "7", "--count-all"],
    ] {
        let first = cevian(&args);
        let second = cevian(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("medians.svg");
    let out = cevian(&["render", "--equal", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    assert!(svg.contains("viewBox=\"0 0 1000 1000\""));
    assert_eq!(svg.matches("<line ").count(), 6);
    // centroid marker at the mapped (1/3, 1/3)
    assert!(svg.contains("<circle cx=\"353.333333\" cy=\"646.666667\""));

    // d=0 figures carry no markers
    let path9 = dir.path().join("nine.svg");
    cevian(&["render", "--equal", "3", "--out", path9.to_str().unwrap()]);
    let svg9 = std::fs::read_to_string(&path9).unwrap();
    assert_eq!(svg9.matches("<line ").count(), 9);
    assert_eq!(svg9.matches("<circle").count(), 0);
}

#[test]
fn render_grid_has_one_cell_per_triangle() {
    let out = cevian(&["render", "--equal", "2", "--highlight", "all-triangles"]);
    assert!(out.status.success());
    let svg = stdout_of(&out);
    assert_eq!(svg.matches("<polygon").count(), 16);
}

#[test]
fn render_triple_highlight() {
    // the outer triangle always works
    let out = cevian(&["render", "--equal", "2", "--highlight", "triple:AB,BC,CA"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).matches("<polygon").count(), 1);

    // numeric ids are accepted
    let out = cevian(&["render", "--equal", "2", "--highlight", "triple:0,1,2"]);
    assert!(out.status.success());

    // a concurrent triple is a validation error: the three medians
    let out = cevian(&["render", "--equal", "2", "--highlight", "triple:A0,B0,C0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("do not bound a triangle"));

    let out = cevian(&["render", "--equal", "2", "--highlight", "triple:A0,Z9,C0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn segment_guard_env_override() {
    // equal 3 has 9 segments; a lowered guard refuses enumeration
    let out = cevian_with_env(
        &["count", "--equal", "3", "--oracle"],
        "CEVIAN_MAX_SEGMENTS",
        "8",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("guard"), "{}", stderr_of(&out));

    // raising it back lets the run through
    let out = cevian_with_env(
        &["count", "--equal", "3", "--oracle"],
        "CEVIAN_MAX_SEGMENTS",
        "9",
    );
    assert!(out.status.success());

    // and the guard is a count-time concern only: without --oracle it never fires
    let out = cevian_with_env(&["count", "--equal", "3"], "CEVIAN_MAX_SEGMENTS", "8");
    assert!(out.status.success());

    // garbage values are validation errors
    let out = cevian_with_env(
        &["count", "--equal", "3", "--oracle"],
        "CEVIAN_MAX_SEGMENTS",
        "many",
    );
    assert_eq!(out.status.code(), Some(1));
}
