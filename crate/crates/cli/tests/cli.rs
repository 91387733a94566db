//! End-to-end tests of the `parataxi` binary: output shapes and the
//! exit-code contract (0 success, 1 verification failure, 2 usage error,
//! 3 resource error).

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parataxi"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("JSON stdout")
}

#[test]
fn section_text_examples() {
    let out = run(&["section", "--radius", "9", "--intercept", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[-18,-12] ∪ [17,23]\n");
    let out = run(&["section", "--radius", "9", "--intercept", "-9"]);
    assert_eq!(stdout(&out), "[0,45]\n");
    let out = run(&["section", "--radius", "7", "--intercept", "4"]);
    assert_eq!(stdout(&out), "∅\n");
}

#[test]
fn section_oracle_check_agrees() {
    let out = run(&["section", "--radius", "12", "--intercept", "-4", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("oracle check: ok\n"));
}

#[test]
fn section_csv_and_json() {
    let out = run(&["section", "--radius", "9", "--intercept", "5", "--format", "csv"]);
    assert_eq!(stdout(&out), "9,5,-18,-12,17,23\n");
    let out = run(&["section", "--radius", "9", "--intercept", "5", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["r"], 9);
    assert_eq!(v["c"], 5);
    assert_eq!(v["parts"], serde_json::json!([[-18, -12], [17, 23]]));
    assert_eq!(v["point_count"], 14);
}

#[test]
fn ball_csv_reports_radius_13_count() {
    let out = run(&["ball", "--radius", "13"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1987);
    assert_eq!(text.lines().next(), Some("0,0,0"));
    assert!(stderr(&out).contains("1987 points"));
}

#[test]
fn ball_multi_center_is_diagonally_symmetric() {
    let out = run(&["ball", "--radius", "4", "--center", "3,-3", "--center", "-3,3"]);
    assert!(out.status.success());
    let points: std::collections::BTreeSet<(i64, i64, i64)> = stdout(&out)
        .lines()
        .map(|l| {
            let f: Vec<i64> = l.split(',').map(|t| t.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect();
    for &(x, y, d) in &points {
        assert!(points.contains(&(y, x, d)), "missing mirror of ({x},{y})");
    }
}

#[test]
fn ball_json_shape() {
    let out = run(&["ball", "--radius", "2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["radius"], 2);
    assert_eq!(v["centers"], serde_json::json!([[0, 0]]));
    assert_eq!(v["points"].as_array().unwrap().len(), 15);
    assert_eq!(v["summaries"][2]["ball_count"], 15);
    assert_eq!(v["summaries"][2]["boundary_count"], 10);
    assert_eq!(v["summaries"][0]["min_x"], 0);
}

#[test]
fn verify_passes_and_emits_json() {
    let out = run(&["verify", "--max-radius", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("ok\n"));
    let out = run(&["verify", "--max-radius", "8", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["r_max"], 8);
    assert_eq!(v["ok"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["checks_run"].as_u64().unwrap() > 0);
}

#[test]
fn sequences_csv_and_json() {
    let out = run(&["sequences", "--kind", "ball", "--max-radius", "5"]);
    assert_eq!(stdout(&out), "0,1\n1,5\n2,15\n3,37\n4,75\n5,135\n");
    let out = run(&["sequences", "--kind", "diam_sq", "--max-radius", "5", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["kind"], "diam_sq");
    assert_eq!(v["values"], serde_json::json!([0, 4, 26, 106, 306, 680]));
}

#[test]
fn chords_formats() {
    let out = run(&["chords", "--radius", "6", "--point", "-6,-6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2: 7"));
    assert!(text.contains("10: 4"));
    assert!(text.contains("total: 85"));
    let out = run(&["chords", "--radius", "6", "--point", "-6,-6", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().next(), Some("6,-6,-6,2,7"));
    let out = run(&["chords", "--radius", "6", "--point", "-6,-6", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["counts"]["2"], 7);
    assert_eq!(v["counts"]["10"], 4);
    assert_eq!(v["total"], 85);
}

#[test]
fn chords_with_diameter_flag() {
    let out = run(&["chords", "--radius", "2", "--point", "3,1", "--diameter", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["diameter"], 4);
    assert!(v["antipodes"].as_i64().unwrap() >= 0);
}

#[test]
fn parity_report_json() {
    let out = run(&["parity", "--radius", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["r"], 2);
    assert_eq!(v["all_even"], true);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ball", "--radius", "-1"][..],
        &["chords", "--radius", "6", "--point", "1,0"][..],
        &["chords", "--radius", "0", "--point", "0,0"][..],
        &["sequences", "--kind", "bogus", "--max-radius", "3"][..],
        &["sequences", "--kind", "ball", "--max-radius", "-1"][..],
        &["render", "--what", "ball"][..],
        &["render", "--what", "chords", "--radius", "6"][..],
        &["render", "--what", "parabolas", "--radius", "3"][..],
        &["render", "--what", "parabolas", "--box-lo", "4", "--box-hi", "-4"][..],
        &["section", "--radius", "9"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
    }
}

#[test]
fn memory_cap_exit_codes() {
    let out = bin()
        .args(["ball", "--radius", "13"])
        .env("PCM_MEM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"));

    let out = bin()
        .args(["ball", "--radius", "2"])
        .env("PCM_MEM_CAP", "banana")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Under verify, a blown budget is a recorded failure, not a crash.
    let out = bin()
        .args(["verify", "--max-radius", "13"])
        .env("PCM_MEM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL oracle"), "got: {text}");
}

#[test]
fn render_out_file_matches_stdout() {
    let dir = std::env::temp_dir().join("parataxi-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ball_r3.svg");
    let piped = run(&["render", "--what", "ball", "--radius", "3"]);
    assert!(piped.status.success());
    let out = run(&["render", "--what", "ball", "--radius", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}

#[test]
fn render_stairway_overlay_flags() {
    let out = run(&[
        "render",
        "--what",
        "parabolas",
        "--m-min",
        "0",
        "--m-max",
        "0",
        "--stairway-start",
        "0,0",
        "--stairway-first",
        "lp",
        "--stairway-steps",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("<polyline"));

    let out = run(&["render", "--what", "parabolas", "--stairway-start", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
}
