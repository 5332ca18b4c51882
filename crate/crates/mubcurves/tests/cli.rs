//! Black-box checks of the binary: output contracts, determinism, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mubcurves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn transform_prints_the_word() {
    assert_eq!(
        stdout(&["transform", "--src", "table1", "--dst", "table3"]),
        "1@z\n"
    );
    assert_eq!(
        stdout(&["transform", "--src", "table1", "--dst", "table1"]),
        "1@1\n"
    );
}

#[test]
fn curves_summary_line() {
    let text = stdout(&["curves"]);
    assert!(text.ends_with("15 structures: 5 rays, 7 regular, 3 exceptional\n"));
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn verify_passes_small_fields() {
    for n in ["1", "2"] {
        let text = stdout(&["verify", "--n", n]);
        assert!(text.contains("checks passed"), "n={n}: {text}");
        assert!(!text.contains("FAIL"), "n={n}: {text}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "--format", "json"][..],
        &["render", "--bundle", "table2", "--format", "svg"][..],
        &["curves", "--n", "3"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn render_draws_the_ray_grid() {
    let expected = concat!(
        " 3 | 5 4 3 2\n",
        " 2 | 5 3 2 4\n",
        " 1 | 5 2 4 3\n",
        " 0 | o 1 1 1\n",
        "   +--------\n",
        "     0 1 2 3\n",
    );
    assert_eq!(stdout(&["render", "--bundle", "table1"]), expected);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["curves", "--n", "9"][..],
        &["curves", "--n", "4"][..],
        &["render", "--bundle", "nonesuch"][..],
        &["render", "--bundle", "table1", "--format", "json"][..],
        &["transform", "--src", "table1", "--dst", "nonesuch"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
    }
}

#[test]
fn sampled_search_reaches_larger_fields() {
    let text = stdout(&[
        "curves",
        "--n",
        "4",
        "--sampled",
        "--samples",
        "300",
        "--seed",
        "7",
    ]);
    assert!(text.contains("(sampled, not exhaustive)"), "{text}");
    let summary = text.lines().last().unwrap();
    let count: usize = summary
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .expect("summary starts with the count");
    assert!(count > 50, "{summary}");
}

#[test]
fn json_shapes_hold() {
    let field: serde_json::Value =
        serde_json::from_str(&stdout(&["field", "--format", "json"])).expect("field json parses");
    assert_eq!(field["order"], 4);
    assert_eq!(field["self_dual"], true);
    assert_eq!(field["elements"].as_array().map(Vec::len), Some(4));

    let bundles: serde_json::Value =
        serde_json::from_str(&stdout(&["bundles", "--format", "json"])).expect("bundle json");
    let list = bundles.as_array().expect("array of bundles");
    assert_eq!(list.len(), 6);
    assert!(list
        .iter()
        .all(|b| b["curves"].as_array().map(Vec::len) == Some(5)));

    let checks: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--n", "1", "--format", "json"]))
            .expect("verify json");
    assert!(checks
        .as_array()
        .expect("array of checks")
        .iter()
        .all(|c| c["passed"] == true && c["name"].is_string()));
}

#[test]
fn out_flag_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("mubcurves-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.txt");
    let out = run(&["curves", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["curves"]));
    std::fs::remove_dir_all(&dir).unwrap();
}
