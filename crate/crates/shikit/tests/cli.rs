//! Command-line behavior: outputs, exit codes, file writing.

use std::process::Command;

fn shikit(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_shikit")).args(args).output().expect("run shikit")
}

#[test]
fn count_prints_the_number() {
    let out = shikit(&["count", "--family", "shi-a", "--n", "3", "--method", "geometric"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "16");

    let out = shikit(&["count", "--family", "shi-c", "--n", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "25");

    let out = shikit(&["count", "--family", "shi-a", "--n", "7", "--method", "combinatorial"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "262144");

    let out = shikit(&["count", "--family", "cox-a", "--n", "4", "--method", "geometric"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "24");
}

#[test]
fn usage_errors_exit_2() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["count", "--family", "shi-b", "--n", "3"],
        vec!["count", "--family", "shi-a"],
        vec!["invert", "--family", "shi-a", "--n", "3", "--sequence", "9,1,1"],
        vec!["invert", "--family", "shi-a", "--n", "4", "--sequence", "1,2"],
        vec!["plot", "--family", "shi-c", "--n", "3", "-o", "/tmp/shikit_bad_plot.svg"],
        vec!["regions", "--family", "shi-c", "--n", "2", "--copy", "1"],
        vec!["count", "--family", "shi-a", "--n", "3", "--method", "fast"],
        vec!["verify", "--suite", "everything", "--max-n", "2"],
    ];
    for args in cases {
        let out = shikit(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "`{}` should exit 2, stderr: {}",
            args.join(" "),
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn verify_exits_zero_when_green() {
    let out = shikit(&["verify", "--suite", "all", "--max-n", "3"]);
    assert!(
        out.status.success(),
        "verify all failed:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn bijection_table_matches_the_expected_sizes() {
    let out = shikit(&["bijection", "--family", "shi-a", "--n", "3", "--copy", "1"]);
    let records: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 16);

    let out = shikit(&["bijection", "--family", "shi-c", "--n", "1"]);
    let records: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let sequences: Vec<&str> =
        records.as_array().unwrap().iter().map(|r| r["sequence"].as_str().unwrap()).collect();
    assert_eq!(sequences, vec!["-1", "0", "1"]);
}

#[test]
fn stats_prints_coefficient_lists() {
    let out = shikit(&["stats", "--family", "shi-a", "--n", "2", "--statistic", "ceilings"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[2, 1]");
}

#[test]
fn invert_round_trips_the_worked_example() {
    let out = shikit(&["invert", "--family", "shi-a", "--n", "3", "--sequence", "2,4,2"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("copy=2;w=1,3,2;arcs=(1,2)"), "{text}");
}

#[test]
fn plot_writes_svg() {
    let path = std::env::temp_dir().join("shikit_cli_plot.svg");
    let out = shikit(&["plot", "--family", "shi-a", "--n", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("</svg>"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_shikit"))
            .args(["count", "--family", "shi-a", "--n", "6", "--method", "combinatorial"])
            .env("SHI_THREADS", threads)
            .output()
            .expect("run shikit")
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(String::from_utf8_lossy(&one.stdout).trim(), "16807");
}

#[test]
fn regions_json_round_trips() {
    let out = shikit(&["regions", "--family", "shi-a", "--n", "3", "--format", "json"]);
    let records: Vec<shikit::cli::RegionRecord> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(records.len(), 16);
    for r in &records {
        shikit::cli::validate_record(r).unwrap();
        assert!(r.sign_vector.is_some());
    }
}
