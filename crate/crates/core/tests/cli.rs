use std::process::Command;

use dual_jacobsthal::Report;

fn nqverify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_nqverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn term_prints_canonical_quaternion() {
    let o = nqverify(&["term", "--kind", "JN3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 + 5i + 9j + 18k\n");
}

#[test]
fn negative_index_is_usage_error() {
    let o = nqverify(&["term", "--kind", "J3", "--n", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_identity_is_usage_error() {
    let o = nqverify(&["verify", "--identity", "T7_NOPE", "--max", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown identity"));
}

#[test]
fn full_json_sweep_has_no_failures() {
    let o = nqverify(&["verify", "--identity", "all", "--max", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.failures(), 0);
    assert_eq!(report.summary.len(), 22);
    assert_eq!(
        report.summary.values().map(|c| c.total).sum::<usize>(),
        report.results.len()
    );
}

#[test]
fn csv_to_file_with_thread_hint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_nqverify"))
        .args([
            "verify",
            "--identity",
            "t12",
            "--max",
            "12",
            "--pairs",
            "30",
            "--format",
            "csv",
        ])
        .arg("--out")
        .arg(&path)
        .env("NQ_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("identity,m,n,pass,lhs,rhs"));
    assert_eq!(text.lines().count(), 31);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.starts_with("T6_DOCAGNE,") && l.contains(",true,")));
}

#[test]
fn json_results_stable_across_runs() {
    let run = || {
        let o = nqverify(&[
            "verify",
            "--identity",
            "t1..t13",
            "--max",
            "15",
            "--format",
            "json",
        ]);
        Report::from_json(&stdout(&o))
            .unwrap()
            .to_json_without_meta()
            .unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn sum_and_example_commands() {
    let o = nqverify(&["sum", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 + 4i + 8j + 16k\n");

    let o = nqverify(&["example", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.example_steps.len(), 12);
}

#[test]
fn text_verify_flags_printed_deviations() {
    let o = nqverify(&["verify", "--identity", "t9", "--max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("T4_CONJPROD"));
    assert!(text.contains("0 + 4i + 4j + 8k"));
}
