use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn slp_eval(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slp-eval"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// Writes a synthetic reference corpus plus a hypothesis file copied from its sentences.
fn fixture(dir: &Path, count: &str) -> (PathBuf, PathBuf) {
    let out = slp_eval(
        &["synth", "corpus", "--count", count, "--frames", "10", "--amplitude", "0.05", "--seed", "11", "--out", "ref"],
        dir,
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let manifest = dir.join("ref/manifest.tsv");
    let hyp = dir.join("hyp.txt");
    let lines: String = std::fs::read_to_string(&manifest)
        .unwrap()
        .lines()
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            format!("{}\t{}\n", f[0], f[2])
        })
        .collect();
    std::fs::write(&hyp, lines).unwrap();
    (manifest, hyp)
}

#[test]
fn self_evaluation_table() {
    let dir = tempfile::tempdir().unwrap();
    fixture(dir.path(), "5");
    let out = slp_eval(
        &["evaluate", "--pred", "ref/manifest.tsv", "--ref", "ref/manifest.tsv", "--hyp", "hyp.txt", "--format", "table"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(
        row[1..],
        ["100.00", "100.00", "100.00", "100.00", "100.00", "100.00", "0.00", "0.0000", "1.000"]
    );
}

#[test]
fn structured_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    fixture(dir.path(), "4");
    let base = slp_eval(&["synth", "baseline", "--ref", "ref/manifest.tsv", "--variant", "per-frame", "--out", "base"], dir.path());
    assert_eq!(code(&base), 0);
    for name in ["a.json", "b.json"] {
        let out = slp_eval(
            &[
                "evaluate", "--pred", "base/manifest.tsv", "--ref", "ref/manifest.tsv", "--hyp", "hyp.txt", "--out", name,
            ],
            dir.path(),
        );
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read_to_string(dir.path().join("a.json")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("b.json")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn static_baseline_scores_zero_travel() {
    let dir = tempfile::tempdir().unwrap();
    fixture(dir.path(), "4");
    assert_eq!(code(&slp_eval(&["synth", "baseline", "--ref", "ref/manifest.tsv", "--out", "base"], dir.path())), 0);
    let out = slp_eval(
        &["evaluate", "--pred", "base/manifest.tsv", "--ref", "ref/manifest.tsv", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[9], "0.000");
}

#[test]
fn validate_flags_missing_ids_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let (manifest, _) = fixture(dir.path(), "3");
    let text = std::fs::read_to_string(&manifest).unwrap();
    let partial: String = text.lines().take(2).map(|l| format!("{l}\n")).collect();
    std::fs::write(dir.path().join("ref/partial.tsv"), partial).unwrap();
    let out = slp_eval(
        &["validate", "--pred", "ref/partial.tsv", "--ref", "ref/manifest.tsv", "--phase", "dev", "--history", "h.log"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("seq002"), "{}", stdout(&out));
}

#[test]
fn test_phase_allows_three_recorded_submissions() {
    let dir = tempfile::tempdir().unwrap();
    fixture(dir.path(), "2");
    let run = |now: &str| {
        slp_eval(
            &[
                "validate", "--pred", "ref/manifest.tsv", "--ref", "ref/manifest.tsv", "--phase", "test", "--history",
                "h.log", "--record", "--now", now,
            ],
            dir.path(),
        )
    };
    for day in ["2026-06-01T10:00:00Z", "2026-06-02T10:00:00Z", "2026-06-03T10:00:00Z"] {
        assert_eq!(code(&run(day)), 0);
    }
    let fourth = run("2026-06-04T10:00:00Z");
    assert_eq!(code(&fourth), 1);
    assert!(stdout(&fourth).contains("quota"));
    assert_eq!(std::fs::read_to_string(dir.path().join("h.log")).unwrap().lines().count(), 3);
}

#[test]
fn rank_reads_evaluation_reports() {
    let dir = tempfile::tempdir().unwrap();
    fixture(dir.path(), "3");
    assert_eq!(code(&slp_eval(&["synth", "baseline", "--ref", "ref/manifest.tsv", "--out", "base"], dir.path())), 0);
    let gt = slp_eval(
        &[
            "evaluate", "--pred", "ref/manifest.tsv", "--ref", "ref/manifest.tsv", "--hyp", "hyp.txt", "--entrant", "gt",
            "--out", "gt.json",
        ],
        dir.path(),
    );
    assert_eq!(code(&gt), 0);
    let base = slp_eval(
        &[
            "evaluate", "--pred", "base/manifest.tsv", "--ref", "ref/manifest.tsv", "--hyp", "hyp.txt", "--entrant",
            "base", "--out", "base.json",
        ],
        dir.path(),
    );
    assert_eq!(code(&base), 0);
    let out = slp_eval(&["rank", "--scores", "gt.json", "base.json", "--out", "rank.json"], dir.path());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("rank.json")).unwrap()).unwrap();
    assert_eq!(report["fronts"], serde_json::json!([["gt"], ["base"]]));
}

#[test]
fn rank_orders_score_documents() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"[
        {"entrant": "strong", "metrics": {"BLEU-1": 30, "BLEU-2": 20, "BLEU-3": 10, "BLEU-4": 5, "CHRF": 30,
            "ROUGE": 30, "WER": 80, "DTW-MJE": 0.04, "Total Distance": 0.9}},
        {"entrant": "weak", "metrics": {"BLEU-1": 20, "BLEU-2": 10, "BLEU-3": 5, "BLEU-4": 2, "CHRF": 20,
            "ROUGE": 20, "WER": 100, "DTW-MJE": 0.05, "Total Distance": 0.5}}
    ]"#;
    std::fs::write(dir.path().join("scores.json"), doc).unwrap();
    let out = slp_eval(&["rank", "--scores", "scores.json"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("front 0: strong"), "{text}");
    assert!(text.contains("front 1: weak"), "{text}");
}

#[test]
fn hard_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = slp_eval(&["evaluate", "--pred", "nope.tsv", "--ref", "nope.tsv"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope.tsv"));
    let out = slp_eval(&["evaluate", "--pred", "a", "--ref", "b", "--format", "xml"], dir.path());
    assert_eq!(code(&out), 2);
    let out = slp_eval(&["synth", "corpus", "--count", "2", "--frames", "0", "--out", "x"], dir.path());
    assert_eq!(code(&out), 2);
}
