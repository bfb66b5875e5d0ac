use std::process::Command;

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_repring-a4")).args(args).output().expect("binary runs")
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["--max-n", "0"][..], &["--bogus"], &["--check", "lemma9"], &["--format", "xml"], &["--sweep", "1"]] {
        assert_eq!(cli(args).status.code(), Some(2), "{:?}", args);
    }
}

#[test]
fn json_is_byte_identical() {
    let args = ["--check", "theorem", "--check", "lemma2", "--format", "json", "--seed", "9"];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "repring-a4/1");
    assert_eq!(v["config"]["seed"], 9);
    assert_eq!(v["summary"]["pass"], 7);
    assert_eq!(v["results"][0]["check_id"], "lemma2.P0xP0");
}

#[test]
fn out_file_and_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let dumps = dir.path().join("reps");
    let o = cli(&[
        "--check",
        "audit",
        "--table-n",
        "1",
        "--max-n",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--dump-reps",
        dumps.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("repring-a4/1 seed=0"));
    assert!(text.contains("report        audit.y*z"));
    let gamma2 = std::fs::read_to_string(dumps.join("gamma2.txt")).unwrap();
    assert!(gamma2.starts_with("3 "));
    assert!(dumps.join("delta_g_-2.txt").exists());
}
