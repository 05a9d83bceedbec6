use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn anysort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anysort")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column(text: &str, c: usize) -> Vec<String> {
    text.lines().map(|l| l.split('\t').nth(c).unwrap().to_string()).collect()
}

#[test]
fn trace_prints_one_line_per_comparison() {
    let out = anysort(&["trace", "--algo", "multizip", "--list", "5,1,8,7,2,6,4,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().all(|l| l.split('\t').count() == 6));
    assert_eq!(column(&text, 5).last().unwrap(), "0");
}

#[test]
fn corsort_trace_errors() {
    let out = anysort(&["trace", "--algo", "corsort", "--list", "4,2,3,1,5"]);
    let text = stdout(&out);
    assert_eq!(column(&text, 5), ["6", "6", "2", "2", "2", "2", "0"]);
    assert!(column(&text, 4).iter().all(|s| s == "NA"));
    assert_eq!(column(&text, 0), ["1", "2", "3", "4", "5", "6", "7"]);

    let native = stdout(&anysort(&["trace", "--algo", "quicksort", "--list", "3,2,4,6,7,1,5", "--estimator", "native"]));
    assert!(column(&native, 5).iter().all(|s| s == "NA"));
    assert_eq!(column(&native, 4).last().unwrap(), "0");
}

#[test]
fn single_item_trace_is_empty() {
    let out = anysort(&["trace", "--algo", "quicksort", "--list", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_input_exits_with_one() {
    for args in [
        &["trace", "--algo", "quicksort", "--list", "1,2,2"][..],
        &["trace", "--algo", "quicksort", "--list", "1,x"],
        &["trace", "--algo", "bogosort", "--list", "1,2"],
        &["bench", "termination", "--algos", "corsort", "--n", "0"],
        &["bench", "profile", "--estimators", "median"],
        &["frobnicate"],
    ] {
        let out = anysort(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(anysort(&["--help"]).status.code(), Some(0));
}

fn termination(dir: &Path, name: &str, extra: &[&str]) -> (Output, String) {
    let path = dir.join(name);
    let mut args = vec!["bench", "termination", "--algos", "corsort", "--n", "8", "--trials", "10", "--seed", "1"];
    args.extend_from_slice(extra);
    args.extend(["--out", path.to_str().unwrap()]);
    let out = anysort(&args);
    let csv = fs::read_to_string(&path).unwrap_or_default();
    (out, csv)
}

#[test]
fn bench_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (out, a) = termination(dir.path(), "a.csv", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let (_, b) = termination(dir.path(), "b.csv", &[]);
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines[0], "algorithm,n,metric,k,median,q025,q975");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("corsort,8,overhead_pct,,"));
    let sidecar: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    assert_eq!(sidecar["config"]["seed"], 1);
}

#[test]
fn config_file_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("cfg.json");
    fs::write(&config, r#"{"sizes": [6, 7], "seed": 4}"#).unwrap();
    let (out, csv) = termination(dir.path(), "c.csv", &["--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sizes: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(sizes, ["6", "7"]);
    let sidecar: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
    assert_eq!(sidecar["config"]["seed"], 4);
    assert_eq!(sidecar["config"]["trials"], 10);

    fs::write(&config, r#"{"sizez": [6]}"#).unwrap();
    let (out, _) = termination(dir.path(), "d.csv", &["--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn profile_writes_requested_checkpoints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    let out = anysort(&[
        "bench", "profile", "--algos", "quicksort", "--n", "10", "--trials", "5", "--checkpoints", "4", "--at", "7",
        "--estimators", "native,rho", "--long", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.lines().any(|l| l.starts_with("quicksort,10,error_native,7,")));
    assert!(csv.lines().any(|l| l.starts_with("quicksort,10,error_rho,0,")));
    assert!(dir.path().join("p.long.csv").exists());
}

#[test]
fn unwritable_output_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = anysort(&[
        "bench", "termination", "--algos", "corsort", "--n", "4", "--trials", "2", "--out",
        blocker.join("t.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs_the_reference_checks() {
    let all = anysort(&["verify"]);
    assert_eq!(all.status.code(), Some(0));
    let text = stdout(&all);
    for id in ["fig1", "fig3", "fig4", "fig6"] {
        assert!(text.contains(id), "{text}");
    }
    let one = anysort(&["verify", "--only", "fig4"]);
    assert_eq!(one.status.code(), Some(0));
    assert!(stdout(&one).contains("fig4"));
    assert!(!stdout(&one).contains("fig1"));
    assert_eq!(anysort(&["verify", "--only", "fig9"]).status.code(), Some(1));
}
