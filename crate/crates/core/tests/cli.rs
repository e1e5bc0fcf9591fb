use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn contracta(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_contracta"))
        .args(args)
        .env_remove("CONTRACTA_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

const PETERSEN: &str = "IheA@GUAo";
const K5_MINUS: &str = "D^{";
const C5: &str = "Dhc";

#[test]
fn analyze_emits_one_json_record_per_graph() {
    let out = contracta(&["analyze"], &format!("{PETERSEN}\n\n# comment\n{K5_MINUS}\n"));
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let lines: Vec<Value> = text(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["line"], 1);
    assert_eq!(lines[0]["kappa"], 3);
    assert_eq!(lines[0]["contractibleCount"], 0);
    assert_eq!(lines[0]["catalog"], "zero");
    assert_eq!(lines[0]["smallestCuts"].as_array().unwrap().len(), 10);
    assert_eq!(lines[1]["line"], 4);
    assert_eq!(lines[1]["contractibleCount"], 1);
    assert_eq!(lines[1]["catalog"], Value::Null);
    assert!(lines[1]["tags"].as_array().unwrap().contains(&Value::from("complete-minus-edge")));
}

#[test]
fn low_connectivity_is_reported_then_flagged() {
    let out = contracta(&["analyze", "--format", "csv"], &format!("{C5}\n{PETERSEN}\n"));
    assert_eq!(out.status.code(), Some(3));
    let stdout = text(&out.stdout);
    let rows: Vec<&str> = stdout.lines().collect();
    assert_eq!(rows[0], "line,g6,n,kappa,non_edges,contractible_count,tags,catalog,error");
    assert!(rows[1].starts_with("1,Dhc,5,2,"), "{}", rows[1]);
    assert!(rows[1].ends_with("kappa=2 < 3"));
    assert!(rows[2].starts_with(&format!("2,{PETERSEN},10,3,30,0,")));
}

#[test]
fn strict_mode_stops_at_first_low_connectivity() {
    let out = contracta(&["analyze", "--strict", "--format", "text"], &format!("{PETERSEN}\n{C5}\n{K5_MINUS}\n"));
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(text(&out.stdout).lines().count(), 1);
    assert!(text(&out.stderr).contains("line 2: kappa=2 < 3"));
}

#[test]
fn parse_errors_name_the_line_and_processing_continues() {
    let out = contracta(&["analyze"], &format!("{C5}\n!!bad\n{PETERSEN}\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("error: line 2:"), "{}", text(&out.stderr));
    assert_eq!(text(&out.stdout).lines().count(), 2);
}

#[test]
fn files_are_read_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.g6");
    let b = dir.path().join("b.g6");
    std::fs::write(&a, format!(">>graph6<<{K5_MINUS}\n")).unwrap();
    std::fs::write(&b, ":Fa@x^\nE~~w\n").unwrap();
    let out = contracta(&["analyze", "--format", "text", a.to_str().unwrap(), b.to_str().unwrap()], "");
    let stdout = text(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("contractible=1/1"));
    assert!(lines[1].contains("kappa=0 < 3"));
    assert!(lines[2].contains("tags=complete"));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(contracta(&["verify", "--n-max", "3"], "").status.code(), Some(1));
    assert_eq!(contracta(&["verify", "--n-max", "13"], "").status.code(), Some(1));
    assert_eq!(contracta(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(contracta(&["analyze", "/no/such/file.g6"], "").status.code(), Some(1));
    assert_eq!(contracta(&["analyze", "--threads", "0"], "").status.code(), Some(1));
    assert_eq!(contracta(&["--help"], "").status.code(), Some(0));
}

#[test]
fn verify_writes_report_and_catalogs() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let cats = dir.path().join("cats");
    let out = contracta(
        &[
            "verify",
            "--n-max",
            "7",
            "--threads",
            "2",
            "--out",
            report.to_str().unwrap(),
            "--catalog-dir",
            cats.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["schema"], "contracta/1");
    assert_eq!(json["graphsProcessed"], 1 + 3 + 17 + 136);
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
    assert!(text(&out.stdout).contains("fan-reduction"));
    let zero = std::fs::read_to_string(cats.join("zero-contractible.g6")).unwrap();
    let members: Vec<&str> = zero.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(members.len(), json["zeroCatalog"]["size"].as_u64().unwrap() as usize);
    assert!(cats.join("one-contractible.g6").exists());
}

#[test]
fn verify_without_out_prints_json_on_stdout() {
    let out = contracta(&["verify", "--n-max", "6", "--audit-max", "0"], "");
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&text(&out.stdout)).unwrap();
    assert_eq!(json["auditMax"], 0);
    assert!(text(&out.stderr).contains("graphs processed: 21"));
}

#[test]
fn catalog_derive_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = contracta(&["catalog", "derive", "--n-max", "7", "--out", dir.path().to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let zero = std::fs::read_to_string(dir.path().join("zero-contractible.g6")).unwrap();
    let graphs: Vec<&str> = zero.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(graphs.len(), 6);
    assert!(zero.starts_with("# n=6 kappa=3 contractible=0"));
}

#[test]
fn thread_env_var_is_honoured_and_output_stable() {
    let input: String =
        [PETERSEN, K5_MINUS, "E~~w", C5].iter().map(|s| format!("{s}\n")).collect::<String>().repeat(100);
    let one = contracta(&["analyze", "--threads", "1"], &input);
    let four = Command::new(env!("CARGO_BIN_EXE_contracta"))
        .args(["analyze"])
        .env("CONTRACTA_THREADS", "4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(input.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(text(&one.stdout).lines().count(), 400);
}
