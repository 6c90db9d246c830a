use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fracdom"));
    cmd.env_remove("FRACDOM_ORACLE_LIMIT");
    cmd
}

/// A scratch directory private to one test.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fracdom-cli-{}-{test}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn cycle_edges(n: usize) -> String {
    (0..n).map(|i| format!("{} {}\n", i, (i + 1) % n)).collect()
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

#[test]
fn classify_examples() {
    let dir = scratch("classify");
    let c4 = write(&dir, "c4.txt", &cycle_edges(4));
    let (code, out, _) = run(bin().arg("classify").arg(&c4));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "FdTwo");
    assert_eq!(v["reason"], "c4-component");

    let c7 = write(&dir, "c7.txt", &cycle_edges(7));
    let (code, out, _) = run(bin().args(["classify", "--certify"]).arg(&c7));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "FdAboveTwo");
    assert_eq!(v["certificate"]["value"], "7/3");

    let single = write(&dir, "one.txt", "n 1\n");
    let (code, out, _) = run(bin().arg("classify").arg(&single));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["verdict"], "FdOne");
}

#[test]
fn classify_input_errors() {
    let dir = scratch("classify-errors");
    let bad = write(&dir, "bad.txt", "0 x\n");
    assert_eq!(run(bin().arg("classify").arg(&bad)).0, 2);
    let empty = write(&dir, "empty.txt", "n 0\n");
    assert_eq!(run(bin().arg("classify").arg(&empty)).0, 2);
    assert_eq!(run(bin().arg("classify").arg(dir.join("missing.txt"))).0, 2);
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = scratch("round-trip");
    let graphs = [
        ("k23.txt", "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n".to_string()),
        ("c8.txt", cycle_edges(8)),
        // two triangles joined by a path of length 2
        ("dumbbell.txt", "0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4\n".to_string()),
        ("k5.g6", "D~{\n".to_string()),
    ];
    for (name, text) in graphs {
        let g = write(&dir, name, &text);
        let (code, out, err) = run(bin().args(["classify", "--certify"]).arg(&g));
        assert_eq!(code, 0, "{name}: {err}");
        let cert = write(&dir, &format!("{name}.json"), &out);
        let (code, _, err) = run(bin().arg("verify").arg(&cert).arg(&g));
        assert_eq!(code, 0, "{name}: {err}");
    }
}

#[test]
fn fd_examples() {
    let dir = scratch("fd");
    for (n, want) in [(5, "5/2"), (3, "3"), (4, "2")] {
        let g = write(&dir, &format!("c{n}.txt"), &cycle_edges(n));
        let (code, out, _) = run(bin().arg("fd").arg(&g));
        assert_eq!(code, 0);
        let v = json(&out);
        assert_eq!(v["fd"], want, "C{n}");
        assert!(!v["weights"].as_array().unwrap().is_empty());
    }
}

#[test]
fn fd_limits() {
    let dir = scratch("fd-limits");
    let c13 = write(&dir, "c13.txt", &cycle_edges(13));
    assert_eq!(run(bin().arg("fd").arg(&c13)).0, 2);
    let (code, out, _) = run(bin().args(["fd", "--limit", "13"]).arg(&c13));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["fd"], "13/5");
    assert_eq!(run(bin().args(["fd", "--limit", "17"]).arg(&c13)).0, 2);

    let c5 = write(&dir, "c5.txt", &cycle_edges(5));
    assert_eq!(run(bin().arg("fd").arg(&c5).env("FRACDOM_ORACLE_LIMIT", "4")).0, 2);
    assert_eq!(run(bin().arg("fd").arg(&c5).env("FRACDOM_ORACLE_LIMIT", "5")).0, 0);
}

#[test]
fn verify_five_cycle_certificates() {
    let dir = scratch("verify");
    let c5 = write(&dir, "c5.txt", &cycle_edges(5));
    let sets = "[[0,2],[1,3],[2,4],[0,3],[1,4]]";
    let good = write(&dir, "good.json", &format!(r#"{{"k":5,"s":2,"sets":{sets},"value":"5/2"}}"#));
    assert_eq!(run(bin().arg("verify").arg(&good).arg(&c5)).0, 0);

    let tight = write(&dir, "tight.json", &format!(r#"{{"k":5,"s":1,"sets":{sets},"value":"5"}}"#));
    let (code, _, err) = run(bin().arg("verify").arg(&tight).arg(&c5));
    assert_eq!(code, 1);
    assert!(err.contains("vertex 0 covered 2 > 1"), "{err}");

    let range = write(
        &dir,
        "range.json",
        r#"{"k":5,"s":2,"sets":[[0,9],[1,3],[2,4],[0,3],[1,4]],"value":"5/2"}"#,
    );
    assert_eq!(run(bin().arg("verify").arg(&range).arg(&c5)).0, 2);
    let junk = write(&dir, "junk.json", "{");
    assert_eq!(run(bin().arg("verify").arg(&junk).arg(&c5)).0, 2);
}

#[test]
fn decompose_examples() {
    let dir = scratch("decompose");
    // two 4-cycles joined by the handle 3-4
    let db = write(&dir, "db.txt", "0 1\n1 2\n2 3\n3 0\n3 4\n4 5\n5 6\n6 7\n7 4\n");
    let (code, out, _) = run(bin().arg("decompose").arg(&db));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["variant"], "Dumbbell");
    assert_eq!(v["handle"].as_array().unwrap().len(), 2);

    let k4 = write(&dir, "k4.g6", "C~\n");
    let (code, out, _) = run(bin().arg("decompose").arg(&k4));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["variant"], "TwoConnected");

    let path = write(&dir, "p4.txt", "0 1\n1 2\n2 3\n");
    assert_eq!(run(bin().arg("decompose").arg(&path)).0, 2);
    let split = write(&dir, "split.txt", &format!("{}3 4\n4 5\n5 3\n", cycle_edges(3)));
    assert_eq!(run(bin().arg("decompose").arg(&split)).0, 2);
}

fn scan_lines(out: &str) -> (Vec<Value>, Value) {
    let mut lines: Vec<Value> = out.lines().map(json).collect();
    let footer = lines.pop().unwrap();
    assert_eq!(footer["summary"], true);
    (lines, footer)
}

#[test]
fn scan_exhaustive() {
    let (code, out, _) = run(bin().args(["scan", "--source", "exhaustive", "--max-n", "5"]));
    assert_eq!(code, 0);
    let (records, footer) = scan_lines(&out);
    // labeled graphs on 1..=5 vertices
    assert_eq!(records.len(), 1 + 2 + 8 + 64 + 1024);
    assert!(footer["flagged"].as_array().unwrap().is_empty());
    assert_eq!(footer["skipped"], 0);
    assert_eq!(run(bin().args(["scan", "--source", "exhaustive", "--max-n", "7"])).0, 2);
}

#[test]
fn scan_cycle_file() {
    let dir = scratch("scan-file");
    // graph6 strings of C3..C12, built by hand from the upper triangle
    let mut text = String::new();
    for n in 3..=12usize {
        let mut bits = Vec::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(v == u + 1 || (u == 0 && v == n - 1));
            }
        }
        let mut s = vec![n as u8 + 63];
        for chunk in bits.chunks(6) {
            let b = chunk.iter().enumerate().fold(0u8, |acc, (i, &x)| acc | (u8::from(x) << (5 - i)));
            s.push(b + 63);
        }
        text.push_str(std::str::from_utf8(&s).unwrap());
        text.push('\n');
    }
    let f = write(&dir, "cycles.g6", &text);
    let (code, out, _) = run(bin().args(["scan", "--source", "file", "--file"]).arg(&f));
    assert_eq!(code, 0);
    let (records, footer) = scan_lines(&out);
    assert_eq!(records.len(), 10);
    assert_eq!(footer["min_above_two"], "7/3");
    assert_eq!(footer["min_witnesses"], serde_json::json!([4]));
    assert_eq!(run(bin().args(["scan", "--source", "file"])).0, 2);
}

#[test]
fn scan_random_is_deterministic() {
    let args = ["scan", "--source", "random", "--max-n", "9", "--seed", "1", "--count", "40"];
    let (code, a, _) = run(bin().args(args));
    assert_eq!(code, 0);
    let (_, b, _) = run(bin().args(args));
    assert_eq!(a, b);
    let (records, footer) = scan_lines(&a);
    assert_eq!(records.len(), 40);
    assert!(footer["flagged"].as_array().unwrap().is_empty());
    let (_, c, _) = run(bin().args(["scan", "--source", "random", "--max-n", "9", "--seed", "2", "--count", "40"]));
    assert_ne!(a, c);
    assert_eq!(run(bin().args(["scan", "--source", "random", "--max-n", "13"])).0, 2);
}
