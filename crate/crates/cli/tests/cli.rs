//! End-to-end tests of the `whitebind` binary: exit codes, output formats,
//! batch processing, and certificate verification.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use whitebind::separability::{level_set, Limits};
use whitebind::word::{CyclicWord, Rank};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_whitebind"));
    cmd.env_remove("WHITEBIND_MAX_LEVEL_SET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn binds_exit_codes() {
    let out = run(&["binds", "ababbb", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "binds");

    let out = run(&["binds", "abab", "--rank", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "separable");

    let out = run(&["binds", "x1 X1", "--rank", "1"]);
    assert_eq!(code(&out), 1);

    let out = run(&["binds", "ab0c", "--rank", "3"]);
    assert_eq!(code(&out), 2);

    let out = run(&["binds", "abc", "--rank", "2"]);
    assert_eq!(code(&out), 2);

    let out = run(&["binds", "ababbb", "--rank", "2", "--max-moves", "3"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn binds_rank_inference() {
    // compact words imply rank = max letter index
    let out = run(&["binds", "ab"]);
    assert_eq!(code(&out), 1, "ab is primitive in the inferred F_2");

    let out = run(&["binds", "a"]);
    assert_eq!(code(&out), 0, "a binds the inferred F_1");

    // identity cannot determine a rank
    let out = run(&["binds", "aA"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn binds_json_and_oracle_cross_check() {
    let out = run(&[
        "binds",
        "ababbb",
        "--rank",
        "2",
        "--json",
        "--oracle-depth",
        "6",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "binds");
    assert_eq!(v["stats"]["minimal_length"], 4);

    let out = run(&["binds", "abab", "--rank", "2", "--oracle-depth", "6"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn wgraph_golden() {
    let out = run(&["wgraph", "aa", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "graph whitehead {\n  x1;\n  X1;\n  x2;\n  X2;\n  x1 -- X1;\n  x1 -- X1;\n}\n"
    );

    let out = run(&["wgraph", "aa", "--rank", "2", "--json"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"vertices":["x1","X1","x2","X2"],"edges":[["x1","X1"],["x1","X1"]]}"#
    );

    // parse failure
    let out = run(&["wgraph", "a1b", "--rank", "2"]);
    assert_eq!(code(&out), 2);
    // empty word has no Whitehead graph
    let out = run(&["wgraph", "aA", "--rank", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn minimize_reports_lengths() {
    let out = run(&["minimize", "ababbb", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("minimal word: aabb"));
    assert!(text.contains("length: 6 -> 4"));

    let out = run(&["minimize", "ababbb", "--rank", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["minimal"], "aabb");
    assert_eq!(v["original_length"], 6);
    assert_eq!(v["minimal_length"], 4);
}

#[test]
fn primitive_and_power_commands() {
    assert_eq!(code(&run(&["primitive", "ab", "--rank", "2"])), 0);
    assert_eq!(code(&run(&["primitive", "aabb", "--rank", "2"])), 1);

    let out = run(&["power-of-primitive", "abab", "--rank", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["power_of_primitive"], true);
    assert_eq!(v["exponent"], 2);

    assert_eq!(
        code(&run(&["power-of-primitive", "ababbb", "--rank", "2"])),
        1
    );
}

#[test]
fn basis_command() {
    let out = run(&["basis", "ab", "b", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("basis: true"));
    assert!(text.contains("witness:"));
    assert!(text.contains("right_mul"));

    let out = run(&["basis", "aa", "b", "--rank", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("basis: false"));

    // wrong arity is an input error
    let out = run(&["basis", "ab", "--rank", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn fills_up_command() {
    let out = run(&["fills-up", "ababbb", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("fills up: true"));
    assert!(text.contains("Lemma 1.4"));
    assert!(text.contains("SBKC"));

    let out = run(&["fills-up", "abab", "--rank", "2", "--json"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["fills_up"], false);
}

#[test]
fn verify_certificate_round_trip() {
    for word in ["abab", "ababbb", "abAB"] {
        let emitted = run(&["binds", word, "--rank", "2", "--json"]);
        let mut child = bin()
            .args(["verify-certificate", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(&emitted.stdout)
            .unwrap();
        let out = child.wait_with_output().unwrap();
        assert_eq!(out.status.code(), Some(0), "certificate for {word}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("certificate: ok"));
    }
}

#[test]
fn verify_certificate_rejects_tampering() {
    let emitted = run(&["binds", "ababbb", "--rank", "2", "--json"]);
    let json = stdout(&emitted);
    let tampered = json.replace("\"word\":\"ababbb\"", "\"word\":\"abab\"");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    std::fs::write(&path, tampered).unwrap();
    let out = run(&["verify-certificate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let out = run(&["verify-certificate", "/nonexistent/certificate.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn level_set_cap_env_var_applies() {
    // An exhausted-level-set certificate forces re-enumeration on verify;
    // a cap of 1 must abort it with the resource exit code.
    let seed = CyclicWord::parse("abAB", Rank::new(2).unwrap()).unwrap();
    let set = level_set(&seed, &Limits::default()).unwrap();
    let certificate = format!(
        "{{\"word\":\"abAB\",\"rank\":2,\"verdict\":\"binds\",\"certificate\":{{\"kind\":\"exhausted_level_set\",\"witness\":[],\"minimal_word\":\"abAB\",\"level_set_size\":{}}},\"stats\":{{\"minimal_length\":4,\"level_set_size\":{},\"fast_path\":false}}}}",
        set.len(),
        set.len()
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exhausted.json");
    std::fs::write(&path, &certificate).unwrap();

    let out = run(&["verify-certificate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "full enumeration verifies");

    let out = bin()
        .env("WHITEBIND_MAX_LEVEL_SET", "1")
        .args(["verify-certificate", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "cap of 1 hits the resource limit"
    );

    // the explicit flag overrides the environment again
    let out = bin()
        .env("WHITEBIND_MAX_LEVEL_SET", "1")
        .args([
            "verify-certificate",
            path.to_str().unwrap(),
            "--max-level-set",
            "1000000",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn batch_preserves_order_and_isolates_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.jsonl");
    std::fs::write(
        &path,
        concat!(
            "{\"word\":\"ababbb\",\"rank\":2}\n",
            "{\"word\":\"abab\",\"rank\":2}\n",
            "{\"word\":\"zz9\",\"rank\":2}\n",
            "{\"word\":\"abab\",\"rank\":2,\"op\":\"power_of_primitive\"}\n",
            "{\"word\":\"ababbb\",\"rank\":2,\"op\":\"minimize\"}\n",
        ),
    )
    .unwrap();
    let out = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5, "one output line per input line");

    let first: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(first["verdict"], "binds");
    let second: serde_json::Value = serde_json::from_str(&lines[1]).unwrap();
    assert_eq!(second["verdict"], "separable");
    let third: serde_json::Value = serde_json::from_str(&lines[2]).unwrap();
    assert_eq!(third["line"], 3);
    assert!(third["error"].is_string());
    let fourth: serde_json::Value = serde_json::from_str(&lines[3]).unwrap();
    assert_eq!(fourth["power_of_primitive"], true);
    let fifth: serde_json::Value = serde_json::from_str(&lines[4]).unwrap();
    assert_eq!(fifth["minimal"], "aabb");

    let out = run(&["batch", "/nonexistent/batch.jsonl"]);
    assert_eq!(code(&out), 2);
}
