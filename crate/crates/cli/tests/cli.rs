use std::process::{Command, Output};

fn sievebench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sievebench"))
        .args(args)
        .output()
        .expect("spawn sievebench")
}

fn stdout(args: &[&str]) -> String {
    let out = sievebench(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn primes_identical_across_methods() {
    for limit in ["2", "97", "1330"] {
        let fabio = stdout(&["primes", "--limit", limit, "--method", "fabio"]);
        for m in ["eratosthenes", "euler", "oracle"] {
            assert_eq!(
                stdout(&["primes", "--limit", limit, "--method", m]),
                fabio,
                "{m} at {limit}"
            );
        }
    }
    let base = stdout(&["primes", "--limit", "50000", "--method", "oracle"]);
    for m in ["eratosthenes", "euler"] {
        assert_eq!(stdout(&["primes", "--limit", "50000", "--method", m]), base);
    }
    assert_ne!(
        stdout(&["primes", "--limit", "1331", "--method", "fabio"]),
        stdout(&["primes", "--limit", "1331", "--method", "oracle"])
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["compare", "--limit", "1000", "--format", "json"][..],
        &["table", "--count", "79"],
        &["verify", "--limit", "2000", "--format", "json"],
        &["replay", "--limit", "100", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn compare_defaults_to_1000() {
    let out = stdout(&["compare", "--format", "csv"]);
    assert!(out.contains("1000,eratosthenes,168,831,1549,718,86.40,1,true"));
    assert!(out.contains("1000,euler,168,831,831,0,0.00,11,true"));
}

#[test]
fn compare_json_includes_primes_on_request() {
    let plain: serde_json::Value =
        serde_json::from_str(&stdout(&["compare", "--limit", "30", "--format", "json"])).unwrap();
    assert!(plain["methods"][0].get("primes").is_none());
    let with: serde_json::Value = serde_json::from_str(&stdout(&[
        "compare",
        "--limit",
        "30",
        "--format",
        "json",
        "--include-primes",
    ]))
    .unwrap();
    assert_eq!(with["methods"][0]["primes"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_strict_names_1331() {
    let out = sievebench(&["verify", "--limit", "2000", "--strict"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("uncovered composites: 2 [1331, 1573]"));
    assert!(text.contains("first divergence: 1331"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("sievebench-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = sievebench(&[
        "table",
        "--count",
        "2",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "calculation,j,k,m,situation,start,step\n1,2,2,2,M<J*K,4,2\n2,3,3,6,M<J*K,9,6\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn diagnostics_are_one_line() {
    let out = sievebench(&["compare", "--limit", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err, "error: invalid bound 1: must be at least 2\n");
    assert!(out.stdout.is_empty());
}
