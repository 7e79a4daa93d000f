use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lap-perturb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coeffs_exact_line() {
    assert_eq!(
        stdout(&["coeffs", "-g", "example:e1", "-q", "1", "-K", "4", "--exact"]),
        "c2=2/1,c3=0/1,c4=-5/2\n"
    );
    assert_eq!(
        stdout(&["coeffs", "-g", "example:e1", "-q", "1", "-K", "4", "--json"]),
        "{\"q\":1,\"K\":4,\"c\":[\"2/1\",\"0/1\",\"-5/2\"]}\n"
    );
}

#[test]
fn euler_and_taylor() {
    assert_eq!(
        stdout(&["euler", "-g", "example:e2", "-q", "7", "-t", "-1", "-K", "30"]),
        "13.35139267\n"
    );
    assert_eq!(
        stdout(&["euler", "-g", "example:e1", "-q", "5", "-K", "5", "--exact"]),
        "19/8\n"
    );
    let all = stdout(&["taylor", "-g", "example:e1", "-q", "1", "-K", "4", "--exact", "--all"]);
    assert_eq!(all, "K,xi\n0,3/1\n1,3/1\n2,5/1\n3,5/1\n4,5/2\n");
    let ext = stdout(&[
        "euler", "-g", "example:e2", "-q", "7", "-K", "100", "--domain", "extended", "--digits", "30",
    ]);
    assert_eq!(ext.trim(), "13.3513926733482839961129243912");
}

#[test]
fn oracle_integer_spectrum() {
    let out = stdout(&["oracle", "-g", "example:e3"]);
    let mu: Vec<f64> = out.lines().map(|l| l.parse().unwrap()).collect();
    let want = [10.0, 9.0, 8.0, 7.0, 6.0, 4.0, 3.0, 2.0, 1.0, 0.0];
    assert!(mu.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9));
    let json = stdout(&["oracle", "-g", "antiregular:10", "--bits", "128", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(doc["eigenvalues"][0].as_str().unwrap().starts_with("10.0000000000000000000000000000"));
}

#[test]
fn contour_and_chc() {
    let json = stdout(&["contour", "-g", "ring-core:21:1", "--zeta", "-1"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!((doc["value"].as_f64().unwrap() - 21.0).abs() < 1e-8);
    assert_eq!(doc["branch_ok"], true);
    let csv = stdout(&["chc", "-g", "ring-core:8:1", "-M", "4"]);
    assert!(csv.starts_with("k,m,value\r\n1,1,0\r\n1,2,7\r\n"));
    let out = run(&["contour", "-g", "example:e2", "--zeta", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["reproduce", "e1", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("e1.csv")).unwrap();
    assert!(csv.starts_with("graph,q,zeta,K,t,xi,alpha\r\n"));
    let digest = std::fs::read_to_string(dir.path().join("e1.digest.txt")).unwrap();
    assert!(digest.contains("0 mismatched"));
    assert!(!digest.contains("MISMATCH"));
    assert_eq!(run(&["reproduce", "e9"]).status.code(), Some(2));
}

#[test]
fn sweep_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"graph_source": {"ensemble": {"n": [12], "p": [0.3], "trials": 20}},
            "t_grid": [-1, -2], "K_max": 20, "K_check": 20}"#,
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    let a = stdout(&["sweep", "-c", cfg, "--seed", "11"]);
    let b = stdout(&["sweep", "-c", cfg, "--seed", "11"]);
    let c = stdout(&["sweep", "-c", cfg, "--seed", "12"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(a.lines().count(), 3);

    let out = dir.path().join("single.csv");
    std::fs::write(
        dir.path().join("single.json"),
        r#"{"graph_source": {"generator": "example:e2"}, "q_selector": 13, "t_grid": [-1]}"#,
    )
    .unwrap();
    let single = dir.path().join("single.json");
    stdout(&["sweep", "-c", single.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn generate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    stdout(&["generate", "-g", "er:10:0.4:3", "-o", path.to_str().unwrap()]);
    let a = stdout(&["oracle", "-g", "er:10:0.4:3"]);
    let b = stdout(&["oracle", "-g", path.to_str().unwrap()]);
    assert_eq!(a, b);
    let json = dir.path().join("g.json");
    std::fs::write(&json, stdout(&["generate", "-g", path.to_str().unwrap(), "--json"])).unwrap();
    assert_eq!(stdout(&["oracle", "-g", json.to_str().unwrap()]), a);
}

#[test]
fn errors_exit_nonzero() {
    for args in [
        &["coeffs", "-g", "complete:4", "-q", "1"][..],
        &["coeffs", "-g", "example:e1", "-q", "2"],
        &["coeffs", "-g", "example:e1", "-q", "9"],
        &["euler", "-g", "example:e1", "-q", "1", "-t", "1"],
        &["euler", "-g", "example:e1", "-q", "1", "--domain", "double", "--exact"],
        &["oracle", "-g", "missing.edges"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}
