use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gysin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(args)
        .env_remove("GYSIN_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const BRAID3: &str = r#"{"kind":"central","dim":3,"normals":[["1","-1","0"],["1","0","-1"],["0","1","-1"]]}"#;

#[test]
fn braid_and_triple_have_the_same_algebra() {
    let a = gysin(&["os", "--inline", BRAID3]);
    assert!(a.status.success());
    assert!(stdout(&a).contains("Poincaré polynomial: 1 + 3t + 2t²"));
    let b = gysin(&["os", "--inline", r#"{"kind":"central","dim":2,"normals":[[1,0],[0,1],[1,-1]]}"#]);
    assert!(stdout(&b).contains("Poincaré polynomial: 1 + 3t + 2t²"));
}

#[test]
fn boolean_arrangement() {
    let o = gysin(&["os", "--inline", r#"{"kind":"central","dim":3,"normals":[[1,0,0],[0,1,0],[0,0,1]]}"#]);
    assert!(stdout(&o).contains("1 + 3t + 3t² + t³"));
}

#[test]
fn parse_errors_exit_one_with_position() {
    let o = gysin(&["os", "--inline", "{\"kind\":\"central\",\n\"dim\":3,\n\"normals\":[[1,0,0],]}"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = gysin(&["os", "--inline", r#"{"kind":"central","dim":2,"normals":[["1/0","1"]]}"#]);
    assert_eq!(o.status.code(), Some(1));

    let o = gysin(&["os", "--inline", r#"{"kind":"central","dim":2,"normals":[[0,0]]}"#]);
    assert_eq!(o.status.code(), Some(1));

    let o = gysin(&["betti", "--inline", r#"{"kind":"curvepower","genus":1,"graph":{"vertices":2,"edges":[[0,0]]}}"#]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(gysin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gysin(&["os"]).status.code(), Some(1));
    assert_eq!(gysin(&["config", "--genus", "1"]).status.code(), Some(1));
    assert_eq!(gysin(&["os", "/nonexistent/file.json"]).status.code(), Some(1));
}

#[test]
fn cap_exceeded_exits_two() {
    let o = gysin(&["config", "--genus", "2", "--n", "4", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("instance too large"));
    assert!(stderr(&o).contains("3024"));

    let o = gysin(&["selfcheck", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("instance too large"));

    let o = Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(["config", "--genus", "1", "--n", "3"])
        .env("GYSIN_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reads_files_and_stdin_and_writes_out() {
    let dir = std::env::temp_dir().join(format!("gysin-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("torus.json");
    std::fs::write(&input, r#"{"kind":"projective","dim":2,"normals":[[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
    let out = dir.join("out.json");
    let o = gysin(&["betti", input.to_str().unwrap(), "--format", "json", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["totals"], serde_json::json!([1, 2, 1, 0, 0]));

    let mut child = Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(["os", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(BRAID3.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(String::from_utf8(o.stdout).unwrap().contains("1 + 3t + 2t²"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_examples() {
    for (g, n, totals) in [(0, 3, "(1, 0, 0, 1, 0, 0, 0)"), (1, 2, "(1, 4, 5, 2, 0)"), (0, 2, "(1, 0, 1, 0, 0)")] {
        let o = gysin(&["config", "--genus", &g.to_string(), "--n", &n.to_string()]);
        assert!(o.status.success());
        let s = stdout(&o);
        assert!(s.contains(&format!("Betti numbers: {}", totals)), "{}", s);
        assert!(s.contains(": match"));
        assert!(s.contains("alpha/beta: inverse yes, chain maps yes, multiplicative yes"));
    }
    let o = gysin(&["config", "--genus", "1", "--graph", r#"{"vertices":3,"edges":[[0,1],[1,2]]}"#]);
    assert!(o.status.success());
}

#[test]
fn blowup_demo_lines() {
    let s = stdout(&gysin(&["blowup-demo"]));
    assert!(s.contains("q=2: Q³→Q vs Q⁴→Q², quasi-iso: yes"));
    assert!(s.contains("q=4: Q²→Q³→Q vs Q³→Q⁴→Q, acyclic / acyclic, quasi-iso: yes"));
    assert!(s.contains("d∘M(π) = M(π)∘d: pass"));
}

#[test]
fn corrupted_selfcheck_exits_three() {
    let o = gysin(&["selfcheck", "--corrupt-diagonal", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["failed"].as_u64().unwrap() > 0);
    let failed: Vec<&str> = v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| !o["passed"].as_bool().unwrap())
        .map(|o| o["check"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"structure"));
    assert!(failed.contains(&"euler-chromatic"));
}
