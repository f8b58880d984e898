//! Reports against checked-in golden files, in both formats. Set
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

use gysin_cli::report::{BettiReport, BlowupReport, ConfigReport, OsReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(args)
        .env_remove("GYSIN_CAP")
        .output()
        .unwrap();
    assert!(o.status.success(), "{:?}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn compare(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "{} differs from golden file", name);
}

/// Both formats match their golden files, the text is a rendering of the
/// JSON payload, and the payload round-trips.
fn check<T>(name: &str, args: &[&str], text: fn(&T) -> String)
where
    T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let txt = run(args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let json = run(&json_args);
    compare(&format!("{}.txt", name), &txt);
    compare(&format!("{}.json", name), &json);

    let parsed: T = serde_json::from_str(&json).unwrap();
    assert_eq!(text(&parsed), txt);
    let again: T = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(again, parsed);
}

#[test]
fn os_braid() {
    check::<OsReport>(
        "os_braid3",
        &["os", "--inline", r#"{"kind":"central","dim":3,"normals":[["1","-1","0"],["1","0","-1"],["0","1","-1"]]}"#],
        OsReport::text,
    );
}

#[test]
fn os_deleted_b3() {
    check::<OsReport>(
        "os_deleted_b3",
        &[
            "os",
            "--inline",
            r#"{"kind":"central","dim":3,"normals":[[1,0,0],[0,1,0],[0,0,1],[1,-1,0],[1,1,0],[1,0,-1],[1,0,1],[0,1,-1]]}"#,
        ],
        OsReport::text,
    );
}

#[test]
fn betti_elliptic_pair() {
    check::<BettiReport>(
        "betti_elliptic_pair",
        &["betti", "--inline", r#"{"kind":"curvepower","genus":1,"graph":{"vertices":2,"edges":[[0,1]]}}"#],
        BettiReport::text,
    );
}

#[test]
fn betti_torus() {
    check::<BettiReport>(
        "betti_torus",
        &["betti", "--inline", r#"{"kind":"projective","dim":2,"normals":[[1,0,0],[0,1,0],[0,0,1]]}"#],
        BettiReport::text,
    );
}

#[test]
fn betti_blowup_base() {
    check::<BettiReport>(
        "betti_blowup_base",
        &["betti", "--inline", r#"{"kind":"blowup-demo"}"#],
        BettiReport::text,
    );
}

#[test]
fn config_three_points_on_line() {
    check::<ConfigReport>("config_p1_3", &["config", "--genus", "0", "--n", "3"], ConfigReport::text);
}

#[test]
fn blowup_demo() {
    check::<BlowupReport>("blowup_demo", &["blowup-demo"], BlowupReport::text);
}
