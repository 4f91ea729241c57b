use std::process::{Command, Output};

fn hamchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamchain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn counts_quotient_cycles() {
    let o = hamchain(&["hamilton", "count", "tutte-quotient"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn chain_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let path = path.to_str().unwrap();
    assert!(hamchain(&["construct", "chain-H", "--out", path])
        .status
        .success());
    let from_file = hamchain(&["chain", "analyze", path, "--format", "json"]);
    let builtin = hamchain(&["chain", "analyze", "chain-H", "--format", "json"]);
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&builtin));
    assert!(stdout(&builtin).contains("\"Finite\""));
}

#[test]
fn graph_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let path = path.to_str().unwrap();
    assert!(
        hamchain(&["construct", "replacement", "--n", "1", "--out", path])
            .status
            .success()
    );
    let o = hamchain(&["hamilton", "count", path]);
    assert!(o.status.success());
    assert!(stdout(&o).trim().parse::<u64>().is_ok());
}

#[test]
fn check_passes_on_ladder() {
    let o = hamchain(&["chain", "check", "chain-ladder", "--depth", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(hamchain(&["--help"]).status.code(), Some(0));
    assert_eq!(hamchain(&["construct", "nonesuch"]).status.code(), Some(2));
    assert_eq!(hamchain(&["frobnicate"]).status.code(), Some(2));
    assert_ne!(
        hamchain(&["hamilton", "count", "/no/such/file.json"])
            .status
            .code(),
        Some(0)
    );
}
