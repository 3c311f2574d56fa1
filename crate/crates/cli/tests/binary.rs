use std::process::Command;

fn fortress() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fortress"))
}

#[test]
fn environment_variable_sets_the_guard() {
    let out = fortress()
        .args(["classify", "--family", "cycle", "--n", "8"])
        .env("FORTRESS_MAX_EXACT", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-exact"));
    let out = fortress()
        .args([
            "classify",
            "--family",
            "cycle",
            "--n",
            "8",
            "--max-exact",
            "8",
        ])
        .env("FORTRESS_MAX_EXACT", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn report_goes_to_stdout() {
    let out = fortress()
        .args(["classify", "--family", "petersen", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["f_number"], 6);
}
