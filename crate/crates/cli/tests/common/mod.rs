#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seven-circles"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// Invocations whose output is pinned by files under `tests/data`.
pub const GOLDEN: [(&str, &[&str]); 4] = [
    (
        "regular_chain.svg",
        &["render", "--chain", "0,60,120,180,240,300"],
    ),
    (
        "regular_chain_klein.svg",
        &[
            "render",
            "--chain",
            "0,60,120,180,240,300",
            "--layers",
            "klein",
        ],
    ),
    (
        "regular_chain_poincare.svg",
        &[
            "render",
            "--chain",
            "0,60,120,180,240,300",
            "--layers",
            "poincare",
        ],
    ),
    ("worked_hexagon.txt", &["hexagon", "0,60,120,180,240,330"]),
];

/// Compares the output of `args` with the golden file `name`. With
/// `UPDATE_GOLDEN=1` the file is rewritten instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let got = stdout(args);
    let path = data(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1") {
        std::fs::write(&path, &got).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{name}: output differs from {}", path.display()))
    }
}
