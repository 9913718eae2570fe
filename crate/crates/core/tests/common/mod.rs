#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub code: i32,
    pub args: Vec<String>,
}

impl Case {
    /// File-name stem for the stored report, built from the arguments.
    pub fn slug(&self) -> String {
        self.args
            .iter()
            .map(|a| match a.strip_suffix(".json") {
                Some(p) => Path::new(p).file_name().unwrap().to_string_lossy().into_owned(),
                None => a.clone(),
            })
            .collect::<Vec<_>>()
            .join("-")
    }
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_cases() -> Vec<Case> {
    let text = std::fs::read_to_string(crate_dir().join("tests/golden/cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let code = it.next().unwrap().parse().unwrap();
            Case { code, args: it.map(String::from).collect() }
        })
        .collect()
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Run the CLI binary from the crate directory.
pub fn run_bin(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_assoc2")).args(args).current_dir(crate_dir()).output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn run_case(case: &Case, format: &str) -> Run {
    let mut args = vec!["--format", format];
    args.extend(case.args.iter().map(String::as_str));
    run_bin(&args)
}
