use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub struct GoldenCase {
    pub name: String,
    pub dir: PathBuf,
    pub args: Vec<String>,
    pub stdout: Option<String>,
    pub exit: i32,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let mut cases: Vec<GoldenCase> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|entry| {
            let dir = entry.expect("dir entry").path();
            let name = dir.file_name().unwrap().to_string_lossy().into_owned();
            let args = fs::read_to_string(dir.join("args"))
                .expect("args file")
                .lines()
                .map(str::to_string)
                .collect();
            let stdout = fs::read_to_string(dir.join("stdout")).ok();
            let exit = fs::read_to_string(dir.join("exit"))
                .map(|s| s.trim().parse().expect("exit code"))
                .unwrap_or(0);
            GoldenCase { name, dir, args, stdout, exit }
        })
        .collect();
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    cases
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn rigdist(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_rigdist"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("run rigdist");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Runs one golden case; `Err` describes the first difference.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let run = rigdist(&case.dir, &args);
    if run.code != case.exit {
        return Err(format!("{}: exit {} (expected {}), stderr {:?}", case.name, run.code, case.exit, run.stderr));
    }
    match &case.stdout {
        Some(expected) if *expected != run.stdout => {
            Err(format!("{}: stdout differs\n got: {}\nwant: {}", case.name, run.stdout, expected))
        }
        _ => Ok(()),
    }
}

/// The subcommand a golden case exercises, from its directory name.
pub fn subcommand(case: &GoldenCase) -> &str {
    case.name.rsplit_once('-').map_or(case.name.as_str(), |(cmd, _)| cmd)
}
