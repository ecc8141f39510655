//! The `rigdist` command line.
//!
//! Every command reads the JSON documents of [`crate::format`] and writes
//! one canonical document (or, for `check-laws`, one report per line).
//! Exit codes: 0 ok, 2 parse error, 3 rig or domain mismatch, 4 math
//! error, 5 law violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::format::{self, Mode};
use crate::integration;
use crate::lawcheck::{self, SuiteConfig};
use crate::probability;
use crate::rig::{Rig, RigName};
use crate::strength;
use crate::with_rig;

#[derive(Debug, Parser)]
#[command(name = "rigdist", version, about = "Exact distributions over rigs")]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Sum duplicate keys and drop zero weights instead of rejecting them.
    #[arg(long, global = true)]
    pub lenient: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Addition of natural-number atoms.
    Add,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of all weights.
    Total { file: PathBuf },
    /// Pushforward along a map.
    Push {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Tensor product `P(x) * Q(y)` on pairs.
    Tensor { a: PathBuf, b: PathBuf },
    /// Tensor product pushed along a binary map.
    Convolve {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, conflicts_with = "op", required_unless_present = "op")]
        map: Option<PathBuf>,
        #[arg(long, value_enum)]
        op: Option<Op>,
    },
    /// One marginal of a joint distribution.
    Marginal {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        axis: u8,
    },
    /// `Σ P(r) * r` over coefficient keys.
    Expect { file: PathBuf },
    /// `Σ P(r) * r^n`.
    Moment {
        file: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// `Σ P(r, s) * r * s` over pairs of coefficient keys.
    MixedMoment { file: PathBuf },
    /// `Σ P(x) * φ(x)`.
    Integrate {
        file: PathBuf,
        #[arg(long = "fn")]
        func: PathBuf,
    },
    /// Reweights `P(x)` to `P(x) * φ(x)`.
    Act {
        file: PathBuf,
        #[arg(long = "fn")]
        func: PathBuf,
    },
    /// Conditions a probability distribution on an event.
    Condition {
        file: PathBuf,
        #[arg(long)]
        event: PathBuf,
        /// Only require the event's mass to be invertible.
        #[arg(long)]
        any_total: bool,
    },
    /// Rescales to total one.
    Normalize { file: PathBuf },
    /// Runs the law suite and prints one JSON report per law.
    CheckLaws {
        #[arg(long)]
        rig: RigName,
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow carriers of size 3.
        #[arg(long)]
        exhaustive: bool,
        /// Cases per law when a law is sampled.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::RigMismatch { .. }
        | Error::CarrierMismatch(_)
        | Error::UntaggedElement(_)
        | Error::UnpairedElement(_)
        | Error::KeyNotCoefficient(_) => 3,
        Error::MapIncomplete(_) | Error::NotInvertible(_) | Error::NotProbability(_) | Error::CapExceeded { .. } => 4,
    }
}

fn load(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    format::parse_json(&text)
}

/// What a command produced: text to print and whether a law failed.
struct Outcome {
    text: String,
    violated: bool,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, violated: false }
    }
}

fn dist_command(cli: &Cli, primary: &Path) -> Result<Outcome> {
    let mode = if cli.lenient { Mode::Lenient } else { Mode::Strict };
    let first = load(primary)?;
    let name = format::rig_of(&first)?;
    with_rig!(name, |rig| run_with(&rig, cli, &first, mode))
}

fn run_with<R: Rig>(rig: &R, cli: &Cli, first: &Value, mode: Mode) -> Result<Outcome> {
    let p = format::read_dist(rig, first, mode)?;
    let dist = |path: &Path| load(path).and_then(|v| format::read_dist(rig, &v, mode));
    let func = |path: &Path| load(path).and_then(|v| format::read_fn(rig, &v, mode));
    let scalar = |c: R::Elem| Ok(format::scalar_to_json(rig, &c).into());
    let out = |d: Dist<R>| Ok(format::dist_to_json(&d.without_carrier()).into());

    match &cli.command {
        Command::Total { .. } => scalar(p.total()),
        Command::Push { map, .. } => {
            let m = format::read_map(&load(map)?)?;
            out(p.pushforward(|x| m.get(x))?)
        }
        Command::Tensor { b, .. } => out(strength::psi(&p, &dist(b)?)?),
        Command::Convolve { b, map, op, .. } => {
            let q = dist(b)?;
            match (map, op) {
                (Some(path), _) => {
                    let m = format::read_map(&load(path)?)?;
                    out(integration::convolve(&p, &q, |x, y| m.get2(x, y))?)
                }
                (None, _) => out(integration::convolve(&p, &q, integration::natural_sum)?),
            }
        }
        Command::Marginal { axis, .. } => {
            let (m0, m1) = probability::marginals(&p)?;
            out(if *axis == 0 { m0 } else { m1 })
        }
        Command::Expect { .. } => scalar(probability::expectation(&p)?),
        Command::Moment { n, .. } => scalar(probability::moment(&p, *n)?),
        Command::MixedMoment { .. } => scalar(probability::mixed_moment(&p)?),
        Command::Integrate { func: f, .. } => scalar(integration::integrate(&p, &func(f)?)?),
        Command::Act { func: f, .. } => out(integration::act(&p, &func(f)?)?),
        Command::Condition { event, any_total, .. } => {
            let phi = func(event)?;
            if *any_total {
                out(probability::condition_lenient(&p, &phi)?)
            } else {
                out(probability::condition(&p, &phi)?)
            }
        }
        Command::Normalize { .. } => out(probability::normalize(&p)?),
        Command::CheckLaws { .. } => unreachable!("handled without an input file"),
    }
}

fn check_laws(name: RigName, cfg: &SuiteConfig) -> Result<Outcome> {
    with_rig!(name, |rig| {
        let reports = lawcheck::run_suite(&rig, cfg)?;
        let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
        Ok(Outcome {
            text: lines.join("\n"),
            violated: reports.iter().any(|r| !r.passed()),
        })
    })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::CheckLaws {
            rig,
            size,
            seed,
            exhaustive,
            samples,
        } => {
            let cfg = SuiteConfig {
                samples: *samples,
                allow_large: *exhaustive,
                ..SuiteConfig::new(*size, *seed)
            };
            check_laws(*rig, &cfg)
        }
        Command::Total { file }
        | Command::Push { file, .. }
        | Command::Tensor { a: file, .. }
        | Command::Convolve { a: file, .. }
        | Command::Marginal { file, .. }
        | Command::Expect { file }
        | Command::Moment { file, .. }
        | Command::MixedMoment { file }
        | Command::Integrate { file, .. }
        | Command::Act { file, .. }
        | Command::Condition { file, .. }
        | Command::Normalize { file } => dist_command(cli, file),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("rigdist: {e}");
            return exit_code(&e);
        }
    };
    let mut text = outcome.text;
    if !text.is_empty() {
        text.push('\n');
    }
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("rigdist: cannot write output: {e}");
        return 1;
    }
    if outcome.violated {
        eprintln!("rigdist: law violations found");
        5
    } else {
        0
    }
}
