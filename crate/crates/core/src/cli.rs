//! Command-line front end.
//!
//! Exit codes: `0` for success or a true answer, `1` for a false or
//! negative answer, `2` for usage and domain errors. All numbers are printed
//! as exact literals except in `regions`, which emits floats for plotting.

use std::fmt::Write as _;
use std::io::BufRead;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::exactnum::GaussianRational;
use crate::forest::{self, CuspClass, PathSpec, DEFAULT_DEPTH_CAP, DEFAULT_MAX_STEPS};
use crate::moebius::{self, Letter, Mat, PairParams, Word};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lrforest", version, about = "Exact forests of left-right pairs on the positive quadrant")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long, default_value_t = 1)]
    pub u: u64,
    #[arg(long, default_value_t = 1)]
    pub v: u64,
}

impl PairArgs {
    fn params(&self) -> Result<PairParams, Error> {
        PairParams::new(self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LetterArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the descendants of a point down to a given depth.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        z: GaussianRational,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        cap: usize,
    },
    /// Trace a point up to the orphan rooting its tree.
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        z: GaussianRational,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Decide whether two points lie in the same tree.
    SameTree {
        #[arg(long, allow_hyphen_values = true)]
        z1: GaussianRational,
        #[arg(long, allow_hyphen_values = true)]
        z2: GaussianRational,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Report the half-crescent index of a point and whether it is an orphan.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        z: GaussianRational,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Decide whether two matrices form a left-right pair.
    PairCheck {
        #[arg(long = "L", value_name = "MATRIX", allow_hyphen_values = true)]
        left: Mat,
        #[arg(long = "R", value_name = "MATRIX", allow_hyphen_values = true)]
        right: Mat,
        /// Also search for an overlap witness on the grid p/q + (r/q)i, p, q, r <= N.
        #[arg(long, value_name = "N")]
        verify_bound: Option<u64>,
    },
    /// Write a matrix as a word over L_u, R_v.
    Decompose {
        #[arg(long = "T", value_name = "MATRIX", allow_hyphen_values = true)]
        t: Mat,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Decide membership of a matrix in the semigroup generated by L_u, R_v.
    Member {
        #[arg(long = "T", value_name = "MATRIX", allow_hyphen_values = true)]
        t: Mat,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Emit CSV samples of the half-disk boundaries and the line x = v.
    Regions {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 4)]
        nmax: u64,
        #[arg(long, default_value_t = 65)]
        samples: usize,
    },
    /// Classify the limit of an eventually constant path.
    Cusp {
        #[arg(long, value_enum, required_unless_present = "both", conflicts_with = "both")]
        tail: Option<LetterArg>,
        #[arg(long, default_value = "")]
        prefix: Word,
        /// The path uses both generators infinitely often.
        #[arg(long)]
        both: bool,
    },
    /// Read one command per line from stdin.
    Batch,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn answer(stdout: String, truth: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if truth { EXIT_TRUE } else { EXIT_FALSE },
        }
    }

    fn ok(stdout: String) -> Self {
        Outcome::answer(stdout, true)
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_ERROR,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
///
/// `batch` reads from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_TRUE };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match cli.command {
        Command::Batch => run_batch(stdin),
        command => execute(command).unwrap_or_else(Outcome::error),
    }
}

/// Runs each non-empty stdin line as a command. The exit code is the largest
/// code of any line.
pub fn run_batch(stdin: &mut dyn BufRead) -> Outcome {
    let mut total = Outcome::default();
    let mut empty = std::io::empty();
    for line in stdin.lines() {
        let line = match line {
            Ok(line) => line,
            Err(e) => return Outcome::error(e),
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.is_empty() || words[0].starts_with('#') {
            continue;
        }
        if words[0] == "batch" {
            total.stderr.push_str("error: batch cannot be nested\n");
            total.code = total.code.max(EXIT_ERROR);
            continue;
        }
        let out = run(
            std::iter::once("lrforest").chain(words.iter().copied()),
            &mut empty,
        );
        total.stdout.push_str(&out.stdout);
        total.stderr.push_str(&out.stderr);
        total.code = total.code.max(out.code);
    }
    total
}

fn execute(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Orbit {
            z,
            pair,
            depth,
            format,
            cap,
        } => {
            let tree = forest::orbit_with_cap(&z, &pair.params()?, depth, cap)?;
            Outcome::ok(match format {
                TreeFormat::Json => tree.to_json() + "\n",
                TreeFormat::Dot => tree.to_dot(),
            })
        }
        Command::Trace { z, pair, max_steps } => {
            let trace = forest::trace_to_root(&z, &pair.params()?, max_steps)?;
            Outcome::ok(serde_json::to_string(&trace).expect("trace serializes") + "\n")
        }
        Command::SameTree { z1, z2, pair } => {
            let same = forest::same_tree(&z1, &z2, &pair.params()?)?;
            Outcome::answer(format!("{same}\n"), same)
        }
        Command::Classify { z, pair } => {
            let p = pair.params()?;
            let index = forest::crescent_index(&z, p.u())?;
            let orphan = forest::is_orphan(&z, &p)?;
            let report = json!({
                "z": z,
                "crescent": index.n().to_string(),
                "orphan": orphan,
            });
            Outcome::ok(report.to_string() + "\n")
        }
        Command::PairCheck {
            left,
            right,
            verify_bound,
        } => pair_check(&left, &right, verify_bound)?,
        Command::Decompose { t, pair } => match moebius::decompose_word(&t, &pair.params()?)? {
            Some(word) => Outcome::ok(format!("{word}\n")),
            None => Outcome::answer("not a member\n".into(), false),
        },
        Command::Member { t, pair } => {
            let member = moebius::is_member(&t, &pair.params()?);
            Outcome::answer(format!("{member}\n"), member)
        }
        Command::Regions {
            pair,
            nmax,
            samples,
        } => Outcome::ok(regions_csv(&pair, nmax, samples)?),
        Command::Cusp { tail, prefix, both } => {
            let spec = match (both, tail) {
                (true, _) => PathSpec::BothInfinitelyOften,
                (false, Some(t)) => PathSpec::EventuallyConstant {
                    prefix,
                    tail: match t {
                        LetterArg::L => Letter::L,
                        LetterArg::R => Letter::R,
                    },
                },
                (false, None) => {
                    return Err(Error::InvalidParams("either --tail or --both is required".into()))
                }
            };
            let class = forest::classify_path(&spec);
            Outcome::answer(format!("{class}\n"), class != CuspClass::Divergent)
        }
        Command::Batch => unreachable!("dispatched by run"),
    })
}

fn pair_check(left: &Mat, right: &Mat, verify_bound: Option<u64>) -> Result<Outcome, Error> {
    let pair = moebius::is_left_right_pair(left, right)?;
    let mut out = String::from(if pair { "PAIR\n" } else { "NOT-PAIR\n" });
    if let Some(bound) = verify_bound {
        match moebius::find_overlap_witness(left, right, bound)? {
            Some((z1, z2)) => {
                let image = left.apply(&z1)?;
                let _ = writeln!(out, "witness z1={z1} z2={z2} image={image}");
                if pair {
                    return Ok(Outcome {
                        stdout: out,
                        stderr: "error: closed-form decision contradicted by witness\n".into(),
                        code: EXIT_ERROR,
                    });
                }
            }
            None => {
                let _ = writeln!(out, "no witness up to bound {bound}");
            }
        }
    }
    Ok(Outcome::answer(out, pair))
}

/// Rounds to 12 significant digits and prints the shortest decimal form.
pub fn format_float(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("float round-trips");
    if rounded == 0.0 {
        return "0".into();
    }
    format!("{rounded}")
}

/// Boundary samples of the half disks `D_1 .. D_nmax` and the line `x = v`.
///
/// CSV columns are `region_kind,n,x,y`; circle rows sweep the upper half
/// circle centred at `1/(2nu)` from `x = 1/(nu)` down to `x = 0`, and the
/// line rows run from `y = 0` to `y = v`.
pub fn regions_csv(pair: &PairArgs, nmax: u64, samples: usize) -> Result<String, Error> {
    let p = pair.params()?;
    if nmax < 1 {
        return Err(Error::InvalidParams("nmax must be at least 1".into()));
    }
    if samples < 2 {
        return Err(Error::InvalidParams("samples must be at least 2".into()));
    }
    let mut out = String::from("region_kind,n,x,y\n");
    let last = (samples - 1) as f64;
    for n in 1..=nmax {
        let radius = 1.0 / (2.0 * n as f64 * p.u() as f64);
        for k in 0..samples {
            let (x, y) = if k == 0 {
                (2.0 * radius, 0.0)
            } else if k == samples - 1 {
                (0.0, 0.0)
            } else {
                let theta = std::f64::consts::PI * k as f64 / last;
                (radius + radius * theta.cos(), radius * theta.sin())
            };
            let _ = writeln!(out, "circle,{n},{},{}", format_float(x), format_float(y));
        }
    }
    let v = p.v() as f64;
    for k in 0..samples {
        let y = v * k as f64 / last;
        let _ = writeln!(out, "line,,{},{}", format_float(v), format_float(y));
    }
    Ok(out)
}
