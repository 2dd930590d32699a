//! The `frob` command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 resource limits (budget, magnitude,
//! I/O), 4 an internal invariant of the closed form was violated.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{frobenius_two, CoprimePair};
use crate::audit::audit_sweep_within;
use crate::engine::{
    candidate_points, canonical_triple, evaluate, selmer_g, selmer_triple, uv_to_xy, Evaluation, Route,
};
use crate::error::{Budget, ErrorClass, FrobError, Result};
use crate::oracle::{GeneratorSet, Semigroup};
use crate::region::{
    classify_point, enumerate_exceptional_within, linear_form, ExceptionalValue, LatticePoint,
};
use crate::viz::{render_region_svg, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "frob",
    version,
    about = "Frobenius numbers of two and three generators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// g(a, b) = ab − a − b
    Two { a: i64, b: i64 },
    /// g(a, b, c), inputs in any order
    Three {
        a: i64,
        b: i64,
        c: i64,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        /// Print the decomposition, case and winning candidate
        #[arg(long)]
        explain: bool,
    },
    /// List every c with g(a, b, c) < g(a, b)
    Exceptional {
        a: i64,
        b: i64,
        #[arg(long)]
        json: bool,
    },
    /// Color and value of the lattice point (x, y)
    #[command(allow_negative_numbers = true)]
    Classify { a: i64, b: i64, x: i64, y: i64 },
    /// g(a, ha + d, ha + 2d)
    Selmer { a: i64, h: i64, d: i64 },
    /// Compare the closed form against the oracle over a parameter sweep
    Audit {
        #[arg(long)]
        a_max: i64,
        #[arg(long)]
        b_max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the region as SVG
    Plot {
        a: i64,
        b: i64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Ring the point x,y (repeatable)
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        highlight: Vec<LatticePoint>,
        /// Annotate points with their values
        #[arg(long)]
        values: bool,
        #[arg(long, default_value_t = 24.0)]
        scale: f64,
    },
}

fn parse_point(raw: &str) -> std::result::Result<LatticePoint, String> {
    let (x, y) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got {raw:?}"))?;
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
    Ok(LatticePoint::new(parse(x)?, parse(y)?))
}

struct Output {
    stdout: String,
    stderr: String,
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("frob")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_DOMAIN,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult {
                    exit_code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match Budget::from_env().and_then(|budget| execute(cli.command, budget)) {
        Ok(out) => CommandResult {
            exit_code: EXIT_OK,
            stdout: out.stdout,
            stderr: out.stderr,
        },
        Err(e) => CommandResult {
            exit_code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn exit_code(e: &FrobError) -> i32 {
    match e.class() {
        ErrorClass::Domain => EXIT_DOMAIN,
        ErrorClass::Resource => EXIT_RESOURCE,
        ErrorClass::Invariant => EXIT_INVARIANT,
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| FrobError::Resource(format!("cannot write {}: {e}", path.display())))
}

fn triple_name(t: [i64; 3]) -> String {
    format!("g({}, {}, {})", t[0], t[1], t[2])
}

fn execute(command: Command, budget: Budget) -> Result<Output> {
    let mut stdout = String::new();
    let mut stderr = String::new();
    match command {
        Command::Two { a, b } => {
            let pair = CoprimePair::sorted(a, b)?;
            writeln!(stdout, "g({}, {}) = {}", pair.a(), pair.b(), frobenius_two(pair)).unwrap();
        }
        Command::Three {
            a,
            b,
            c,
            method,
            explain,
        } => {
            let triple = canonical_triple(a, b, c)?;
            let name = triple_name(triple);
            let formula = match method {
                Method::Formula | Method::Both => Some(evaluate(a, b, c)?),
                Method::Oracle => None,
            };
            let oracle = match method {
                Method::Oracle | Method::Both => {
                    Some(Semigroup::within(GeneratorSet::new(triple)?, budget)?.frobenius())
                }
                Method::Formula => None,
            };
            match (&formula, oracle) {
                (Some(e), None) => writeln!(stdout, "{name} = {}", e.g).unwrap(),
                (None, Some(g)) => writeln!(stdout, "{name} = {g}").unwrap(),
                (Some(e), Some(g)) => {
                    writeln!(stdout, "{name} = {} (formula)", e.g).unwrap();
                    writeln!(stdout, "{name} = {g} (oracle)").unwrap();
                    if e.g != g {
                        writeln!(stderr, "warning: closed form and oracle disagree for {name}").unwrap();
                    }
                }
                (None, None) => unreachable!(),
            }
            if explain {
                match &formula {
                    Some(e) => explain_evaluation(&mut stdout, e, 0),
                    None => writeln!(stdout, "route: Apéry table oracle").unwrap(),
                }
            }
        }
        Command::Exceptional { a, b, json } => {
            let pair = CoprimePair::sorted(a, b)?;
            let values = enumerate_exceptional_within(pair, budget)?;
            if json {
                #[derive(Serialize)]
                struct Listing<'a> {
                    a: i64,
                    b: i64,
                    count: usize,
                    values: &'a [ExceptionalValue],
                }
                let listing = Listing {
                    a: pair.a(),
                    b: pair.b(),
                    count: values.len(),
                    values: &values,
                };
                stdout = serde_json::to_string_pretty(&listing).expect("listing serializes");
                stdout.push('\n');
            } else {
                writeln!(
                    stdout,
                    "exceptional values for ({}, {}): {}",
                    pair.a(),
                    pair.b(),
                    values.len()
                )
                .unwrap();
                for v in &values {
                    writeln!(stdout, "{} at ({}, {})", v.c, v.point.x, v.point.y).unwrap();
                }
            }
        }
        Command::Classify { a, b, x, y } => {
            let pair = CoprimePair::sorted(a, b)?;
            let p = LatticePoint::new(x, y);
            writeln!(
                stdout,
                "({x}, {y}): {}, value {}",
                classify_point(pair, p).name(),
                linear_form(pair, p)
            )
            .unwrap();
        }
        Command::Selmer { a, h, d } => {
            let triple = selmer_triple(a, h, d)?;
            writeln!(stdout, "{} = {}", triple_name(triple), selmer_g(a, h, d)?).unwrap();
        }
        Command::Audit { a_max, b_max, out } => {
            let report = audit_sweep_within(a_max, b_max, budget)?;
            let json = report.to_json();
            let summary = format!(
                "audited {} exceptional triples, {} disagreements\n",
                report.records.len(),
                report.disagreements().count()
            );
            match out {
                Some(path) => {
                    write_file(&path, &json)?;
                    stderr.push_str(&summary);
                }
                None => {
                    stdout = json;
                    stderr.push_str(&summary);
                }
            }
        }
        Command::Plot {
            a,
            b,
            out,
            highlight,
            values,
            scale,
        } => {
            let pair = CoprimePair::sorted(a, b)?;
            let opts = RenderOptions {
                scale,
                show_values: values,
                highlight,
            };
            let svg = render_region_svg(pair, &opts)?;
            match out {
                Some(path) => write_file(&path, &svg)?,
                None => stdout = svg,
            }
        }
    }
    Ok(Output { stdout, stderr })
}

fn explain_evaluation(out: &mut String, e: &Evaluation, depth: usize) {
    let pad = "  ".repeat(depth);
    let [a, b, c] = e.generators;
    match &e.route {
        Route::TwoGenerators => {
            writeln!(
                out,
                "{pad}route: repeated generator, g = ab − a − b on the distinct pair"
            )
            .unwrap();
        }
        Route::NonExceptional => {
            writeln!(
                out,
                "{pad}route: {c} is not exceptional for ({a}, {b}), so g = ab − a − b"
            )
            .unwrap();
        }
        Route::Johnson { d, inner } => {
            writeln!(
                out,
                "{pad}route: gcd({a}, {b}) = {d}, g = {d}·g({}, {}, {c}) + {c}·{}",
                a / d,
                b / d,
                d - 1
            )
            .unwrap();
            match inner {
                Some(inner) => {
                    writeln!(out, "{pad}inner: {} = {}", triple_name(inner.generators), inner.g).unwrap();
                    explain_evaluation(out, inner, depth + 1);
                }
                None => writeln!(out, "{pad}inner: contains 1, g = -1").unwrap(),
            }
        }
        Route::Theorem {
            decomposition: dec,
            case,
            winner,
        } => {
            let pair = CoprimePair::new(a, b).expect("theorem route has a coprime pair");
            writeln!(
                out,
                "{pad}decomposition: {c} = {}·{b} − {}·{a}, {a} = {}·{} + {}  (h = {}, l = {}, q = {}, r = {})",
                dec.l, dec.h, dec.q, dec.l, dec.r, dec.h, dec.l, dec.q, dec.r
            )
            .unwrap();
            writeln!(out, "{pad}case: {case}").unwrap();
            for p in candidate_points(pair, dec) {
                writeln!(
                    out,
                    "{pad}candidate: {} at (u, v) = ({}, {}), value {}",
                    p.kind.as_str(),
                    p.u,
                    p.v,
                    p.value_xy
                )
                .unwrap();
            }
            let xy = uv_to_xy(pair, winner.u, winner.v);
            writeln!(
                out,
                "{pad}winner: {} at (u, v) = ({}, {}), (x, y) = ({}, {}), value {}",
                winner.kind.as_str(),
                winner.u,
                winner.v,
                xy.x,
                xy.y,
                winner.value_xy
            )
            .unwrap();
        }
    }
}
