//! The `hnum` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::battery::{self, Bounds};
use crate::enhanced::enumerate_universal;
use crate::error::{HurwitzError, Result};
use crate::oracle::{complex_hurwitz_oracle, count_fixed_target_factorizations, real_hurwitz_oracle};
use crate::par::{self, Strategy};
use crate::perms::{Partition, SignSplitting};
use crate::tropical::export::{export_all, Format};
use crate::tropical::sweep::enumerate_enhanced_covers;

#[derive(Parser, Debug)]
#[command(name = "hnum", version, about = "Real double Hurwitz numbers with 3-cycles")]
pub struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Tropical,
    Oracle,
    Both,
}

#[derive(clap::Args, Debug)]
struct TypeArgs {
    #[arg(short = 'g', long, default_value_t = 0)]
    genus: usize,
    /// Left ramification profile, e.g. `3,1`.
    #[arg(short = 'l', long = "lambda")]
    lambda: String,
    /// Right ramification profile.
    #[arg(short = 'm', long = "mu")]
    mu: String,
}

impl TypeArgs {
    fn parse(&self) -> Result<(usize, Partition, Partition)> {
        Ok((self.genus, self.lambda.parse()?, self.mu.parse()?))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Real count for one sign splitting.
    Real {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Complex count, as a reduced fraction.
    Complex {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// The enhanced number and the number of universal classes.
    Enhanced {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Factorizations of a d-cycle into (d-1)/2 3-cycles.
    FixedTarget {
        #[arg(short = 'd')]
        degree: usize,
    },
    /// Runs the acceptance battery.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_d: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
    },
    /// Writes every enhanced class of a type.
    Export {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

/// Exit status for an error.
pub fn exit_code(e: &HurwitzError) -> i32 {
    if e.is_usage() {
        2
    } else if e.is_degenerate() {
        3
    } else {
        4
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        par::configure_threads(n.max(1));
    }
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: serde_json::Value, text: String) -> Result<()> {
    let line = if json { value.to_string() } else { text };
    writeln!(out, "{line}").map_err(|e| HurwitzError::Precondition(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Real { ty, signs, method } => {
            let (g, lambda, mu) = ty.parse()?;
            let signs: SignSplitting = signs.parse()?;
            let oracle = matches!(method, Method::Oracle | Method::Both)
                .then(|| real_hurwitz_oracle(g, &lambda, &mu, &signs))
                .transpose()?;
            let tropical = matches!(method, Method::Tropical | Method::Both)
                .then(|| crate::tropical::real_hurwitz_tropical(g, &lambda, &mu, &signs))
                .transpose()?;
            match (oracle, tropical) {
                (Some(o), Some(t)) => {
                    let agree = o.as_integer() == Some(t);
                    let verdict = if agree { "OK" } else { "MISMATCH" };
                    emit(
                        out,
                        cli.json,
                        json!({"oracle": o.to_string(), "tropical": t.to_string(), "agree": agree}),
                        format!("oracle={o} tropical={t} {verdict}"),
                    )?;
                    Ok(if agree { 0 } else { 4 })
                }
                (Some(o), None) => emit(out, cli.json, json!({"oracle": o.to_string()}), o.to_string()).map(|_| 0),
                (None, Some(t)) => emit(out, cli.json, json!({"tropical": t.to_string()}), t.to_string()).map(|_| 0),
                (None, None) => unreachable!("a method is always selected"),
            }
        }
        Command::Complex { ty } => {
            let (g, lambda, mu) = ty.parse()?;
            let h = complex_hurwitz_oracle(g, &lambda, &mu)?;
            emit(out, cli.json, json!({"complex": h.to_string()}), h.to_string())?;
            Ok(0)
        }
        Command::Enhanced { ty } => {
            let (g, lambda, mu) = ty.parse()?;
            let classes = enumerate_universal(g, &lambda, &mu)?;
            let e: u128 = classes.iter().map(|c| c.multiplicity).sum();
            emit(
                out,
                cli.json,
                json!({"enhanced": e.to_string(), "classes": classes.len()}),
                format!("E={e} classes={}", classes.len()),
            )?;
            Ok(0)
        }
        Command::FixedTarget { degree } => {
            let d = *degree;
            let n = count_fixed_target_factorizations(d)?;
            let expected = (d as u128)
                .checked_pow(((d - 3) / 2) as u32)
                .ok_or(HurwitzError::Overflow("expected count"))?;
            emit(
                out,
                cli.json,
                json!({"N": n.to_string(), "expected": expected.to_string()}),
                format!("N={n} expected={expected}"),
            )?;
            Ok(if n == expected { 0 } else { 4 })
        }
        Command::Verify { max_d, max_r } => {
            let bounds = Bounds {
                max_d: *max_d,
                max_r: *max_r,
                strategy: Strategy::default(),
            };
            let reports = battery::run_all(bounds);
            let all = reports.iter().all(|r| r.passed);
            if cli.json {
                let items: Vec<_> = reports
                    .iter()
                    .map(|r| json!({"criterion": r.criterion, "name": r.name, "passed": r.passed, "detail": r.detail}))
                    .collect();
                emit(out, true, json!({"passed": all, "criteria": items}), String::new())?;
            } else {
                for r in &reports {
                    emit(out, false, json!(null), r.to_string())?;
                }
            }
            Ok(if all { 0 } else { 4 })
        }
        Command::Export {
            ty,
            signs,
            format,
            out: path,
        } => {
            let (g, lambda, mu) = ty.parse()?;
            let signs: SignSplitting = signs.parse()?;
            let format: Format = format.parse()?;
            let classes = enumerate_enhanced_covers(g, &lambda, &mu, &signs)?;
            let text = export_all(classes.iter().map(|c| &c.cover), Some(&signs), format)?;
            std::fs::write(path, text)
                .map_err(|e| HurwitzError::Precondition(format!("cannot write {}: {e}", path.display())))?;
            emit(
                out,
                cli.json,
                json!({"classes": classes.len(), "path": path.display().to_string()}),
                format!("wrote {} classes to {}", classes.len(), path.display()),
            )?;
            Ok(0)
        }
    }
}
