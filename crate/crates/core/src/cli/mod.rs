//! Command-line front end: energy sweeps, plot data and the validation report.
//!
//! Every data command writes CSV to `--out` or standard output. Exit codes
//! are [`EXIT_OK`], [`EXIT_USAGE`], [`EXIT_NUMERICAL`] and [`EXIT_VALIDATION`].

pub mod config;
pub mod figures;
pub mod output;
pub mod sweep;
pub mod validate;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use config::{CommonArgs, Params, SweepConfig};
use sweep::{failure_fraction, FAILURE_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pdm-tunnel", version, about = "Tunnelling through barriers with position-dependent effective mass")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// T and R over a uniform energy grid for one profile.
    Sweep(CommonArgs),
    /// Effective potential across the barrier for every catalog profile.
    Fig1(CommonArgs),
    /// T(E/V0) of constant-mass slabs with mass ratio a to the leads.
    Fig2(Fig2Args),
    /// T(E) of the graded profiles from both solvers side by side.
    Fig4(CommonArgs),
    /// Invariant checks and the formula-correction ledger.
    Validate(CommonArgs),
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Slab-to-lead mass ratio; repeat for several curves.
    #[arg(long = "a")]
    pub a: Vec<f64>,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Config(_) => EXIT_USAGE,
                _ => EXIT_NUMERICAL,
            }
        }
    }
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write(&mut w)?;
            w.flush().map_err(|e| Error::Numerical(format!("writing {}: {e}", path.display())))
        }
        None => write(stdout),
    }
}

fn budget_code(failures: usize, total: usize, stderr_note: &mut Vec<String>) -> i32 {
    if failures > 0 {
        stderr_note.push(format!("{failures} of {total} points failed"));
    }
    if failure_fraction(failures, total) > FAILURE_BUDGET {
        EXIT_NUMERICAL
    } else {
        EXIT_OK
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let mut notes = Vec::new();
    let code = match command {
        Command::Sweep(args) => {
            let cfg = SweepConfig::from_params(&Params::resolve(&args, &[])?)?;
            let rows = sweep::run_sweep(&cfg);
            emit(cfg.out.as_deref(), stdout, |w| sweep::write_sweep(w, &rows))?;
            budget_code(rows.iter().filter(|r| r.is_failure()).count(), rows.len(), &mut notes)
        }
        Command::Fig1(args) => {
            let p = Params::resolve(&args, &[])?;
            let rows = figures::fig1(&p)?;
            emit(p.out.as_deref(), stdout, |w| figures::write_fig1(w, &rows))?;
            EXIT_OK
        }
        Command::Fig2(args) => {
            let p = Params::resolve(&args.common, &args.a)?;
            let rows = figures::fig2(&p)?;
            emit(p.out.as_deref(), stdout, |w| figures::write_fig2(w, &rows))?;
            budget_code(rows.iter().filter(|r| r.t.is_none()).count(), rows.len(), &mut notes)
        }
        Command::Fig4(args) => {
            let p = Params::resolve(&args, &[])?;
            let rows = figures::fig4(&p)?;
            emit(p.out.as_deref(), stdout, |w| figures::write_fig4(w, &rows))?;
            budget_code(rows.iter().filter(|r| r.is_failure()).count(), rows.len(), &mut notes)
        }
        Command::Validate(args) => {
            let p = Params::resolve(&args, &[])?;
            let report = validate::run_validation(p.execution);
            report.render(&mut *stdout).map_err(|e| Error::Numerical(format!("writing report: {e}")))?;
            if let Some(path) = p.out.as_deref() {
                emit(Some(path), stdout, |w| report.ledger.write_csv(w))?;
            }
            if report.mandatory_failures() > 0 {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            }
        }
    };
    for note in notes {
        let _ = writeln!(stderr, "warning: {note}");
    }
    Ok(code)
}
