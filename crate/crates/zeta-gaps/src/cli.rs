//! Command-line front end. Every solver and check is exposed as a
//! subcommand that emits an [`OutputRecord`] on standard output, as JSON
//! (default) or CSV.
//!
//! Exit codes: 0 on success, 2 on argument errors, 1 when a computation
//! reports a domain/validation error (written as one line on stderr).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::bound::Direction;
use crate::constants::compute_a0_b0;
use crate::ctb;
use crate::error::{Error, Result};
use crate::output::{format_number, OutputRecord};
use crate::tsang;
use crate::unconditional::{gap_rhs, solve_gap_theta, OscillationHypothesis};
use crate::zeros;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Inf-side constant of the closed-form uniform claim.
const CLOSED_FORM_INF_THETA: f64 = 0.61861;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Sup,
    Inf,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Sup => Direction::Sup,
            DirectionArg::Inf => Direction::Inf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Ctb,
    Tsang,
    Unconditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UniformMethod {
    Ctb,
    Tsang,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}

#[derive(Parser)]
#[command(
    name = "zeta-gaps",
    version,
    about = "Solvers, uniform checks, and empirical statistics for normalized gaps between zeta zero ordinates"
)]
struct Cli {
    /// Output format of the result record.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Absolute-error target for the oscillatory quadrature.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_f64)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the limiting deviation constant A0 and its maximizer B0.
    Constants,
    /// Optimized integral-condition bound pairs for r = 1..=20.
    Table1,
    /// Tsang-method bound pairs for r = 1..=20.
    Table2,
    /// Solve one bound family at a single r.
    Solve {
        #[arg(long, value_enum)]
        method: SolveMethod,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Oscillation constant (unconditional method only).
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        /// Oscillation exponent in (0, 1) (unconditional method only).
        #[arg(long, default_value_t = 1.0 / 3.0)]
        beta: f64,
    },
    /// Sweep a uniform-in-r claim and report whether it holds.
    CheckUniform {
        #[arg(long, value_enum)]
        method: UniformMethod,
        /// Upper end of the sweep (default: 10000 for ctb, 1000 for tsang).
        #[arg(long)]
        r_max: Option<u32>,
    },
    /// Locate zero ordinates in a height range.
    Zeros {
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        /// Also write the ordinates as a plain-text zero file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized r-gap statistics over a zero file.
    Gaps {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        zeros_file: PathBuf,
    },
}

/// Parses `args` and runs the selected command, writing the payload to
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                0
            } else {
                let _ = write!(stderr, "{e}");
                2
            };
        }
    };

    match execute(&cli) {
        Ok(record) => {
            let payload = match cli.format {
                OutputFormat::Json => record.to_json(),
                OutputFormat::Csv => record.to_csv(),
            };
            let _ = stdout.write_all(payload.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<OutputRecord> {
    match &cli.command {
        Command::Constants => constants_record(),
        Command::Table1 => table1_record(cli.tol),
        Command::Table2 => table2_record(),
        Command::Solve {
            method,
            r,
            direction,
            c,
            beta,
        } => solve_record(cli.tol, *method, *r, (*direction).into(), *c, *beta),
        Command::CheckUniform { method, r_max } => check_uniform_record(*method, *r_max),
        Command::Zeros { t_min, t_max, out } => zeros_record(*t_min, *t_max, out.as_deref()),
        Command::Gaps { r, zeros_file } => gaps_record(*r, zeros_file),
    }
}

fn constants_record() -> Result<OutputRecord> {
    let opt = compute_a0_b0();
    let mut rec = OutputRecord::new("constants", VERSION);
    rec.tolerance("golden_section_bracket", 1e-8);
    rec.columns(&["a0", "b0", "bracket_lo", "bracket_hi"]);
    rec.row(vec![
        format_number(opt.value),
        format_number(opt.argmax),
        format_number(opt.bracket.0),
        format_number(opt.bracket.1),
    ]);
    Ok(rec)
}

fn table1_record(tol: f64) -> Result<OutputRecord> {
    let rows = ctb::table1_tol(tol)?;
    let mut rec = OutputRecord::new("table1", VERSION);
    rec.tolerance("quadrature", tol);
    rec.tolerance("theta_bisection", 1e-6);
    rec.columns(&[
        "r",
        "theta_sup",
        "ell_sup",
        "margin_sup",
        "theta_inf",
        "ell_inf",
        "margin_inf",
    ]);
    for row in rows {
        rec.row(vec![
            row.r.to_string(),
            format_number(row.sup.theta),
            format_number(row.sup.ell.unwrap_or(f64::NAN)),
            format_number(row.sup.margin),
            format_number(row.inf.theta),
            format_number(row.inf.ell.unwrap_or(f64::NAN)),
            format_number(row.inf.margin),
        ]);
    }
    Ok(rec)
}

fn table2_record() -> Result<OutputRecord> {
    let rows = tsang::table2()?;
    let mut rec = OutputRecord::new("table2", VERSION);
    rec.tolerance("theta_bisection", 1e-7);
    rec.columns(&["r", "theta_sup", "margin_sup", "theta_inf", "margin_inf"]);
    for row in rows {
        rec.row(vec![
            row.r.to_string(),
            format_number(row.theta_sup),
            format_number(row.margin_sup),
            format_number(row.theta_inf),
            format_number(row.margin_inf),
        ]);
    }
    Ok(rec)
}

fn solve_record(
    tol: f64,
    method: SolveMethod,
    r: u32,
    direction: Direction,
    c: f64,
    beta: f64,
) -> Result<OutputRecord> {
    let mut rec = OutputRecord::new("solve", VERSION);
    rec.parameter("r", r.to_string());
    rec.parameter("direction", direction.to_string());
    rec.columns(&["method", "r", "direction", "theta", "ell", "margin"]);
    let (name, theta, ell, margin) = match method {
        SolveMethod::Ctb => {
            rec.parameter("method", "ctb");
            rec.tolerance("quadrature", tol);
            rec.tolerance("theta_bisection", 1e-6);
            let res = ctb::optimize_ell_tol(r, direction, tol)?;
            ("ctb", res.theta, res.ell, res.margin)
        }
        SolveMethod::Tsang => {
            rec.parameter("method", "tsang");
            rec.tolerance("theta_bisection", 1e-7);
            let res = tsang::solve_theta_tsang(r, direction)?;
            ("tsang", res.theta, res.ell, res.margin)
        }
        SolveMethod::Unconditional => {
            rec.parameter("method", "unconditional");
            rec.parameter("c", format_number(c));
            rec.parameter("beta", format_number(beta));
            let hyp = OscillationHypothesis::new(c, beta)?;
            let theta = solve_gap_theta(&hyp, r, direction)?;
            let margin = gap_rhs(&hyp, r, direction, theta)? - theta;
            ("unconditional", theta, None, margin)
        }
    };
    rec.row(vec![
        name.to_string(),
        r.to_string(),
        direction.to_string(),
        format_number(theta),
        ell.map(format_number).unwrap_or_default(),
        format_number(margin),
    ]);
    Ok(rec)
}

fn check_uniform_record(method: UniformMethod, r_max: Option<u32>) -> Result<OutputRecord> {
    let mut rec = OutputRecord::new("check-uniform", VERSION);
    match method {
        UniformMethod::Ctb => {
            let r_max = r_max.unwrap_or(10_000);
            rec.parameter("method", "ctb");
            rec.parameter("r_max", r_max.to_string());
            rec.columns(&["direction", "theta", "r_min", "r_max", "passed", "worst_margin"]);
            let a0 = compute_a0_b0().value;
            for (direction, theta) in [
                (Direction::Sup, a0),
                (Direction::Inf, CLOSED_FORM_INF_THETA),
            ] {
                let (ok, worst) = ctb::uniform_check(direction, theta, r_max)?;
                rec.row(vec![
                    direction.to_string(),
                    format_number(theta),
                    "8".to_string(),
                    r_max.to_string(),
                    ok.to_string(),
                    format_number(worst),
                ]);
            }
        }
        UniformMethod::Tsang => {
            let r_max = r_max.unwrap_or(1000);
            rec.parameter("method", "tsang");
            rec.parameter("r_max", r_max.to_string());
            rec.columns(&["direction", "theta", "r_min", "r_max", "passed"]);
            let (sup_ok, inf_ok) = tsang::uniform_tsang_check(r_max)?;
            for (direction, theta, ok) in [
                (Direction::Sup, tsang::UNIFORM_SUP_THETA, sup_ok),
                (Direction::Inf, tsang::UNIFORM_INF_THETA, inf_ok),
            ] {
                rec.row(vec![
                    direction.to_string(),
                    format_number(theta),
                    "5".to_string(),
                    r_max.to_string(),
                    ok.to_string(),
                ]);
            }
        }
    }
    Ok(rec)
}

fn zeros_record(t_min: f64, t_max: f64, out: Option<&std::path::Path>) -> Result<OutputRecord> {
    let table = zeros::find_zeros(t_min, t_max)?;
    if let Some(path) = out {
        let mut text = format!("# zeta zero ordinates located in [{t_min}, {t_max}]\n");
        for &g in table.ordinates() {
            text.push_str(&format!("{g:.9}\n"));
        }
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    let mut rec = OutputRecord::new("zeros", VERSION);
    rec.parameter("t_min", format_number(t_min));
    rec.parameter("t_max", format_number(t_max));
    rec.parameter("count", table.len().to_string());
    if let Some(path) = out {
        rec.parameter("out", path.display().to_string());
    }
    rec.tolerance("zero_bisection", 1e-9);
    rec.columns(&["n", "ordinate"]);
    for (i, &g) in table.ordinates().iter().enumerate() {
        rec.row(vec![(i + 1).to_string(), format_number(g)]);
    }
    Ok(rec)
}

fn gaps_record(r: u32, zeros_file: &PathBuf) -> Result<OutputRecord> {
    let table = zeros::load_zeros(zeros_file)?;
    let stats = zeros::gap_extrema(&table, r)?;
    let mut rec = OutputRecord::new("gaps", VERSION);
    rec.parameter("r", r.to_string());
    rec.parameter("zeros_file", zeros_file.display().to_string());
    rec.columns(&[
        "r",
        "count",
        "min_normalized",
        "mean_normalized",
        "max_normalized",
        "argmin_index",
        "argmax_index",
        "density_min",
        "density_mean",
        "density_max",
    ]);
    rec.row(vec![
        stats.r.to_string(),
        stats.count.to_string(),
        format_number(stats.min_normalized),
        format_number(stats.mean_normalized),
        format_number(stats.max_normalized),
        stats.argmin_index.to_string(),
        stats.argmax_index.to_string(),
        format_number(stats.density_min),
        format_number(stats.density_mean),
        format_number(stats.density_max),
    ]);
    Ok(rec)
}
