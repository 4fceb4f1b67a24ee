//! Command-line front end: single-instance queries, grid sweeps over the
//! existence region, and the verification suites as subcommands.
//!
//! Exit codes: 0 success, 1 usage error, 2 not realizable, 3 quadrature
//! convergence failure.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use antiprism::volume::{DEFAULT_MAX_EVALUATIONS, DEFAULT_REL_TOL};
use antiprism::{euclidean, hyperbolic, verify, volume, AntiprismSpec, Error};

use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "antiprism",
    version,
    about = "Existence, embedding, dihedral angles and volumes of compact antiprisms",
    after_help = "Exit codes: 0 ok, 1 usage error, 2 not realizable, 3 convergence failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyperbolic existence test: margin and threshold length only.
    Exists(PointArgs),
    /// Hyperbolic embedding parameters r and h.
    Params(PointArgs),
    /// Hyperbolic dihedral angles and their excess over 2 pi.
    Angles(PointArgs),
    /// Hyperbolic volume by adaptive quadrature (implies params and angles).
    Volume(PointArgs),
    /// Euclidean counterpart: existence, parameters, angles, closed-form volume.
    Euclidean(PointArgs),
    /// Rectangular (a, c) sweep at fixed n; one output row per grid point.
    Sweep(SweepArgs),
    /// Run the verification suites and report pass/fail counts.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct PointArgs {
    /// Polygon order (n >= 2).
    #[arg(long)]
    n: u32,
    /// Polygon edge length.
    #[arg(long)]
    a: f64,
    /// Lateral edge length.
    #[arg(long)]
    c: f64,
    /// Relative tolerance for the volume quadrature, in [1e-13, 1e-3].
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    rel_tol: f64,
    /// Evaluation budget for the volume quadrature.
    #[arg(long, default_value_t = DEFAULT_MAX_EVALUATIONS)]
    max_evals: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Report angles in degrees (text output only; files stay in radians).
    #[arg(long)]
    degrees: bool,
    /// Accept inputs on the degeneration boundary (within roundoff of
    /// margin = 0), reporting h = 0 and volume 0.
    #[arg(long)]
    allow_degenerate: bool,
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Polygon order (n >= 2).
    #[arg(long)]
    n: u32,
    #[arg(long)]
    a_min: f64,
    #[arg(long)]
    a_max: f64,
    /// Number of a grid points (endpoints inclusive).
    #[arg(long)]
    a_steps: u32,
    #[arg(long)]
    c_min: f64,
    #[arg(long)]
    c_max: f64,
    /// Number of c grid points (endpoints inclusive).
    #[arg(long)]
    c_steps: u32,
    /// Relative tolerance for the volume quadrature, in [1e-13, 1e-3].
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    rel_tol: f64,
    /// Evaluation budget per grid point.
    #[arg(long, default_value_t = DEFAULT_MAX_EVALUATIONS)]
    max_evals: u64,
    /// Output format; `text` falls back to CSV for sweeps.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads for the sweep; defaults to ANTIPRISM_JOBS or all
    /// cores. Output order is deterministic regardless.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Run the reduced grids (a few seconds instead of the full suites).
    #[arg(long)]
    quick: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };

    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotRealizable { .. } => 2,
        Error::ConvergenceFailure { .. } => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Exists(args) => point_command("exists", &args),
        Command::Params(args) => point_command("params", &args),
        Command::Angles(args) => point_command("angles", &args),
        Command::Volume(args) => point_command("volume", &args),
        Command::Euclidean(args) => euclidean_command(&args),
        Command::Sweep(args) => sweep_command(&args),
        Command::Verify(args) => Ok(verify_command(&args)),
    }
}

fn validate_rel_tol(rel_tol: f64) -> Result<(), Error> {
    if !(1e-13..=1e-3).contains(&rel_tol) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    Ok(())
}

/// Roundoff window around margin = 0 accepted as "on the boundary" when
/// `--allow-degenerate` is set.
fn degenerate_within_roundoff(margin: f64, scale: f64) -> bool {
    margin.abs() <= 8.0 * f64::EPSILON * scale
}

fn point_command(command: &'static str, args: &PointArgs) -> Result<ExitCode, Error> {
    validate_rel_tol(args.rel_tol)?;
    let spec = AntiprismSpec::new(args.n, args.a, args.c)?;
    let existence = hyperbolic::exists(spec)?;

    let mut report = Report::new(command, args.n, args.a, args.c, args.rel_tol);
    report.exists = Some(existence.exists);
    report.margin = Some(existence.margin);
    report.c0 = Some(existence.c0);

    let boundary_scale = 2.0 + spec.a().cosh() + 2.0 * spec.c().cosh();
    let degenerate_ok =
        args.allow_degenerate && degenerate_within_roundoff(existence.margin, boundary_scale);

    if !existence.exists && !degenerate_ok {
        report.emit(args.format, args.degrees);
        return Ok(ExitCode::from(2));
    }

    if degenerate_ok && !existence.exists {
        // Flattened solid: height and volume vanish by definition.
        if command != "exists" {
            let params = hyperbolic::params(AntiprismSpec::new(
                args.n,
                args.a,
                // Nudge inside to fetch the limiting radius.
                existence.c0 + 1e-9,
            )?)?;
            report.r = Some(params.r);
            report.h = Some(0.0);
        }
        if matches!(command, "volume") {
            report.volume = Some(0.0);
            report.abs_error_estimate = Some(0.0);
            report.evaluations = Some(0);
        }
        report.emit(args.format, args.degrees);
        return Ok(ExitCode::SUCCESS);
    }

    if matches!(command, "params" | "angles" | "volume") {
        let params = hyperbolic::params(spec)?;
        report.r = Some(params.r);
        report.h = Some(params.h);
    }
    if matches!(command, "angles" | "volume") {
        let angles = hyperbolic::angles(spec)?;
        report.angle_a = Some(angles.along_a);
        report.angle_c = Some(angles.along_c);
        report.angle_excess = Some(angles.excess());
    }
    if command == "volume" {
        let result = volume::hyperbolic_volume_with_budget(spec, args.rel_tol, args.max_evals)?;
        report.volume = Some(result.value);
        report.abs_error_estimate = Some(result.abs_error_estimate);
        report.evaluations = Some(result.evaluations);
    }

    report.emit(args.format, args.degrees);
    Ok(ExitCode::SUCCESS)
}

fn euclidean_command(args: &PointArgs) -> Result<ExitCode, Error> {
    validate_rel_tol(args.rel_tol)?;
    let spec = AntiprismSpec::new(args.n, args.a, args.c)?;
    let existence = euclidean::exists(spec);

    let mut report = Report::new("euclidean", args.n, args.a, args.c, args.rel_tol);
    report.exists = Some(existence.exists);
    report.margin = Some(existence.margin);

    let boundary_scale = 4.0 * args.c * args.c + args.a * args.a;
    let degenerate_ok =
        args.allow_degenerate && degenerate_within_roundoff(existence.margin, boundary_scale);

    if !existence.exists && !degenerate_ok {
        report.emit(args.format, args.degrees);
        return Ok(ExitCode::from(2));
    }

    if degenerate_ok && !existence.exists {
        let nf = args.n as f64;
        report.r = Some(args.a / (2.0 * (std::f64::consts::PI / nf).sin()));
        report.h = Some(0.0);
        report.volume = Some(0.0);
        report.abs_error_estimate = Some(0.0);
        report.emit(args.format, args.degrees);
        return Ok(ExitCode::SUCCESS);
    }

    let params = euclidean::params(spec)?;
    report.r = Some(params.r);
    report.h = Some(params.h);
    let angles = euclidean::angles(spec)?;
    report.angle_a = Some(angles.along_a);
    report.angle_c = Some(angles.along_c);
    report.angle_excess = Some(angles.excess());
    report.volume = Some(euclidean::volume(spec)?);
    report.abs_error_estimate = Some(0.0);

    report.emit(args.format, args.degrees);
    Ok(ExitCode::SUCCESS)
}

fn grid_values(lo: f64, hi: f64, steps: u32) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn sweep_command(args: &SweepArgs) -> Result<ExitCode, Error> {
    validate_rel_tol(args.rel_tol)?;
    if args.a_steps < 1 || args.c_steps < 1 {
        return Err(Error::InvalidSpec("sweep steps must be at least 1".into()));
    }
    if !(args.a_min > 0.0 && args.a_min <= args.a_max && args.c_min > 0.0 && args.c_min <= args.c_max) {
        return Err(Error::InvalidSpec(
            "sweep ranges must be positive and ordered (min <= max)".into(),
        ));
    }
    // Validate n and the edge cap once up front.
    hyperbolic::exists(AntiprismSpec::new(args.n, args.a_max, args.c_max)?)?;

    let jobs = args
        .jobs
        .or_else(|| std::env::var("ANTIPRISM_JOBS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(0);

    let grid: Vec<(f64, f64)> = grid_values(args.a_min, args.a_max, args.a_steps)
        .into_iter()
        .flat_map(|a| {
            grid_values(args.c_min, args.c_max, args.c_steps)
                .into_iter()
                .map(move |c| (a, c))
        })
        .collect();

    let n = args.n;
    let rel_tol = args.rel_tol;
    let max_evals = args.max_evals;
    let compute = move |&(a, c): &(f64, f64)| -> Report { sweep_point(n, a, c, rel_tol, max_evals) };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidSpec(format!("cannot build worker pool: {e}")))?;
    let rows: Vec<Report> = pool.install(|| {
        use rayon::prelude::*;
        grid.par_iter().map(compute).collect()
    });

    report::emit_sweep(&rows, args.format);
    Ok(ExitCode::SUCCESS)
}

fn sweep_point(n: u32, a: f64, c: f64, rel_tol: f64, max_evals: u64) -> Report {
    let mut row = Report::new("sweep", n, a, c, rel_tol);
    let spec = match AntiprismSpec::new(n, a, c) {
        Ok(s) => s,
        Err(_) => return row,
    };
    let existence = match hyperbolic::exists(spec) {
        Ok(e) => e,
        Err(_) => return row,
    };
    row.exists = Some(existence.exists);
    row.margin = Some(existence.margin);
    row.c0 = Some(existence.c0);
    if !existence.exists {
        return row;
    }
    if let Ok(params) = hyperbolic::params(spec) {
        row.r = Some(params.r);
        row.h = Some(params.h);
    }
    if let Ok(angles) = hyperbolic::angles(spec) {
        row.angle_a = Some(angles.along_a);
        row.angle_c = Some(angles.along_c);
        row.angle_excess = Some(angles.excess());
    }
    // Convergence failures leave the volume fields empty rather than
    // aborting the whole sweep.
    if let Ok(result) = volume::hyperbolic_volume_with_budget(spec, rel_tol, max_evals) {
        row.volume = Some(result.value);
        row.abs_error_estimate = Some(result.abs_error_estimate);
        row.evaluations = Some(result.evaluations);
    }
    row
}

fn verify_command(args: &VerifyArgs) -> ExitCode {
    let reports = verify::run(args.quick);
    let mut all_passed = true;
    let mut passed_count = 0usize;
    for report in &reports {
        let status = if report.passed() { "pass" } else { "FAIL" };
        println!(
            "{status}  {:<34} {:>5} checks  worst {:>10.3e}  tol {:>8.1e}{}",
            report.name,
            report.checks,
            report.worst,
            report.tolerance,
            if report.detail.is_empty() { String::new() } else { format!("  [{}]", report.detail) }
        );
        if report.passed() {
            passed_count += 1;
        } else {
            all_passed = false;
        }
    }
    println!("{passed_count}/{} suites passed", reports.len());
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
