mod input;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use fracdelta::spectral::{default_ablv_radii, default_scan_radii};
use fracdelta::{
    ablv_check, growth_order_fit, kernel_k, kt_diagnostic, residual_frac, resolvent_scan, s_alpha_recurrence,
    sigma_condition_check, solve_frac, Complex64, ComplexMatrix, Error, FractionalOrder, VectorSequence,
};
use serde::Serialize;

use report::{complex_cells, complex_columns, matrix_columns, Cell, Report};

#[derive(Clone, Copy, Debug, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Kernel weights k(0..=steps)
    Kernel,
    /// Resolvent sequence S(0..=steps) of --matrix
    Resolvent,
    /// Solution u(0..=steps) of the fractional Cauchy problem
    Solve,
    /// Growth fit of S and the difference D(n) of order --nu
    Kt,
    /// Unit-circle scan of det(g(z) − T)
    Sigma,
    /// Singularity order of the truncated Z-transform of --sequence
    Scan,
    /// Radial limit (λ−ξ₀)R(λ,T)x at ξ₀
    Ablv,
}

#[derive(Clone, Copy, Debug, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "fracdelta", version, about = "Fractional difference resolvents and spectral diagnostics")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Fractional order in (0, 1]
    #[arg(long)]
    alpha: Option<f64>,
    /// Polynomial growth order
    #[arg(long, default_value_t = 0)]
    nu: u32,
    /// Last index to compute
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value_t = 4096)]
    grid: usize,
    /// Half-width in radians of the excluded arc around z = 1
    #[arg(long, default_value_t = 1e-2)]
    exclusion: f64,
    #[arg(long, default_value_t = 1e-6)]
    threshold: f64,
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    /// Argument of the unit-circle point ξ₀ in radians
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    angle: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Generator T
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Initial value u(0)
    #[arg(long)]
    initial: Option<PathBuf>,
    /// Forcing sequence y(0), y(1), …
    #[arg(long)]
    forcing: Option<PathBuf>,
    /// Sequence of vectors or matrices to scan
    #[arg(long)]
    sequence: Option<PathBuf>,
    /// Vector x for the radial limit
    #[arg(long)]
    vector: Option<PathBuf>,
}

#[derive(Serialize)]
struct JobConfig {
    command: Command,
    alpha: Option<f64>,
    nu: u32,
    steps: Option<usize>,
    grid: usize,
    exclusion: f64,
    threshold: f64,
    tolerance: f64,
    angle: f64,
    format: Format,
    matrix: Option<PathBuf>,
    initial: Option<PathBuf>,
    forcing: Option<PathBuf>,
    sequence: Option<PathBuf>,
    vector: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Numeric(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_numeric() {
            CliError::Numeric(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn required<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Input(format!("--{flag} is required for this command")))
}

fn order(config: &JobConfig) -> Result<FractionalOrder, CliError> {
    Ok(FractionalOrder::new(*required(&config.alpha, "alpha")?)?)
}

fn path<'a>(value: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, CliError> {
    required(value, flag).map(PathBuf::as_path)
}

fn matrix_rows(report: &mut Report, seq: &[ComplexMatrix], start: usize) {
    for (n, m) in seq.iter().enumerate().skip(start) {
        let mut row = vec![Cell::Index(n)];
        row.extend(complex_cells(m.as_slice()));
        report.rows.push(row);
    }
}

fn run_kernel(config: &JobConfig) -> Result<Report, CliError> {
    let k = kernel_k(order(config)?, *required(&config.steps, "steps")?);
    let mut report = Report::with_columns(["n", "k"]);
    report.rows = k.values.iter().enumerate().map(|(n, &v)| vec![Cell::Index(n), Cell::Real(v)]).collect();
    Ok(report)
}

fn run_resolvent(config: &JobConfig, t: &ComplexMatrix) -> Result<Report, CliError> {
    let s = s_alpha_recurrence(t, order(config)?, *required(&config.steps, "steps")?);
    let mut report = Report::with_columns(std::iter::once("n".to_string()).chain(matrix_columns("s", t.dim())));
    matrix_rows(&mut report, s.values(), 0);
    Ok(report)
}

fn run_solve(config: &mut JobConfig, t: &ComplexMatrix) -> Result<Report, CliError> {
    let alpha = order(config)?;
    let u0 = input::vector(path(&config.initial, "initial")?)?;
    let forcing = match input::sequence(path(&config.forcing, "forcing")?)? {
        input::Sequence::Vectors(v) => VectorSequence::new(v)?,
        input::Sequence::Matrices(_) => return Err(CliError::Input("--forcing must hold vectors".into())),
    };
    let steps = *config.steps.get_or_insert(forcing.len());
    let u = solve_frac(t, alpha, &u0, &forcing, steps)?;
    let residual = residual_frac(t, alpha, &u, &forcing)?;
    let mut columns = vec!["n".to_string()];
    columns.extend(complex_columns("u", t.dim()));
    columns.push("residual".into());
    let mut report = Report::with_columns(columns);
    for (n, v) in u.values().iter().enumerate() {
        let mut row = vec![Cell::Index(n)];
        row.extend(complex_cells(v.as_slice()));
        row.push(residual.get(n).map_or(Cell::Empty, |&r| Cell::Real(r)));
        report.rows.push(row);
    }
    report.note("max_residual", residual.iter().cloned().fold(0.0, f64::max));
    Ok(report)
}

fn run_kt(config: &JobConfig, t: &ComplexMatrix) -> Result<Report, CliError> {
    let steps = *required(&config.steps, "steps")?;
    let s = s_alpha_recurrence(t, order(config)?, steps + config.nu as usize + 2);
    let mut report = Report::with_columns(["n", "d_norm"]);
    let start = (steps / 10).max(1);
    if steps + 1 >= start + 16 {
        let fit = growth_order_fit(&s.values()[..=steps], start..=steps)?;
        report.note("growth_class", serde_json::to_value(fit.classification).expect("enum serializes"));
        report.note("nu_hat", fit.nu_hat);
        report.note("exp_rate", fit.exp_rate);
    }
    let diag = kt_diagnostic(s.values(), config.nu, 0..=steps)?;
    report.note("trend_slope", diag.trend_slope);
    report.note("max_norm", diag.max_norm);
    report.rows = diag.values.iter().map(|&(n, v)| vec![Cell::Index(n), Cell::Real(v)]).collect();
    Ok(report)
}

fn run_sigma(config: &JobConfig, t: &ComplexMatrix) -> Result<Report, CliError> {
    let scan = sigma_condition_check(t, order(config)?, config.grid, config.exclusion, config.threshold)?;
    let mut report = Report::with_columns(["theta", "det_abs"]);
    report.note("verdict", scan.verdict);
    report.note("min_detmag", scan.min_detmag);
    report.note("min_angle", scan.min_angle);
    report.rows = scan.samples.iter().map(|&(th, m)| vec![Cell::Real(th), Cell::Real(m)]).collect();
    Ok(report)
}

fn xi0(config: &JobConfig) -> Complex64 {
    Complex64::from_polar(1.0, config.angle)
}

fn profile_report(profile: &[(f64, f64)]) -> Report {
    let mut report = Report::with_columns(["radius", "norm"]);
    report.rows = profile.iter().map(|&(r, v)| vec![Cell::Real(r), Cell::Real(v)]).collect();
    report
}

fn run_scan(config: &mut JobConfig) -> Result<Report, CliError> {
    let sequence = input::sequence(path(&config.sequence, "sequence")?)?;
    let len = match &sequence {
        input::Sequence::Matrices(m) => m.len(),
        input::Sequence::Vectors(v) => v.len(),
    };
    let steps = *config.steps.get_or_insert(len - 1);
    let (radii, point) = (default_scan_radii(), xi0(config));
    let est = match &sequence {
        input::Sequence::Matrices(m) => resolvent_scan(m, point, &radii, steps, config.nu)?,
        input::Sequence::Vectors(v) => resolvent_scan(v, point, &radii, steps, config.nu)?,
    };
    let mut report = profile_report(&est.profile);
    report.note("order_hat", est.order_hat);
    report.note("is_singular", est.is_singular);
    report.note("tail_bound", est.tail_bound);
    Ok(report)
}

fn run_ablv(config: &JobConfig, t: &ComplexMatrix) -> Result<Report, CliError> {
    let x = input::vector(path(&config.vector, "vector")?)?;
    let result = ablv_check(t, &x, xi0(config), &default_ablv_radii(), config.tolerance)?;
    let mut report = profile_report(&result.profile);
    report.note("limit_estimate", result.limit_estimate);
    report.note("satisfied", result.satisfied);
    Ok(report)
}

fn run(args: Args) -> Result<String, CliError> {
    let mut config = JobConfig {
        command: args.command,
        alpha: args.alpha,
        nu: args.nu,
        steps: args.steps,
        grid: args.grid,
        exclusion: args.exclusion,
        threshold: args.threshold,
        tolerance: args.tolerance,
        angle: args.angle,
        format: args.format,
        matrix: args.matrix,
        initial: args.initial,
        forcing: args.forcing,
        sequence: args.sequence,
        vector: args.vector,
    };
    let report = match config.command {
        Command::Kernel => run_kernel(&config)?,
        Command::Scan => run_scan(&mut config)?,
        command => {
            let t = input::matrix(path(&config.matrix, "matrix")?)?;
            match command {
                Command::Resolvent => run_resolvent(&config, &t)?,
                Command::Solve => run_solve(&mut config, &t)?,
                Command::Kt => run_kt(&config, &t)?,
                Command::Sigma => run_sigma(&config, &t)?,
                Command::Ablv => run_ablv(&config, &t)?,
                Command::Kernel | Command::Scan => unreachable!(),
            }
        }
    };
    let config_value = serde_json::to_value(&config).expect("config serializes");
    Ok(match config.format {
        Format::Csv => report.to_csv(&config_value),
        Format::Json => report.to_json(&config_value),
    })
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("numeric failure: {msg}");
            ExitCode::from(3)
        }
    }
}
