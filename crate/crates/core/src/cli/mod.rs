//! The `forge` command line: solver generation, method-file validation,
//! integration runs and experiment reports, all emitting CSV.

pub mod csv;
pub mod experiments;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::codegen::{generate_module_set, TemplateSet};
use crate::generated::GeneratedMethod;
use crate::problems::Problem;
use crate::stepcontrol::{
    adaptive_integrate, adaptive_integrate_last, fixed_integrate, fixed_integrate_last, integrate_info,
    IntegrationError, Options, Tolerances,
};
use crate::tableau::{
    parse_method_file, shipped_methods, validate_tableau, validate_tableau_strict, ButcherTableau,
    ValidationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCode {
    Usage,
    Validation,
    Parse,
    Io,
    Integration,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Usage => "E_USAGE",
            ErrorCode::Validation => "E_VALIDATION",
            ErrorCode::Parse => "E_PARSE",
            ErrorCode::Io => "E_IO",
            ErrorCode::Integration => "E_INTEGRATION",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCode::Usage | ErrorCode::Validation | ErrorCode::Parse => 2,
            ErrorCode::Io | ErrorCode::Integration => 1,
        }
    }
}

/// Printed as `error[CODE]: message`, followed by indented detail lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: ErrorCode,
    pub message: String,
    pub details: Vec<String>,
}

impl CliError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            details: Vec::new(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        CliError::new(ErrorCode::Io, format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code.as_str(), self.message)?;
        for d in &self.details {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

impl From<IntegrationError> for CliError {
    fn from(e: IntegrationError) -> Self {
        match e {
            IntegrationError::InvalidInput(m) => CliError::new(ErrorCode::Usage, m),
            e => CliError::new(ErrorCode::Integration, e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "forge", version, about = "Embedded explicit Runge-Kutta solver forge")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a method file and write one solver module per method plus an index.
    Generate(GenerateArgs),
    /// Check every tableau of a method file.
    Validate(ValidateArgs),
    /// Integrate a benchmark problem with a generated solver.
    Solve(SolveArgs),
    /// Tabulate an experiment over several methods.
    Report(ReportArgs),
    /// Compare generated and interpreted kernels on fixed Brusselator steps.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub methods: PathBuf,
    /// Directory that receives `generated/`.
    #[arg(long)]
    pub out: PathBuf,
    /// Also report second-order condition warnings.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub methods: PathBuf,
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputKind {
    Trajectory,
    Last,
    Steplog,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub method: String,
    /// One of vdp, rigid-body, brusselator, arenstorf:1, arenstorf:2, arenstorf:3.
    #[arg(long)]
    pub problem: String,
    /// Absolute tolerance; zero when only --rtol is given.
    #[arg(long)]
    pub atol: Option<f64>,
    /// Relative tolerance; zero when only --atol is given.
    #[arg(long)]
    pub rtol: Option<f64>,
    /// Fixed step size; excludes the tolerances.
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long)]
    pub h0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t1: Option<f64>,
    #[arg(long)]
    pub max_steps: Option<usize>,
    /// Output file; standard output when absent or `-`.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputKind::Trajectory)]
    pub output_kind: OutputKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    ArenstorfTable,
    Convergence,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(value_enum)]
    pub kind: ReportKind,
    /// Repeatable; every generated method when absent.
    #[arg(long)]
    pub method: Vec<String>,
    #[arg(long, default_value_t = 1)]
    pub group: u8,
    #[arg(long, default_value_t = 1e-13)]
    pub atol: f64,
    #[arg(long, default_value_t = 0.0)]
    pub rtol: f64,
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "ERK43b")]
    pub method: String,
    /// Step size on [0, 20]; the default gives 10^5 steps.
    #[arg(long, default_value_t = 2e-4)]
    pub h: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let mut cerr = CliError::new(ErrorCode::Usage, first);
            cerr.details = lines.map(|l| l.trim().to_string()).collect();
            let _ = writeln!(err, "{cerr}");
            return ErrorCode::Usage.exit_code();
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code.exit_code()
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Generate(a) => cmd_generate(a, out, err),
        Command::Validate(a) => cmd_validate(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Report(a) => cmd_report(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    }
}

fn with_output<F>(path: Option<&Path>, out: &mut dyn Write, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        None => f(out).map_err(|e| CliError::new(ErrorCode::Io, format!("standard output: {e}"))),
        Some(p) if p == Path::new("-") => {
            f(out).map_err(|e| CliError::new(ErrorCode::Io, format!("standard output: {e}")))
        }
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::io(p, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::io(p, e))
        }
    }
}

fn load_methods(path: &Path, strict: bool) -> Result<(Vec<ButcherTableau>, Vec<ValidationReport>), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let methods = parse_method_file(&bytes)
        .map_err(|e| CliError::new(ErrorCode::Parse, format!("{}: {e}", path.display())))?;
    let check = if strict {
        validate_tableau_strict
    } else {
        validate_tableau
    };
    let reports = methods.iter().map(check).collect();
    Ok((methods, reports))
}

fn validation_failure(path: &Path, reports: &[ValidationReport]) -> Option<CliError> {
    let bad: Vec<&ValidationReport> = reports.iter().filter(|r| !r.is_ok()).collect();
    if bad.is_empty() {
        return None;
    }
    let mut e = CliError::new(
        ErrorCode::Validation,
        format!("{}: {} invalid tableau(s)", path.display(), bad.len()),
    );
    for r in bad {
        e.details
            .extend(r.violations.iter().map(|v| format!("{}: {v}", r.method)));
    }
    Some(e)
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (methods, reports) = load_methods(&a.methods, a.strict)?;
    if let Some(e) = validation_failure(&a.methods, &reports) {
        return Err(e);
    }
    for r in &reports {
        for w in &r.warnings {
            let _ = writeln!(err, "warning: {}: {w}", r.method);
        }
    }
    let manifest = generate_module_set(&methods, &a.out, &TemplateSet::builtin()).map_err(|e| {
        let code = match e {
            crate::codegen::CodegenError::Io { .. } => ErrorCode::Io,
            _ => ErrorCode::Validation,
        };
        CliError::new(code, e.to_string())
    })?;
    write!(out, "{manifest}").map_err(|e| CliError::new(ErrorCode::Io, format!("standard output: {e}")))?;
    Ok(0)
}

pub fn cmd_validate(a: &ValidateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (_, reports) = load_methods(&a.methods, a.strict)?;
    with_output(None, out, |w| {
        for r in &reports {
            writeln!(w, "{r}")?;
        }
        Ok(())
    })?;
    match validation_failure(&a.methods, &reports) {
        Some(e) => Err(e),
        None => Ok(0),
    }
}

fn lookup_method(name: &str) -> Result<GeneratedMethod, CliError> {
    GeneratedMethod::by_name(name).ok_or_else(|| {
        let known: Vec<&str> = GeneratedMethod::ALL.iter().map(|m| m.method_name()).collect();
        CliError::new(
            ErrorCode::Usage,
            format!("unknown method `{name}` (generated: {})", known.join(", ")),
        )
    })
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::new(ErrorCode::Usage, message)
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let method = lookup_method(&a.method)?;
    let problem: Problem = a.problem.parse().map_err(|e| usage(format!("{e}")))?;
    let (d0, d1) = problem.interval();
    let (t0, t1) = (a.t0.unwrap_or(d0), a.t1.unwrap_or(d1));
    if !(t0.is_finite() && t1.is_finite() && t1 > t0) {
        return Err(usage(format!("empty or invalid interval [{t0}, {t1}]")));
    }
    let y0 = problem.initial_state();
    let output = a.output.as_deref();
    let tolerances = match (a.atol, a.rtol) {
        (None, None) => None,
        (atol, rtol) => Some(Tolerances::new(atol.unwrap_or(0.0), rtol.unwrap_or(0.0))?),
    };
    match (tolerances, a.h) {
        (Some(_), Some(_)) => Err(usage("--h excludes --atol and --rtol")),
        (None, None) => Err(usage(
            "either tolerances (--atol, --rtol) or a fixed step --h is required",
        )),
        (None, Some(h)) => {
            if a.h0.is_some() || a.max_steps.is_some() {
                return Err(usage("--h0 and --max-steps apply to adaptive runs only"));
            }
            match a.output_kind {
                OutputKind::Steplog => Err(usage("a fixed-step run has no step log")),
                OutputKind::Trajectory => {
                    let traj = fixed_integrate(&method, &problem, h, &y0, t0, t1)?;
                    with_output(output, out, |w| csv::write_trajectory(w, &traj))?;
                    Ok(0)
                }
                OutputKind::Last => {
                    let (t, y) = fixed_integrate_last(&method, &problem, h, &y0, t0, t1)?;
                    with_output(output, out, |w| csv::write_last(w, t, &y))?;
                    Ok(0)
                }
            }
        }
        (Some(tol), None) => {
            let mut opts = Options {
                h0: a.h0,
                ..Options::default()
            };
            if let Some(n) = a.max_steps {
                opts.max_steps = n;
            }
            match a.output_kind {
                OutputKind::Trajectory => {
                    let traj = adaptive_integrate(&method, &problem, &tol, &y0, t0, t1, &opts)?;
                    with_output(output, out, |w| csv::write_trajectory(w, &traj))?;
                }
                OutputKind::Last => {
                    let (t, y) = adaptive_integrate_last(&method, &problem, &tol, &y0, t0, t1, &opts)?;
                    with_output(output, out, |w| csv::write_last(w, t, &y))?;
                }
                OutputKind::Steplog => {
                    let log = integrate_info(&method, &problem, &tol, &y0, t0, t1, &opts)?;
                    with_output(output, out, |w| csv::write_steplog(w, &log))?;
                }
            }
            Ok(0)
        }
    }
}

fn report_methods(requested: &[String]) -> Vec<String> {
    if requested.is_empty() {
        GeneratedMethod::ALL
            .iter()
            .map(|m| m.method_name().to_string())
            .collect()
    } else {
        requested.to_vec()
    }
}

/// Exit code 0 when every row succeeded, 1 when the table has failed or
/// missing rows.
pub fn cmd_report(a: &ReportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let methods = report_methods(&a.method);
    match a.kind {
        ReportKind::ArenstorfTable => {
            Problem::arenstorf(a.group).map_err(|e| usage(e.to_string()))?;
            let tol = Tolerances::new(a.atol, a.rtol)?;
            let mut opts = Options::default();
            if let Some(n) = a.max_steps {
                opts.max_steps = n;
            }
            let rows = experiments::arenstorf_table(&methods, a.group, &tol, &opts);
            with_output(a.output.as_deref(), out, |w| {
                csv::write_closure_table(w, a.group, &rows)
            })?;
            let all_ok = rows.iter().all(|r| r.status == experiments::RowStatus::Ok);
            Ok(if all_ok { 0 } else { 1 })
        }
        ReportKind::Convergence => {
            let rows = experiments::convergence_table(&methods, &shipped_methods());
            with_output(a.output.as_deref(), out, |w| {
                csv::write_convergence_table(w, &rows)
            })?;
            Ok(if rows.iter().all(|r| r.1.is_ok()) { 0 } else { 1 })
        }
    }
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let method = lookup_method(&a.method)?;
    if !(a.h > 0.0 && a.h.is_finite()) {
        return Err(usage(format!("--h must be positive, got {}", a.h)));
    }
    let tableau = shipped_methods()
        .into_iter()
        .find(|t| t.name() == a.method)
        .ok_or_else(|| usage(format!("no shipped tableau for `{}`", a.method)))?;
    let steps = crate::stepcontrol::fixed_step_count(20.0, a.h);
    let result = experiments::bench_kernels(method, &tableau, steps, 3)?;
    with_output(a.output.as_deref(), out, |w| csv::write_bench(w, &result))?;
    Ok(0)
}
