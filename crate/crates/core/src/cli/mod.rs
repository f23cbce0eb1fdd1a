//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain/numeric/I-O error, 2 on a usage
//! error (including method/potential combinations that make no sense).

mod plot;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{self, Dataset};
use crate::error::{Error, Result};
use crate::model::{CouplingStrength, Method, PotentialKind, QuantumNumbers};
use crate::solver::{self, SolverConfig};
use crate::{critical_coupling, estimate_energy};
pub use plot::gnuplot_script;
pub use table::{emit_table, write_table, CriticalRecord, EnergyRecord, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wellbound",
    version,
    about = "Bound states and critical couplings of Gaussian and Yukawa wells"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy of one (n, l) state.
    Energy(EnergyArgs),
    /// Critical coupling of one (n, l) state.
    Critical(CriticalArgs),
    /// Number of bound states with a given l.
    Count(CountArgs),
    /// Energies over a grid of xi (fixed l) or of l (fixed xi).
    Sweep(SweepArgs),
    /// Regenerate the data behind figure 1-4.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Gaussian,
    Yukawa,
}

impl From<PotentialArg> for PotentialKind {
    fn from(p: PotentialArg) -> Self {
        match p {
            PotentialArg::Gaussian => PotentialKind::Gaussian,
            PotentialArg::Yukawa => PotentialKind::Yukawa,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Koksal,
    Variational,
    Reference,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Koksal => vec![Method::Koksal],
            MethodArg::Variational => vec![Method::Variational],
            MethodArg::Reference => vec![Method::Reference],
            MethodArg::All => vec![Method::Koksal, Method::Variational, Method::Reference],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Numerov step.
    #[arg(long)]
    pub h: Option<f64>,
    /// Fixed integration cutoff (adaptive by default).
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    /// Energy tolerance of the eigenvalue refinement.
    #[arg(long)]
    pub tol: Option<f64>,
}

impl SolverArgs {
    pub fn config(&self) -> SolverConfig {
        let d = SolverConfig::default();
        SolverConfig {
            h: self.h.unwrap_or(d.h),
            r_max: self.r_max.or(d.r_max),
            energy_tol: self.tol.unwrap_or(d.energy_tol),
            ..d
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Write a table here instead of printing to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EnergyArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialArg,
    #[arg(long)]
    pub xi: f64,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CriticalArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialArg,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialArg,
    #[arg(long)]
    pub xi: f64,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialArg,
    /// Coupling grid, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub xi: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Fixed l for a xi sweep.
    #[arg(long, default_value_t = 0, conflicts_with = "l_max")]
    pub l: u32,
    /// Sweep l = 0..=l_max at a single xi instead.
    #[arg(long = "l-max")]
    pub l_max: Option<u32>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Figure number.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
    pub id: u8,
    /// Largest l (figures 1, 3, 4).
    #[arg(long = "l-max")]
    pub l_max: Option<u32>,
    /// Coupling(s): one value for figure 1, a list for figure 2.
    #[arg(long, value_delimiter = ',')]
    pub xi: Vec<f64>,
    /// Also write a gnuplot script for the table.
    #[arg(long = "plot-script")]
    pub plot_script: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Formats with 12 significant digits.
pub fn format_number(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 {
            format!("{:.11}", 0.0)
        } else {
            x.to_string()
        };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

fn check_combination(kind: PotentialKind, method: MethodArg, n: u32) -> CliResult {
    if method == MethodArg::Koksal && kind == PotentialKind::Yukawa {
        return Err(Failure::Usage(
            "--method koksal is only defined for --potential gaussian".into(),
        ));
    }
    if method == MethodArg::Variational && n != 0 {
        return Err(Failure::Usage("--method variational only covers --n 0".into()));
    }
    Ok(())
}

fn applicable(kind: PotentialKind, n: u32, methods: Vec<Method>) -> Vec<Method> {
    methods
        .into_iter()
        .filter(|m| !(*m == Method::Koksal && kind == PotentialKind::Yukawa))
        .filter(|m| !(*m == Method::Variational && n != 0))
        .collect()
}

fn coupling(xi: f64) -> std::result::Result<CouplingStrength, Failure> {
    CouplingStrength::new(xi).map_err(|e| Failure::Usage(e.to_string()))
}

fn write_output<T: serde::Serialize>(
    rows: &[T],
    output: &OutputArgs,
    preamble: &[String],
    stdout: &mut dyn Write,
) -> CliResult {
    match &output.out {
        Some(path) => table::emit_table_with_preamble(rows, output.format.into(), preamble, path)?,
        None => write_table(rows, output.format.into(), preamble, &mut *stdout)?,
    }
    Ok(())
}

fn run_energy(args: &EnergyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let kind: PotentialKind = args.potential.into();
    check_combination(kind, args.method, args.n)?;
    let xi = coupling(args.xi)?;
    let cfg = args.solver.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let qn = QuantumNumbers::new(args.n, args.l);
    let methods = applicable(kind, args.n, args.method.methods());

    if args.output.out.is_some() {
        let row = analysis::comparison_row(kind, xi, qn, &cfg)?;
        let recs = table::energy_records(&[row], &methods);
        return write_output(&recs, &args.output, &[], stdout);
    }

    let single = methods.len() == 1;
    let mut first_error = None;
    for method in methods {
        match estimate_energy(kind, method, qn, xi, &cfg) {
            Ok(est) => {
                let value = format_number(est.value);
                if single {
                    writeln!(stdout, "{value}")?;
                } else {
                    writeln!(stdout, "{method}\t{value}")?;
                }
                if !est.bound {
                    writeln!(stderr, "note: {method} estimate is not a bound state")?;
                }
            }
            Err(e) => {
                writeln!(stderr, "{method}: {e}")?;
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        Some(e) => Err(Failure::Domain(e)),
        None => Ok(()),
    }
}

fn run_critical(args: &CriticalArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let kind: PotentialKind = args.potential.into();
    check_combination(kind, args.method, args.n)?;
    let cfg = args.solver.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let qn = QuantumNumbers::new(args.n, args.l);
    let methods = applicable(kind, args.n, args.method.methods());
    let single = methods.len() == 1;

    let mut values = Vec::new();
    let mut first_error = None;
    for method in methods {
        match critical_coupling(kind, method, qn, &cfg) {
            Ok(xi) => values.push((method, xi.value())),
            Err(e) => {
                writeln!(stderr, "{method}: {e}")?;
                first_error.get_or_insert(e);
            }
        }
    }
    if args.output.out.is_some() {
        let reference = values.iter().find(|(m, _)| *m == Method::Reference).map(|v| v.1);
        let recs: Vec<CriticalRecord> = values
            .iter()
            .map(|&(method, x)| {
                let abs = reference.map(|r| (x - r).abs());
                CriticalRecord {
                    potential: kind,
                    n: qn.n,
                    l: qn.l,
                    method,
                    xi_crit: Some(x),
                    ref_xi_crit: reference,
                    abs_err: abs,
                    rel_err: abs.zip(reference).map(|(a, r)| a / r.abs()),
                }
            })
            .collect();
        if !recs.is_empty() {
            write_output(&recs, &args.output, &[], stdout)?;
        }
    } else {
        for (method, x) in &values {
            if single {
                writeln!(stdout, "{}", format_number(*x))?;
            } else {
                writeln!(stdout, "{method}\t{}", format_number(*x))?;
            }
        }
    }
    match first_error {
        Some(e) => Err(Failure::Domain(e)),
        None => Ok(()),
    }
}

fn run_count(args: &CountArgs, stdout: &mut dyn Write) -> CliResult {
    let xi = coupling(args.xi)?;
    let cfg = args.solver.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let count = solver::count_bound_states(args.potential.into(), xi, args.l, &cfg)?;
    writeln!(stdout, "{count}")?;
    Ok(())
}

fn run_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> CliResult {
    let kind: PotentialKind = args.potential.into();
    check_combination(kind, args.method, args.n)?;
    let cfg = args.solver.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let methods = applicable(kind, args.n, args.method.methods());

    let points: Vec<(CouplingStrength, QuantumNumbers)> = match args.l_max {
        Some(l_max) => {
            if args.xi.len() != 1 {
                return Err(Failure::Usage("--l-max sweeps need exactly one --xi value".into()));
            }
            let xi = coupling(args.xi[0])?;
            (0..=l_max).map(|l| (xi, QuantumNumbers::new(args.n, l))).collect()
        }
        None => {
            let mut grid = args.xi.clone();
            grid.sort_by(f64::total_cmp);
            grid.iter()
                .map(|&x| Ok((coupling(x)?, QuantumNumbers::new(args.n, args.l))))
                .collect::<std::result::Result<_, Failure>>()?
        }
    };
    let rows = points
        .iter()
        .map(|&(xi, qn)| analysis::comparison_row(kind, xi, qn, &cfg))
        .collect::<Result<Vec<_>>>()?;
    let recs = table::energy_records(&rows, &methods);
    write_output(&recs, &args.output, &[], stdout)
}

fn provenance(id: u8, grid: String, cfg: &SolverConfig, notes: &[String]) -> Vec<String> {
    let r_max = cfg
        .r_max
        .map_or_else(|| format!("auto(cap {})", cfg.r_max_cap), |r| r.to_string());
    let mut lines = vec![
        format!("wellbound {} figure {id}", env!("CARGO_PKG_VERSION")),
        format!("grid: {grid}"),
        format!(
            "solver: numerov h={} r_max={r_max} energy_tol={} critical_tol={} richardson=step-halving",
            cfg.h, cfg.energy_tol, cfg.critical_tol
        ),
    ];
    lines.extend(notes.iter().map(|n| format!("note: {n}")));
    lines
}

fn run_figure(args: &FigureArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let cfg = args.solver.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let all = MethodArg::All.methods();
    match args.id {
        1 | 2 => {
            let (data, grid): (Dataset<_>, String) = if args.id == 1 {
                if args.xi.len() > 1 {
                    return Err(Failure::Usage("figure 1 takes a single --xi value".into()));
                }
                let xi = args.xi.first().copied().unwrap_or(analysis::FIGURE1_XI);
                coupling(xi)?;
                let l_max = args.l_max.unwrap_or(analysis::FIGURE1_L_MAX);
                (
                    analysis::figure1_data(l_max, xi, &cfg)?,
                    format!("gaussian n=0 xi={xi} l=0..={l_max}"),
                )
            } else {
                let xs = if args.xi.is_empty() {
                    analysis::figure2_default_grid()
                } else {
                    args.xi.clone()
                };
                for &x in &xs {
                    coupling(x)?;
                }
                let label = xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                (
                    analysis::figure2_data(&xs, &cfg)?,
                    format!("gaussian n=0 l=0 xi={label}"),
                )
            };
            for note in data.notes.iter().filter(|n| n.starts_with("warning")) {
                writeln!(stderr, "{note}")?;
            }
            let recs = table::energy_records(&data.rows, &all);
            if recs.is_empty() {
                return Err(Failure::Domain(Error::domain("figure has no rows")));
            }
            write_output(
                &recs,
                &args.output,
                &provenance(args.id, grid, &cfg, &data.notes),
                stdout,
            )?;
        }
        _ => {
            let l_max = args.l_max.unwrap_or(analysis::CRITICAL_L_MAX);
            let data = if args.id == 3 {
                analysis::figure3_data(l_max, &cfg)?
            } else {
                analysis::figure4_data(l_max, &cfg)?
            };
            let kind = if args.id == 3 { "gaussian" } else { "yukawa" };
            let recs = table::critical_records(&data.rows, &all);
            let grid = format!("{kind} n=0 l=0..={l_max}");
            write_output(
                &recs,
                &args.output,
                &provenance(args.id, grid, &cfg, &data.notes),
                stdout,
            )?;
        }
    }
    if let Some(script) = &args.plot_script {
        let csv_name = args
            .output
            .out
            .as_ref()
            .map_or_else(|| format!("figure{}.csv", args.id), |p| p.display().to_string());
        std::fs::write(script, gnuplot_script(args.id, &csv_name))?;
    }
    Ok(())
}

/// Runs the command line `argv` (including the program name), writing to the
/// given streams. Returns the process exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match CliConfig::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Energy(a) => run_energy(a, stdout, stderr),
        Command::Critical(a) => run_critical(a, stdout, stderr),
        Command::Count(a) => run_count(a, stdout),
        Command::Sweep(a) => run_sweep(a, stdout),
        Command::Figure(a) => run_figure(a, stdout, stderr),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

/// Runs against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
