//! Command-line front end.
//!
//! Exit codes: 0 success, 1 self-check failure, 2 usage or configuration
//! error, 3 quadrature non-convergence.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::clocks::{self, ClockSpec, TwoQubitInitial};
use crate::entanglement::{reduced_rho_hom, reduced_rho_mz};
use crate::feasibility::{self, FiberSpec, GRID_POINTS, GRID_RANGE};
use crate::gravity::{redshift_pair, BodyParams, RedshiftPair, ScenarioCatalog};
use crate::interferometer::{pattern, DelayConfig, QMemConfig, Storage};
use crate::output::{Cell, Format, Table};
use crate::selfcheck::{self, Suite};
use crate::spectra::TwoPeakSpectrum;
use crate::units::{parse_duration, parse_frequency, parse_length};
use crate::{sweep, Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

/// Environment variable naming an extra scenario file.
pub const CONFIG_ENV: &str = "GRAVENT_SCENARIOS";

#[derive(Debug, Parser)]
#[command(name = "gravent", version, about = "Gravitationally induced entanglement dynamics: patterns, measures, feasibility")]
struct Cli {
    /// Scenario file with extra observer pairs.
    #[arg(long, global = true, env = CONFIG_ENV, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List scenarios with their redshift factors.
    Scenarios(Emit),
    /// Interference patterns over a storage-time sweep.
    Pattern(RunConfig),
    /// Purity, linear entropy, negativity and visibility over a sweep.
    Measures(RunConfig),
    /// Clock-qubit purity and two-clock negativity over a sweep.
    Clocks(ClockArgs),
    /// Storage-time grid, or a fiber delay-line report.
    Feasibility(FeasibilityArgs),
    /// Cross-check closed forms against brute-force numerics.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Emit {
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Setup {
    Mz,
    Hom,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StorageKind {
    Qmem,
    Delay,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepVar {
    Tau,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sync {
    Local,
    Global,
}

#[derive(Debug, Args)]
struct Spectrum {
    /// Lower peak frequency, e.g. 377.1THz, 2.4e15rad/s.
    #[arg(long, default_value = "377.1THz", conflicts_with_all = ["lambda1", "lambda2"])]
    omega1: String,
    /// Upper peak frequency.
    #[arg(long, default_value = "377.101THz")]
    omega2: String,
    /// Wavelength of the lower-frequency peak, e.g. 1550nm.
    #[arg(long, requires = "lambda2")]
    lambda1: Option<String>,
    #[arg(long, requires = "lambda1")]
    lambda2: Option<String>,
    /// Spectral width ξ of each peak.
    #[arg(long, default_value = "10MHz")]
    xi: String,
    /// Relative phase φ of the two peaks [rad].
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
}

impl Spectrum {
    fn build(&self) -> Result<TwoPeakSpectrum> {
        let (w1, w2) = match (&self.lambda1, &self.lambda2) {
            (Some(l1), Some(l2)) => (wavelength_frequency(l1)?, wavelength_frequency(l2)?),
            _ => (parse_frequency(&self.omega1)?, parse_frequency(&self.omega2)?),
        };
        if w2 < w1 {
            return Err(Error::Usage(format!("second peak must not be below the first ({w2:e} < {w1:e} rad/s)")));
        }
        TwoPeakSpectrum::new(w1, w2, parse_frequency(&self.xi)?, self.phi)
    }
}

fn wavelength_frequency(text: &str) -> Result<f64> {
    let lambda = parse_length(text)?;
    if lambda.is_nan() || lambda <= 0.0 {
        return Err(Error::Usage(format!("wavelength must be positive, got {text:?}")));
    }
    Ok(std::f64::consts::TAU * crate::SPEED_OF_LIGHT / lambda)
}

#[derive(Debug, Args)]
struct Sweep {
    /// Swept variable: the local storage (or delay) time.
    #[arg(long, value_enum, default_value = "tau")]
    sweep: SweepVar,
    #[arg(long, default_value = "0")]
    from: String,
    #[arg(long, default_value = "2s")]
    to: String,
    #[arg(long, default_value_t = 201)]
    points: usize,
}

impl Sweep {
    fn grid(&self) -> Result<Vec<f64>> {
        let SweepVar::Tau = self.sweep;
        let from = parse_duration(&self.from)?;
        let to = parse_duration(&self.to)?;
        if from < 0.0 {
            return Err(Error::Usage(format!("storage time must be non-negative, got {from}")));
        }
        sweep::linspace(from, to, self.points)
    }
}

#[derive(Debug, Args)]
struct RunConfig {
    #[arg(long, value_enum, default_value = "hom")]
    setup: Setup,
    #[arg(long, value_enum, default_value = "qmem")]
    storage: StorageKind,
    #[arg(long, default_value = "geo-vs-ground")]
    scenario: String,
    #[command(flatten)]
    spectrum: Spectrum,
    #[command(flatten)]
    sweep: Sweep,
    /// 1 if the memory's internal phase is imprinted on the photon.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
    chi: u8,
    /// Storage-time synchronization: equal local times or equal reference times.
    #[arg(long, value_enum, default_value = "local")]
    sync: Sync,
    #[command(flatten)]
    emit: Emit,
}

impl RunConfig {
    fn storage_at(&self, tau: f64, pair: &RedshiftPair) -> Result<Storage> {
        Ok(match self.storage {
            StorageKind::Delay => DelayConfig::new(tau)?.into(),
            StorageKind::Qmem => match self.sync {
                Sync::Local => QMemConfig::local_equal(tau),
                Sync::Global => QMemConfig::global_frame(tau, pair),
            }
            .with_chi(self.chi)
            .into(),
        })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Initial {
    EntangledAntiAligned,
    RobustSpatialAligned,
    RobustInternalAligned,
}

impl From<Initial> for TwoQubitInitial {
    fn from(v: Initial) -> Self {
        match v {
            Initial::EntangledAntiAligned => TwoQubitInitial::EntangledAntiAligned,
            Initial::RobustSpatialAligned => TwoQubitInitial::RobustSpatialAligned,
            Initial::RobustInternalAligned => TwoQubitInitial::RobustInternalAligned,
        }
    }
}

#[derive(Debug, Args)]
struct ClockArgs {
    #[arg(long, default_value = "geo-vs-ground")]
    scenario: String,
    /// Clock transition frequency μ₋.
    #[arg(long, default_value = "10GHz")]
    mu_minus: String,
    /// Initial state of the two-clock system.
    #[arg(long, value_enum, default_value = "entangled-anti-aligned")]
    initial: Initial,
    #[arg(long, default_value = "0")]
    from: String,
    #[arg(long, default_value = "0.2s")]
    to: String,
    #[arg(long, default_value_t = 201)]
    points: usize,
    #[command(flatten)]
    emit: Emit,
}

#[derive(Debug, Args)]
struct FeasibilityArgs {
    /// Report the fiber delay line for a wavelength pair instead of the grid.
    #[arg(long)]
    delay_line: bool,
    /// Report the delay line at the largest Ω₋ this timing resolution supports.
    #[arg(long, value_name = "DUR")]
    resolution: Option<String>,
    /// Scenarios to include (repeatable); all by default for the grid.
    #[arg(long)]
    scenario: Vec<String>,
    /// Grid start (Ω₋).
    #[arg(long)]
    from: Option<String>,
    /// Grid end (Ω₋).
    #[arg(long)]
    to: Option<String>,
    #[arg(long, default_value_t = GRID_POINTS)]
    points: usize,
    #[arg(long, default_value = "1550nm")]
    lambda1: String,
    #[arg(long, default_value = "1310nm")]
    lambda2: String,
    /// Fiber attenuation [dB/km]; 0.36 for the telecom pair, 0.2 with --resolution.
    #[arg(long)]
    attenuation: Option<f64>,
    #[arg(long, default_value_t = 1.47)]
    refractive_index: f64,
    #[command(flatten)]
    emit: Emit,
}

#[derive(Debug, Args)]
struct SelfcheckArgs {
    /// Bias one suite so that it fails.
    #[arg(long, hide = true)]
    perturb: Option<String>,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } => EXIT_NONCONVERGENCE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let body = BodyParams::EARTH;
    let catalog = || -> Result<ScenarioCatalog> {
        match &cli.config {
            Some(path) => ScenarioCatalog::with_file(&body, path),
            None => Ok(ScenarioCatalog::builtin(&body)),
        }
    };
    match &cli.command {
        Command::Scenarios(emit) => emit_table(&cmd_scenarios(&catalog()?, &body)?, emit, out),
        Command::Pattern(cfg) => emit_table(&cmd_pattern(cfg, &lookup(&catalog()?, &body, &cfg.scenario)?)?, &cfg.emit, out),
        Command::Measures(cfg) => emit_table(&cmd_measures(cfg, &lookup(&catalog()?, &body, &cfg.scenario)?)?, &cfg.emit, out),
        Command::Clocks(a) => emit_table(&cmd_clocks(a, &lookup(&catalog()?, &body, &a.scenario)?)?, &a.emit, out),
        Command::Feasibility(a) => emit_table(&cmd_feasibility(a, &catalog()?, &body)?, &a.emit, out),
        Command::Selfcheck(a) => cmd_selfcheck(a, out),
    }
}

fn emit_table(table: &Table, emit: &Emit, out: &mut dyn Write) -> Result<i32> {
    let format = match emit.format {
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Json => Format::Json,
    };
    let text = table.render(format);
    match &emit.output {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(|e| io_error(Path::new("<stdout>"), e))?,
    }
    Ok(EXIT_OK)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

fn lookup(catalog: &ScenarioCatalog, body: &BodyParams, name: &str) -> Result<RedshiftPair> {
    let scenario = catalog.get(name).ok_or_else(|| {
        let known: Vec<_> = catalog.iter().map(|s| s.name.as_str()).collect();
        Error::Usage(format!("unknown scenario {name:?}; known: {}", known.join(", ")))
    })?;
    redshift_pair(scenario, body)
}

fn cmd_scenarios(catalog: &ScenarioCatalog, body: &BodyParams) -> Result<Table> {
    let mut t = Table::new(["name", "theta_u", "theta_l", "delta_theta", "delta_theta_inv"]);
    for s in catalog.iter() {
        let p = redshift_pair(s, body)?;
        t.push(vec![
            s.name.as_str().into(),
            p.theta_u().into(),
            p.theta_l().into(),
            p.delta_theta().into(),
            p.delta_theta_inv().into(),
        ]);
    }
    Ok(t)
}

fn cmd_pattern(cfg: &RunConfig, pair: &RedshiftPair) -> Result<Table> {
    let spec = cfg.spectrum.build()?;
    let grid = cfg.sweep.grid()?;
    let ports: &[&str] = match cfg.setup {
        Setup::Mz => &["p_plus", "p_minus"],
        Setup::Hom => &["p_plus_plus", "p_plus_minus", "p_minus_plus", "p_minus_minus"],
    };
    let mut t = Table::new(["tau_s", "p_c_mz", "p_c_hom"].iter().chain(ports).copied());
    let points = sweep::par_map(&grid, |&tau| pattern(&spec, &cfg.storage_at(tau, pair)?, pair));
    for (tau, p) in grid.iter().zip(points) {
        let p = p?;
        let mut row: Vec<Cell> = vec![(*tau).into(), p.p_c_mz.into(), p.p_c_hom.into()];
        match cfg.setup {
            Setup::Mz => row.extend(p.mz_ports.iter().map(|&v| Cell::Num(v))),
            Setup::Hom => row.extend(p.hom_ports.iter().map(|&v| Cell::Num(v))),
        }
        t.push(row);
    }
    Ok(t)
}

/// Purity and entropy of the selected setup's detector state; negativity of
/// the photon-pair state; visibility of the single-photon interferogram.
fn cmd_measures(cfg: &RunConfig, pair: &RedshiftPair) -> Result<Table> {
    let spec = cfg.spectrum.build()?;
    let grid = cfg.sweep.grid()?;
    let mut t = Table::new(["tau_s", "purity", "linear_entropy", "negativity", "visibility"]);
    let rows = sweep::par_map(&grid, |&tau| -> Result<[f64; 4]> {
        let storage = cfg.storage_at(tau, pair)?;
        let mz = reduced_rho_mz(&spec, &storage, pair)?;
        let hom = reduced_rho_hom(&spec, &storage, pair)?;
        let purity = match cfg.setup {
            Setup::Mz => mz.purity(),
            Setup::Hom => hom.purity(),
        };
        Ok([purity, 1.0 - purity, hom.negativity(), mz.visibility()])
    });
    for (tau, r) in grid.iter().zip(rows) {
        let r = r?;
        t.push(std::iter::once(*tau).chain(r).map(Cell::Num).collect());
    }
    Ok(t)
}

fn cmd_clocks(a: &ClockArgs, pair: &RedshiftPair) -> Result<Table> {
    let clock = ClockSpec::new(parse_frequency(&a.mu_minus)?, 0.0)?;
    let from = parse_duration(&a.from)?;
    if from < 0.0 {
        return Err(Error::Usage(format!("evolution time must be non-negative, got {from}")));
    }
    let grid = sweep::linspace(from, parse_duration(&a.to)?, a.points)?;
    let initial = TwoQubitInitial::from(a.initial);
    let mut t = Table::new(["tau_s", "single_purity", "single_linear_entropy", "pair_negativity", "pair_spatial_purity"]);
    let rows = sweep::par_map(&grid, |&tau| {
        [
            clocks::single_qubit_purity(&clock, pair.delta_theta(), tau),
            clocks::single_qubit_linear_entropy(&clock, pair.delta_theta(), tau),
            clocks::two_qubit_negativity(initial, &clock, pair, tau),
            clocks::two_qubit_spatial_purity(initial, &clock, pair, tau),
        ]
    });
    for (tau, r) in grid.iter().zip(rows) {
        t.push(std::iter::once(*tau).chain(r).map(Cell::Num).collect());
    }
    Ok(t)
}

fn cmd_feasibility(a: &FeasibilityArgs, catalog: &ScenarioCatalog, body: &BodyParams) -> Result<Table> {
    if a.delay_line || a.resolution.is_some() {
        return delay_line_table(a, catalog, body);
    }
    let names: Vec<String> = if a.scenario.is_empty() {
        catalog.iter().map(|s| s.name.clone()).collect()
    } else {
        a.scenario.clone()
    };
    let scenarios = names
        .into_iter()
        .map(|n| lookup(catalog, body, &n).map(|p| (n, p)))
        .collect::<Result<Vec<_>>>()?;
    let from = a.from.as_deref().map_or(Ok(GRID_RANGE.0), parse_frequency)?;
    let to = a.to.as_deref().map_or(Ok(GRID_RANGE.1), parse_frequency)?;
    let rows = feasibility::figure3_grid(&scenarios, (from, to), a.points)?;
    let mut t = Table::new(["scenario", "omega_minus_rad_s", "tau_ent_s", "tau_reslim_s"]);
    for r in rows {
        t.push(vec![r.scenario.into(), r.omega_minus.into(), r.tau_ent.into(), r.tau_reslim.into()]);
    }
    Ok(t)
}

fn delay_line_table(a: &FeasibilityArgs, catalog: &ScenarioCatalog, body: &BodyParams) -> Result<Table> {
    let (omega_minus, default_scenario, default_fiber) = match &a.resolution {
        Some(r) => (feasibility::max_omega_minus(parse_duration(r)?)?, "geo-vs-ground", FiberSpec::LOW_LOSS),
        None => (
            feasibility::omega_minus_from_wavelengths(parse_length(&a.lambda1)?, parse_length(&a.lambda2)?)?,
            "sat-to-sat",
            FiberSpec::TELECOM_PAIR,
        ),
    };
    let fiber = FiberSpec::new(a.refractive_index, a.attenuation.unwrap_or(default_fiber.attenuation_db_per_km))?;
    let names: Vec<&str> = if a.scenario.is_empty() {
        vec![default_scenario]
    } else {
        a.scenario.iter().map(String::as_str).collect()
    };
    let mut t = Table::new([
        "scenario",
        "omega_minus_rad_s",
        "tau_d_s",
        "tau_reslim_s",
        "length_m",
        "attenuation_db_per_km",
        "loss_db",
        "surviving_fraction",
        "pair_surviving_fraction",
    ]);
    for name in names {
        let pair = lookup(catalog, body, name)?;
        let r = feasibility::delay_line_report(&pair, omega_minus, &fiber)?;
        t.push(vec![
            name.into(),
            r.omega_minus.into(),
            r.tau_d.into(),
            feasibility::resolution_limit(r.omega_minus)?.into(),
            r.line.length.into(),
            r.fiber.attenuation_db_per_km.into(),
            r.line.loss_db.into(),
            r.line.surviving_fraction.into(),
            r.line.pair_surviving_fraction().into(),
        ]);
    }
    Ok(t)
}

fn cmd_selfcheck(a: &SelfcheckArgs, out: &mut dyn Write) -> Result<i32> {
    let perturb = match &a.perturb {
        Some(name) => Some(Suite::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::Usage(format!("unknown suite {name:?}; known: {}", known.join(", ")))
        })?),
        None => None,
    };
    let reports = selfcheck::run(perturb)?;
    let mut failed = false;
    for r in &reports {
        writeln!(out, "{r}").map_err(|e| io_error(Path::new("<stdout>"), e))?;
        failed |= !r.passed;
    }
    Ok(if failed { EXIT_SELFCHECK } else { EXIT_OK })
}
