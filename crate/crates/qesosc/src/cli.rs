//! Command-line front end.
//!
//! Exit codes: 0 success, 1 numeric failure, 2 configuration error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qesosc_core::deformed::{
    spectrum_big_q, spectrum_pt_limit, spectrum_q_phase, spectrum_q_real, spectrum_suq11,
    Suq11Params,
};
use qesosc_core::matcher::{default_n_range, solve_match, solve_match_at, Branch};
use qesosc_core::nogo::{check_big_q, check_pt, check_q_phase, check_q_real};
use qesosc_core::oracle::{default_grid_for, grid_spectrum, GridSpec, OracleResult, Potential};
use qesosc_core::potential::{pt_taylor, wkb_big_q, wkb_q_phase, wkb_q_real, wkb_suq11};
use qesosc_core::qes::{qes_levels, qesp_potential, QespParams};
use qesosc_core::{EnergyTable, EvenPolynomialPotential, Parity, Provenance};

use crate::formats::{self, FormatError};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERIC: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Numeric(qesosc_core::Error),
}

impl From<qesosc_core::Error> for CliError {
    fn from(e: qesosc_core::Error) -> Self {
        use qesosc_core::Error as E;
        match e {
            E::WrongBracket
            | E::WrongRegime { .. }
            | E::InvalidParameter { .. }
            | E::TruncationOrder(_)
            | E::InvalidPower(_)
            | E::InvalidGrid(_)
            | E::InvalidTable(_)
            | E::AsymmetricGrid => CliError::Config(e.to_string()),
            other => CliError::Numeric(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(_) => EXIT_NUMERIC,
            CliError::Config(_) | CliError::Format(_) => EXIT_CONFIG,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "qesosc",
    version,
    about = "Deformed-oscillator spectra, WKB-equivalent potentials and quasi-exactly soluble sextic oscillators",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels of a deformed oscillator.
    Spectrum(SpectrumArgs),
    /// Coefficients of a WKB-equivalent or QES potential.
    Potential(PotentialArgs),
    /// Exact (quasi-exactly soluble) levels of the sextic oscillator.
    Qes(QesArgs),
    /// Solve for SU_q(1,1) parameters matching a QES sextic.
    Match(MatchArgs),
    /// Show why a deformed model cannot be matched to a QES sextic.
    Nogo(NogoArgs),
    /// Finite-difference eigenvalues of a potential.
    Oracle(OracleArgs),
    /// Run the full reproduction report.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Outputs {
    /// Write JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
    /// Write CSV to this file.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    /// Write a two-column series for external plotting.
    #[arg(long = "plot-data", value_name = "FILE")]
    pub plot_data: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumModel {
    QPhase,
    QReal,
    #[value(alias = "Q")]
    QBase,
    Suq11,
    PtLimit,
}

/// Deformation and SU_q(1,1) parameters shared by several subcommands.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelParams {
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,
    #[arg(long = "Q")]
    pub q: Option<f64>,
    #[arg(long = "A")]
    pub amplitude: Option<f64>,
    #[arg(long = "N")]
    pub n_cap: Option<u32>,
    /// E₀′ offset; for potentials, defaults to the value that puts V(0) at zero.
    #[arg(long = "E0", allow_negative_numbers = true)]
    pub e0: Option<f64>,
}

impl ModelParams {
    fn need<T: Copy>(value: Option<T>, flag: &str, model: &str) -> Result<T> {
        value.ok_or_else(|| CliError::Config(format!("{model} requires --{flag}")))
    }

    fn tau(&self, model: &str) -> Result<f64> {
        Self::need(self.tau, "tau", model)
    }

    fn suq11(&self, model: &str, default_e0: bool) -> Result<Suq11Params> {
        let amplitude = Self::need(self.amplitude, "A", model)?;
        let tau = self.tau(model)?;
        let n_cap = Self::need(self.n_cap, "N", model)?;
        let e0 = match (self.e0, default_e0) {
            (Some(e0), _) => e0,
            (None, true) => qesosc_core::matcher::e0prime_of(n_cap, tau, amplitude),
            (None, false) => return Err(CliError::Config(format!("{model} requires --E0"))),
        };
        Ok(Suq11Params::new(amplitude, tau, n_cap, e0)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    pub model: SpectrumModel,
    #[command(flatten)]
    pub params: ModelParams,
    /// Levels: `a..b` (inclusive), `a..b:step`, a comma list, or a single n.
    #[arg(long, value_parser = parse_levels)]
    pub levels: LevelList,
    #[command(flatten)]
    pub out: Outputs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelList(pub Vec<u32>);

pub fn parse_levels(s: &str) -> std::result::Result<LevelList, String> {
    let s = s.trim();
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| format!("bad level `{t}`: {e}"))
    };
    if let Some((range, step)) = s
        .split_once(':')
        .map(|(r, st)| (r, Some(st)))
        .or(Some((s, None)))
    {
        if let Some((a, b)) = range.split_once("..") {
            let (a, b) = (num(a)?, num(b)?);
            let step = step.map(num).transpose()?.unwrap_or(1);
            if step == 0 {
                return Err("step must be positive".into());
            }
            if b < a {
                return Err(format!("empty range {a}..{b}"));
            }
            return Ok(LevelList((a..=b).step_by(step as usize).collect()));
        }
        if step.is_some() {
            return Err("a step needs a range `a..b:step`".into());
        }
    }
    let levels = s
        .split(',')
        .map(num)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(LevelList(levels))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialModel {
    QPhase,
    QReal,
    #[value(alias = "Q")]
    QBase,
    Suq11,
    PtTaylor,
    Qesp,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    pub model: PotentialModel,
    #[command(flatten)]
    pub params: ModelParams,
    #[command(flatten)]
    pub qes: QesParamsArgs,
    /// Highest power of x kept.
    #[arg(long, default_value_t = 6)]
    pub order: u32,
    /// Bottom of the Pöschl–Teller potential.
    #[arg(long = "v-min", default_value_t = 0.0, allow_negative_numbers = true)]
    pub v_min: f64,
    /// Sampling range for --plot-data.
    #[arg(long = "x-max", default_value_t = 2.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    #[command(flatten)]
    pub out: Outputs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct QesParamsArgs {
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Parity sector (0 even, 1 odd).
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
    pub r: u32,
}

impl QesParamsArgs {
    fn params(&self) -> Result<QespParams> {
        let b = self
            .b
            .ok_or_else(|| CliError::Config("--b is required".into()))?;
        let n = self
            .n
            .ok_or_else(|| CliError::Config("--n is required".into()))?;
        Ok(QespParams::new(self.a, b, n, Parity::from_r(self.r))?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct QesArgs {
    #[command(flatten)]
    pub qes: QesParamsArgs,
    #[command(flatten)]
    pub out: Outputs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Pos,
    Neg,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Pos => Branch::BPositive,
            BranchArg::Neg => Branch::BNegative,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MatchArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
    pub r: u32,
    #[arg(long, value_enum, default_value = "pos")]
    pub branch: BranchArg,
    /// Solve at this N only; otherwise scan and report the smallest N.
    #[arg(long = "N")]
    pub n_cap: Option<u32>,
    #[arg(long = "N-min")]
    pub n_min: Option<u32>,
    #[arg(long = "N-max")]
    pub n_max: Option<u32>,
    /// Period shift l of the feasibility window.
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Print every solution of the scan instead of the smallest N.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NogoModel {
    QPhase,
    QReal,
    #[value(alias = "Q")]
    QBase,
    #[value(alias = "poschl-teller")]
    Pt,
}

#[derive(Debug, Clone, Args)]
pub struct NogoArgs {
    pub model: NogoModel,
    #[command(flatten)]
    pub params: ModelParams,
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Polynomial potential JSON file.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["tabulated", "b"])]
    pub potential: Option<PathBuf>,
    /// Tabulated `x,V` CSV file (linear interpolation).
    #[arg(long, value_name = "FILE", conflicts_with = "b")]
    pub tabulated: Option<PathBuf>,
    #[command(flatten)]
    pub qes: QesParamsArgs,
    /// Number of lowest levels.
    #[arg(long, default_value_t = 6)]
    pub count: usize,
    #[arg(long = "half-width")]
    pub half_width: Option<f64>,
    /// Grid nodes (odd).
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long = "tail-mass-limit")]
    pub tail_mass_limit: Option<f64>,
    #[arg(long = "convergence-tolerance")]
    pub convergence_tolerance: Option<f64>,
    #[command(flatten)]
    pub out: Outputs,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
}

/// Outcome of a command: text for stdout and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// Entry point used by the binary.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let args = match expand_config(args.into_iter().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("qesosc: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(e) => {
            eprintln!("qesosc: {e}");
            e.exit_code()
        }
    }
}

/// Replaces `--config FILE` with the flags it holds, placed right after the
/// subcommand so that later command-line flags override them.
///
/// The file is a JSON object: `{"N": 151, "branch": "pos", "all": true}`.
/// A `"model"` key supplies the positional model argument.
pub fn expand_config(mut args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(pos) = args.iter().position(|a| a == "--config") else {
        return Ok(args);
    };
    let path = args
        .get(pos + 1)
        .cloned()
        .ok_or_else(|| CliError::Config("--config needs a file".into()))?;
    args.drain(pos..pos + 2);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Config(format!("{}: {e}", Path::new(&path).display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", Path::new(&path).display())))?;
    let object = value
        .as_object()
        .ok_or_else(|| CliError::Config("config file must hold a JSON object".into()))?;

    let mut tokens: Vec<OsString> = Vec::new();
    if let Some(model) = object.get("model") {
        tokens.push(scalar(model, "model")?.into());
    }
    for (key, value) in object.iter().filter(|(k, _)| k.as_str() != "model") {
        match value {
            serde_json::Value::Bool(true) => tokens.push(format!("--{key}").into()),
            serde_json::Value::Bool(false) | serde_json::Value::Null => {}
            other => {
                tokens.push(format!("--{key}").into());
                tokens.push(scalar(other, key)?.into());
            }
        }
    }
    let sub = args
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map(|i| i + 2)
        .unwrap_or(args.len());
    args.splice(sub..sub, tokens);
    Ok(args)
}

fn scalar(v: &serde_json::Value, key: &str) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        _ => Err(CliError::Config(format!(
            "config key `{key}` must be a string, number or boolean"
        ))),
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Spectrum(a) => cmd_spectrum(&a),
        Command::Potential(a) => cmd_potential(&a),
        Command::Qes(a) => cmd_qes(&a),
        Command::Match(a) => cmd_match(&a),
        Command::Nogo(a) => cmd_nogo(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Reproduce(a) => cmd_reproduce(&a),
    }
}

fn write_outputs(
    out: &Outputs,
    json: impl FnOnce() -> String,
    csv: impl FnOnce() -> String,
) -> Result<()> {
    if let Some(p) = &out.json {
        formats::write_text(p, &json())?;
    }
    if let Some(p) = &out.csv {
        formats::write_text(p, &csv())?;
    }
    Ok(())
}

fn table_text(table: &EnergyTable) -> String {
    let mut s = format!(
        "# {}\n{:>6} {:>6} {:>22}\n",
        table.label, "n", "parity", "energy"
    );
    for r in &table.rows {
        let _ = writeln!(
            s,
            "{:>6} {:>6} {:>22.10}",
            r.index,
            r.parity.as_str(),
            r.energy
        );
    }
    s
}

fn emit_table(table: &EnergyTable, out: &Outputs) -> Result<Outcome> {
    write_outputs(
        out,
        || formats::to_json(table),
        || formats::energy_table_csv(table),
    )?;
    if let Some(p) = &out.plot_data {
        let series = formats::series_csv(
            ("n", "E_n"),
            table.rows.iter().map(|r| (r.index as f64, r.energy)),
        );
        formats::write_text(p, &series)?;
    }
    Ok(Outcome::ok(table_text(table)))
}

pub fn spectrum_table(
    model: SpectrumModel,
    p: &ModelParams,
    levels: &[u32],
) -> Result<EnergyTable> {
    let name = model
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let level: Box<dyn Fn(u32) -> f64> = match model {
        SpectrumModel::QPhase => {
            let (tau, omega) = (p.tau(&name)?, p.omega);
            qesosc_core::DeformationParam::q_phase(tau, omega)?;
            Box::new(move |n| spectrum_q_phase(n, tau, omega))
        }
        SpectrumModel::QReal => {
            let (tau, omega) = (p.tau(&name)?, p.omega);
            qesosc_core::DeformationParam::q_real(tau, omega)?;
            Box::new(move |n| spectrum_q_real(n, tau, omega))
        }
        SpectrumModel::QBase => {
            let (q, omega) = (ModelParams::need(p.q, "Q", &name)?, p.omega);
            qesosc_core::DeformationParam::q_base(q, omega)?;
            Box::new(move |n| spectrum_big_q(n, q, omega))
        }
        SpectrumModel::Suq11 => {
            let s = p.suq11(&name, false)?;
            Box::new(move |n| spectrum_suq11(n, &s))
        }
        SpectrumModel::PtLimit => {
            let a = ModelParams::need(p.amplitude, "A", &name)?;
            let n_cap = ModelParams::need(p.n_cap, "N", &name)?;
            let e0 = ModelParams::need(p.e0, "E0", &name)?;
            Box::new(move |n| spectrum_pt_limit(n, a, n_cap, e0))
        }
    };
    let mut table = EnergyTable::new(format!("spectrum {name}"));
    for &n in levels {
        table.push(n, Parity::of_level(n), level(n), Provenance::DeformedModel);
    }
    Ok(table)
}

fn cmd_spectrum(a: &SpectrumArgs) -> Result<Outcome> {
    let table = spectrum_table(a.model, &a.params, &a.levels.0)?;
    emit_table(&table, &a.out)
}

pub fn build_potential(a: &PotentialArgs) -> Result<EvenPolynomialPotential> {
    let name = a
        .model
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let p = &a.params;
    Ok(match a.model {
        PotentialModel::QPhase => wkb_q_phase(p.omega, p.tau(&name)?, a.order)?,
        PotentialModel::QReal => wkb_q_real(p.omega, p.tau(&name)?, a.order)?,
        PotentialModel::QBase => wkb_big_q(p.omega, ModelParams::need(p.q, "Q", &name)?, a.order)?,
        PotentialModel::Suq11 => wkb_suq11(&p.suq11(&name, true)?, a.order)?,
        PotentialModel::PtTaylor => pt_taylor(
            ModelParams::need(p.amplitude, "A", &name)?,
            ModelParams::need(p.n_cap, "N", &name)?,
            a.v_min,
            a.order,
        )?,
        PotentialModel::Qesp => qesp_potential(&a.qes.params()?),
    })
}

fn potential_text(label: &str, pot: &EvenPolynomialPotential) -> String {
    let mut s = format!(
        "# potential {label} (truncation order {})\n",
        pot.truncation_order
    );
    let _ = writeln!(s, "{:>6} {:>24}", "power", "coefficient");
    let _ = writeln!(s, "{:>6} {:>24.12e}", 0, pot.v_min);
    for (p, c) in &pot.coeffs {
        let _ = writeln!(s, "{p:>6} {c:>24.12e}");
    }
    s
}

fn cmd_potential(a: &PotentialArgs) -> Result<Outcome> {
    let pot = build_potential(a)?;
    let label = a
        .model
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let coeff_csv = || {
        formats::series_csv(
            ("power", "coefficient"),
            std::iter::once((0.0, pot.v_min))
                .chain(pot.coeffs.iter().map(|(&p, &c)| (p as f64, c))),
        )
    };
    write_outputs(&a.out, || formats::to_json(&pot), coeff_csv)?;
    if let Some(path) = &a.out.plot_data {
        if a.samples < 2 || a.x_max.is_nan() || a.x_max <= 0.0 {
            return Err(CliError::Config(
                "--plot-data needs --samples >= 2 and --x-max > 0".into(),
            ));
        }
        let n = a.samples - 1;
        let points = (0..=n).map(|i| {
            let x = -a.x_max + 2.0 * a.x_max * i as f64 / n as f64;
            (x, pot.evaluate(x))
        });
        formats::write_text(path, &formats::series_csv(("x", "V"), points))?;
    }
    Ok(Outcome::ok(potential_text(&label, &pot)))
}

fn cmd_qes(a: &QesArgs) -> Result<Outcome> {
    let table = qes_levels(&a.qes.params()?)?;
    emit_table(&table, &a.out)
}

fn cmd_match(a: &MatchArgs) -> Result<Outcome> {
    let parity = Parity::from_r(a.r);
    let branch = Branch::from(a.branch);
    let text = if let Some(n_cap) = a.n_cap {
        formats::to_json(&solve_match_at(a.n, parity, branch, n_cap, a.l)?)
    } else {
        let default = default_n_range();
        let range = a.n_min.unwrap_or(*default.start())..=a.n_max.unwrap_or(*default.end());
        let outcome = solve_match(a.n, parity, branch, range.clone(), a.l);
        if outcome.is_empty() {
            return Err(CliError::Numeric(qesosc_core::Error::NoBracket {
                lo: *range.start() as f64,
                hi: *range.end() as f64,
            }));
        }
        if a.all {
            formats::to_json(&outcome.solutions)
        } else {
            formats::to_json(outcome.smallest_n().expect("non-empty"))
        }
    };
    if let Some(p) = &a.json {
        formats::write_text(p, &text)?;
    }
    Ok(Outcome::ok(text))
}

fn cmd_nogo(a: &NogoArgs) -> Result<Outcome> {
    let p = &a.params;
    let name = a
        .model
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let verdict = match a.model {
        NogoModel::QPhase => check_q_phase(p.omega, p.tau(&name)?)?,
        NogoModel::QReal => check_q_real(p.omega, p.tau(&name)?)?,
        NogoModel::QBase => check_big_q(p.omega, ModelParams::need(p.q, "Q", &name)?)?,
        NogoModel::Pt => check_pt(ModelParams::need(p.amplitude, "A", &name)?)?,
    };
    let text = formats::to_json(&verdict);
    if let Some(path) = &a.json {
        formats::write_text(path, &text)?;
    }
    Ok(Outcome::ok(text))
}

fn grid_for(a: &OracleArgs, default: Option<GridSpec>) -> Result<GridSpec> {
    let mut grid = match (default, a.half_width, a.points) {
        (Some(g), None, None) => g,
        (d, half_width, points) => {
            let half_width = half_width.or(d.map(|g| g.half_width)).ok_or_else(|| {
                CliError::Config("--half-width is required for this potential".into())
            })?;
            let points = points.or(d.map(|g| g.points)).unwrap_or(2001);
            GridSpec::new(half_width, points, a.count)?
        }
    };
    if let Some(t) = a.tail_mass_limit {
        grid.tail_mass_limit = t;
    }
    if let Some(t) = a.convergence_tolerance {
        grid.convergence_tolerance = t;
    }
    grid.validate()?;
    Ok(grid)
}

fn oracle_text(r: &OracleResult) -> String {
    let g = &r.grid;
    let mut s = format!(
        "# grid oracle: L = {}, M = {}, h = {:.6e}\n",
        g.half_width,
        g.points,
        g.spacing()
    );
    let _ = writeln!(
        s,
        "{:>5} {:>6} {:>22} {:>12} {:>10}",
        "level", "parity", "energy", "estimate", "converged"
    );
    for i in 0..r.energies.len() {
        let _ = writeln!(
            s,
            "{:>5} {:>6} {:>22.10} {:>12.3e} {:>10}",
            i,
            r.parities[i].as_str(),
            r.energies[i],
            r.convergence_estimate[i],
            if r.converged[i] { "yes" } else { "NO" }
        );
    }
    s
}

fn cmd_oracle(a: &OracleArgs) -> Result<Outcome> {
    let run = |pot: &dyn Potential, grid: GridSpec| -> Result<OracleResult> {
        Ok(grid_spectrum(pot, &grid)?)
    };
    let (result, sample): (OracleResult, Box<dyn Fn(f64) -> f64>) = if let Some(path) = &a.tabulated
    {
        let table = formats::read_tabulated(path)?;
        let grid = grid_for(a, None)?;
        let r = run(&table, grid)?;
        (r, Box::new(move |x| table.value(x)))
    } else {
        let pot = match &a.potential {
            Some(path) => formats::read_potential(path)?,
            None => qesp_potential(&a.qes.params()?),
        };
        let default = default_grid_for(&pot, a.count)?;
        let grid = grid_for(a, Some(default))?;
        let r = run(&pot, grid)?;
        (r, Box::new(move |x| pot.evaluate(x)))
    };
    write_outputs(
        &a.out,
        || formats::to_json(&result),
        || formats::oracle_csv(&result),
    )?;
    if let Some(path) = &a.out.plot_data {
        let xs = result.grid.nodes();
        formats::write_text(
            path,
            &formats::series_csv(("x", "V"), xs.iter().map(|&x| (x, sample(x)))),
        )?;
    }
    Ok(Outcome::ok(oracle_text(&result)))
}

fn cmd_reproduce(a: &ReproduceArgs) -> Result<Outcome> {
    let report = report::reproduce()?;
    if let Some(p) = &a.json {
        formats::write_text(p, &report.to_json())?;
    }
    if let Some(p) = &a.csv {
        formats::write_text(p, &report.to_csv())?;
    }
    let mut text = report.to_text();
    let failing: Vec<_> = report.failing().map(|r| r.label.as_str()).collect();
    if !failing.is_empty() {
        let _ = writeln!(text, "failing rows: {}", failing.join(", "));
    }
    Ok(Outcome {
        stdout: text,
        code: if report.all_pass() {
            EXIT_OK
        } else {
            EXIT_NUMERIC
        },
    })
}
