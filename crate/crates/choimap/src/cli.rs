//! `choimap` command line.
//!
//! Exit codes: `0` success, `1` usage or validation error, `2` when
//! `verify-map` finds a positivity counterexample or `horodecki` finds a
//! detection.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use choimap_core::detection::{
    detect, orbit_reports, scan_grid, verify_map_positivity, GridRange, ScanFamily,
};
use choimap_core::linalg::{self, Subsystem};
use choimap_core::states::{build_rho_beta_gamma, build_sigma_b, build_varrho_b};
use choimap_core::{BipartiteState, HorodeckiParams, MapParams, RhoFamilyParams, Tolerance};

use crate::error::CliError;
use crate::json::{PptJson, ReportJson, StateJson, VerdictJson};
use crate::output::{self, emit, round_sig, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FINDING: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "choimap", version, about = "Generalized Choi map entanglement detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Randomized search for a positivity counterexample of Φ[w,x,y,z].
    VerifyMap(VerifyArgs),
    /// Detection report for a single state.
    Detect(DetectArgs),
    /// Detection reports over a parameter grid.
    Scan(ScanArgs),
    /// Partial-transpose test; also exports the state.
    PptCheck(PptArgs),
    /// Apply I⊗Φ to the 2⊗4 Horodecki family, optionally over the Pauli orbit.
    Horodecki(HorodeckiArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RhoBetaGamma,
    SigmaB,
    VarrhoB,
}

fn parse_map(s: &str) -> Result<MapParams, String> {
    s.parse().map_err(|e: choimap_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<GridRange, String> {
    s.parse().map_err(|e: choimap_core::Error| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("malformed number {s:?}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}

fn parse_finite(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("malformed number {s:?}")),
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// PSD threshold: eigenvalues >= -tol count as nonnegative.
    #[arg(long, default_value = "1e-10", value_parser = parse_tol)]
    pub tol: f64,
    /// Output file (written atomically); standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StateSelector {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
    pub b: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Map parameters `w,x,y,z`.
    #[arg(long, value_parser = parse_map)]
    pub map: MapParams,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub state: StateSelector,
    #[arg(long, value_parser = parse_map)]
    pub map: MapParams,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// `LO:HI:STEP`
    #[arg(long, value_parser = parse_range)]
    pub beta_range: Option<GridRange>,
    /// `LO:HI:STEP`
    #[arg(long, value_parser = parse_range)]
    pub gamma_range: Option<GridRange>,
    /// `LO:HI:STEP`
    #[arg(long, value_parser = parse_range)]
    pub b_range: Option<GridRange>,
    #[arg(long, value_parser = parse_map)]
    pub map: MapParams,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct PptArgs {
    #[command(flatten)]
    pub state: StateSelector,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct HorodeckiArgs {
    #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, value_parser = parse_map)]
    pub map: MapParams,
    /// Sweep all 64 Pauli local unitaries.
    #[arg(long)]
    pub orbit: bool,
    /// `sigma-b` or `varrho-b`.
    #[arg(long, value_enum, default_value = "sigma-b")]
    pub family: Family,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

fn tolerance(common: &Common) -> Result<Tolerance, CliError> {
    Ok(Tolerance::with_psd_tol(common.tol)?)
}

fn required(v: Option<f64>, flag: &str, family: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --family {family}")))
}

fn build_state(sel: &StateSelector) -> Result<BipartiteState, CliError> {
    let state = match sel.family {
        Family::RhoBetaGamma => {
            let beta = required(sel.beta, "beta", "rho-beta-gamma")?;
            let gamma = required(sel.gamma, "gamma", "rho-beta-gamma")?;
            build_rho_beta_gamma(RhoFamilyParams::new(beta, gamma)?)
        }
        Family::SigmaB => build_sigma_b(HorodeckiParams::new(required(sel.b, "b", "sigma-b")?)?),
        Family::VarrhoB => build_varrho_b(HorodeckiParams::new(required(sel.b, "b", "varrho-b")?)?),
    };
    Ok(state)
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn verify_map(args: &VerifyArgs) -> Result<u8, CliError> {
    let tol = tolerance(&args.common)?;
    let samples = usize::try_from(args.samples).map_err(|_| CliError::Usage("--samples is too large".into()))?;
    let verdict = verify_map_positivity(&args.map, samples, args.seed, &tol)?;
    emit(&to_json(&VerdictJson::from(&verdict))?, args.common.out.as_deref())?;
    Ok(if verdict.passed() { EXIT_OK } else { EXIT_FINDING })
}

fn detect_cmd(args: &DetectArgs) -> Result<u8, CliError> {
    let tol = tolerance(&args.common)?;
    let state = build_state(&args.state)?;
    let report = detect(&state, &args.map, &tol)?;
    emit(&to_json(&ReportJson::from(&report))?, args.common.out.as_deref())?;
    Ok(EXIT_OK)
}

fn scan_cmd(args: &ScanArgs) -> Result<u8, CliError> {
    let tol = tolerance(&args.common)?;
    let missing = |flag: &str| CliError::Usage(format!("--{flag} is required for this scan"));
    let family = match args.family {
        Family::RhoBetaGamma => ScanFamily::RhoBetaGamma {
            beta: args.beta_range.ok_or_else(|| missing("beta-range"))?,
            gamma: args.gamma_range.ok_or_else(|| missing("gamma-range"))?,
        },
        Family::SigmaB => ScanFamily::SigmaB {
            b: args.b_range.ok_or_else(|| missing("b-range"))?,
        },
        Family::VarrhoB => {
            return Err(CliError::Usage("scan supports rho-beta-gamma and sigma-b".into()));
        }
    };
    let result = scan_grid(family, &args.map, &tol)?;
    emit(&output::render_scan(&result, args.format)?, args.common.out.as_deref())?;
    Ok(EXIT_OK)
}

fn ppt_cmd(args: &PptArgs) -> Result<u8, CliError> {
    let tol = tolerance(&args.common)?;
    let state = build_state(&args.state)?;
    let min_eig_pt = linalg::min_eigenvalue(&state.partial_transpose(Subsystem::B))?;
    let out = PptJson {
        state: StateJson::from(&state),
        ppt: min_eig_pt >= -tol.psd_tol,
        min_eig_pt: round_sig(min_eig_pt),
    };
    emit(&to_json(&out)?, args.common.out.as_deref())?;
    Ok(EXIT_OK)
}

fn horodecki_cmd(args: &HorodeckiArgs) -> Result<u8, CliError> {
    let tol = tolerance(&args.common)?;
    let params = HorodeckiParams::new(args.b)?;
    let state = match args.family {
        Family::SigmaB => build_sigma_b(params),
        Family::VarrhoB => build_varrho_b(params),
        Family::RhoBetaGamma => {
            return Err(CliError::Usage("horodecki supports sigma-b and varrho-b".into()));
        }
    };
    let reports = if args.orbit {
        orbit_reports(&state, &args.map, &tol)?
    } else {
        vec![detect(&state, &args.map, &tol)?]
    };
    let text = match args.format {
        Format::Json => output::reports_json(&reports)?,
        Format::Csv => output::orbit_csv(args.b, &reports)?,
        Format::Gnuplot => return Err(CliError::Usage("horodecki supports --format json or csv".into())),
    };
    emit(&text, args.common.out.as_deref())?;
    let any_detected = reports.iter().any(|r| r.map_detects);
    Ok(if any_detected { EXIT_FINDING } else { EXIT_OK })
}

pub fn execute(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::VerifyMap(a) => verify_map(a),
        Command::Detect(a) => detect_cmd(a),
        Command::Scan(a) => scan_cmd(a),
        Command::PptCheck(a) => ppt_cmd(a),
        Command::Horodecki(a) => horodecki_cmd(a),
    }
}

/// Parses `argv` (program name first) and runs the command. Diagnostics go
/// to standard error.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
