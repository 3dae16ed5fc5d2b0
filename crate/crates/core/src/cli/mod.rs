//! Command-line front end: argument model, config files and dispatch.
//!
//! Exit codes: 0 ok, 1 identity or residual breach, 2 validation error,
//! 3 convergence failure, 4 no sign convention reconciles the identities.

mod commands;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::eft::SignConvention;
use crate::error::Error;
use crate::modesum::SumConfig;
use crate::thermo::{DerivativeConfig, Scheme};

pub use commands::{cmd_check, cmd_eval, cmd_match, cmd_sweep, sweep_rows, EvalRecord, SweepRow, CSV_COLUMNS};

/// Directory that relative `--output` paths are resolved against.
pub const OUTPUT_DIR_ENV: &str = "CASIMIR_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_BREACH: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_IRRECONCILABLE: i32 = 4;

/// Default fine-structure constant.
pub const DEFAULT_ALPHA: f64 = 1.0 / 137.035_999;
pub const DEFAULT_MASS: f64 = 1000.0;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(Error),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_VALIDATION,
            CliError::Engine(Error::Convergence { .. }) | CliError::Engine(Error::StepCollapse(_)) => {
                EXIT_CONVERGENCE
            }
            CliError::Engine(_) => EXIT_VALIDATION,
            CliError::Io(_) | CliError::Json(_) => EXIT_BREACH,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Lin,
    Log,
}

/// A scalar or `min:max:count[:lin|log]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl ParamRange {
    pub fn scalar(v: f64) -> Self {
        Self {
            min: v,
            max: v,
            count: 1,
            spacing: Spacing::Lin,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let u = i as f64 / last;
                match self.spacing {
                    Spacing::Lin => self.min + u * (self.max - self.min),
                    Spacing::Log => (self.min.ln() + u * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }

    pub fn is_scalar(&self) -> bool {
        self.count == 1
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}"));
        match parts.as_slice() {
            [v] => Ok(ParamRange::scalar(num(v)?)),
            [lo, hi, n] | [lo, hi, n, _] => {
                let spacing = match parts.get(3).map(|s| s.trim()) {
                    None | Some("lin") => Spacing::Lin,
                    Some("log") => Spacing::Log,
                    Some(other) => return Err(format!("unknown spacing '{other}'")),
                };
                let count: usize = n.trim().parse().map_err(|e| format!("count '{n}': {e}"))?;
                let (min, max) = (num(lo)?, num(hi)?);
                if count < 1 {
                    return Err("count must be >= 1".into());
                }
                if count > 1 && !(min < max) {
                    return Err(format!("range needs min < max, got {min}:{max}"));
                }
                if spacing == Spacing::Log && min <= 0.0 {
                    return Err("log spacing needs min > 0".into());
                }
                Ok(ParamRange {
                    min,
                    max,
                    count,
                    spacing,
                })
            }
            _ => Err(format!("expected a value or min:max:count[:lin|log], got '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[value(alias = "as_printed")]
    AsPrinted,
    Reconciled,
}

impl From<ConventionArg> for SignConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::AsPrinted => SignConvention::AsPrinted,
            ConventionArg::Reconciled => SignConvention::Reconciled,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "casimir", about = "Finite-temperature Casimir free energy with order-alpha EFT corrections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the free energy, force and entropy at one point.
    Eval(PointArgs),
    /// Evaluate a parameter grid and emit CSV or JSON.
    Sweep(SweepArgs),
    /// Run the identity audit and emit a JSON report.
    Check(CheckArgs),
    /// Compare the 3d effective theory with the 4d high-temperature form.
    Match(MatchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Sign of the bulk order-alpha piece.
    #[arg(long, value_enum, default_value = "as-printed")]
    pub convention: ConventionArg,
    /// Flat key=value file overriding series tolerances and caps.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Plate separation.
    #[arg(long = "L")]
    pub gap: f64,
    /// Inverse temperature.
    #[arg(long, conflicts_with = "temperature", required_unless_present = "temperature")]
    pub beta: Option<f64>,
    /// Temperature.
    #[arg(long = "T")]
    pub temperature: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_MASS)]
    pub m: f64,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Plate separation: value or min:max:count[:lin|log].
    #[arg(long = "L")]
    pub gap: Option<ParamRange>,
    /// Inverse temperature range.
    #[arg(long, conflicts_with = "temperature")]
    pub beta: Option<ParamRange>,
    /// Temperature range (converted to beta).
    #[arg(long = "T")]
    pub temperature: Option<ParamRange>,
    #[arg(long)]
    pub m: Option<ParamRange>,
    #[arg(long)]
    pub alpha: Option<ParamRange>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Omit the timestamp header line.
    #[arg(long)]
    pub no_timestamp: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Grid ranges; without L and beta/T the built-in audit grid is used.
    #[command(flatten)]
    pub grid: GridArgs,
    /// Replace every identity's tolerance with this value.
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MatchArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Override b1 (and e1 = e2 = b1).
    #[arg(long)]
    pub b1: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Settings that a config file may override.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Settings {
    pub sum: SumConfig,
    pub derivative: DerivativeConfig,
}

/// Parse `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> CliResult<Settings> {
    let mut s = Settings::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        let float = || {
            value
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("config {key}: {e}")))
        };
        let int = || {
            value
                .parse::<usize>()
                .map_err(|e| CliError::Usage(format!("config {key}: {e}")))
        };
        match key {
            "rel_tol" => s.sum.rel_tol = float()?,
            "abs_tol" => s.sum.abs_tol = float()?,
            "max_image" => s.sum.max_image = int()?,
            "max_matsubara" => s.sum.max_matsubara = int()?,
            "oracle_n_max" => s.sum.oracle_terms.0 = int()?,
            "oracle_j_max" => s.sum.oracle_terms.1 = int()?,
            "r_low" => s.sum.r_low = float()?,
            "r_high" => s.sum.r_high = float()?,
            "step_rel" => s.derivative.step_rel = float()?,
            "scheme" => {
                s.derivative.scheme = match value {
                    "central_2" => Scheme::Central2,
                    "central_4" => Scheme::Central4,
                    other => return Err(CliError::Usage(format!("config scheme: unknown '{other}'"))),
                }
            }
            other => return Err(CliError::Usage(format!("config: unknown key '{other}'"))),
        }
    }
    s.sum.validate()?;
    s.derivative.validate()?;
    Ok(s)
}

pub fn load_settings(path: Option<&Path>) -> CliResult<Settings> {
    match path {
        None => Ok(Settings::default()),
        Some(p) => parse_config(&fs::read_to_string(p)?),
    }
}

/// Resolve `--output`, honouring [`OUTPUT_DIR_ENV`] for relative paths.
pub fn resolve_output(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV) {
            return Path::new(&dir).join(path);
        }
    }
    path.to_path_buf()
}

pub(crate) fn write_output(target: Option<&Path>, content: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match target {
        Some(p) => {
            let path = resolve_output(p);
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)?;
                }
            }
            fs::write(path, content)?;
        }
        None => stdout.write_all(content.as_bytes())?,
    }
    Ok(())
}

/// Run a parsed command. Diagnostics go to `stderr`; the exit code is returned.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, stdout, stderr),
        Command::Sweep(a) => cmd_sweep(&a, stdout, stderr),
        Command::Check(a) => cmd_check(&a, stdout, stderr),
        Command::Match(a) => cmd_match(&a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!("2.5".parse::<ParamRange>().unwrap(), ParamRange::scalar(2.5));
        let r: ParamRange = "1:100:3:log".parse().unwrap();
        let v = r.values();
        assert_eq!(v.len(), 3);
        assert!((v[1] - 10.0).abs() < 1e-12);
        let lin: ParamRange = "0:1:5".parse().unwrap();
        assert_eq!(lin.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!("2:1:3".parse::<ParamRange>().is_err());
        assert!("1:2:0".parse::<ParamRange>().is_err());
        assert!("0:2:3:log".parse::<ParamRange>().is_err());
        assert!("1:2:3:cubic".parse::<ParamRange>().is_err());
    }

    #[test]
    fn config_parsing() {
        let s = parse_config("# comment\nrel_tol = 1e-9\nmax_image=50 # inline\nscheme = central_4\n").unwrap();
        assert_eq!(s.sum.rel_tol, 1e-9);
        assert_eq!(s.sum.max_image, 50);
        assert_eq!(s.derivative.scheme, Scheme::Central4);
        assert!(parse_config("bogus = 1").is_err());
        assert!(parse_config("rel_tol = -1").is_err());
        assert!(parse_config("rel_tol 1").is_err());
    }
}
