use std::fmt::Write as _;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use super::{
    load_settings, write_output, CheckArgs, CliError, CliResult, GridArgs, MatchArgs, OutputFormat, ParamRange,
    PointArgs, Settings, SweepArgs, DEFAULT_ALPHA, DEFAULT_MASS, EXIT_BREACH, EXIT_IRRECONCILABLE, EXIT_OK,
};
use crate::audit::{default_grid, run_identity_suite, AuditThresholds, AuditTolerances, GridPoint};
use crate::dimred::{match_high_t, match_with_coefficients, unit_operator_f, MatchReport};
use crate::domain::{classify_regime, EftCoefficients, PlateSystem, Regime};
use crate::eft::{total_free_energy, SignConvention};
use crate::freefield::FreeEnergyResult;
use crate::thermo::{casimir_force, entropy, DerivativeConfig};

pub const CSV_COLUMNS: [&str; 18] = [
    "L",
    "beta",
    "T",
    "m",
    "alpha",
    "b1",
    "regime",
    "F_total",
    "F_blackbody",
    "F_plate_const",
    "F_boundary",
    "F1a",
    "F1b",
    "F_closed_regime",
    "force",
    "force_bulk_subtracted",
    "entropy",
    "err_bound",
];

const MATCH_RESIDUAL_LIMIT: f64 = 1e-10;

/// One evaluated grid point, in CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "L")]
    pub gap: f64,
    pub beta: f64,
    #[serde(rename = "T")]
    pub temperature: f64,
    pub m: f64,
    pub alpha: f64,
    pub b1: f64,
    pub regime: String,
    #[serde(rename = "F_total")]
    pub f_total: f64,
    #[serde(rename = "F_blackbody")]
    pub f_blackbody: f64,
    #[serde(rename = "F_plate_const")]
    pub f_plate_const: f64,
    #[serde(rename = "F_boundary")]
    pub f_boundary: f64,
    #[serde(rename = "F1a")]
    pub f1a: f64,
    #[serde(rename = "F1b")]
    pub f1b: f64,
    /// NaN in the crossover, where no closed form applies.
    #[serde(rename = "F_closed_regime")]
    pub f_closed_regime: f64,
    pub force: f64,
    pub force_bulk_subtracted: f64,
    pub entropy: f64,
    pub err_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

fn num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{:.16e}", x + 0.0)
    }
}

impl SweepRow {
    fn failed(sys: &PlateSystem, diagnostic: String) -> Self {
        Self {
            gap: sys.gap,
            beta: sys.beta,
            temperature: sys.temperature(),
            m: sys.mass,
            alpha: sys.alpha,
            b1: f64::NAN,
            regime: "error".into(),
            f_total: f64::NAN,
            f_blackbody: f64::NAN,
            f_plate_const: f64::NAN,
            f_boundary: f64::NAN,
            f1a: f64::NAN,
            f1b: f64::NAN,
            f_closed_regime: f64::NAN,
            force: f64::NAN,
            force_bulk_subtracted: f64::NAN,
            entropy: f64::NAN,
            err_bound: f64::INFINITY,
            diagnostic: Some(diagnostic),
        }
    }

    pub fn csv_line(&self) -> String {
        let fields = [
            num(self.gap),
            num(self.beta),
            num(self.temperature),
            num(self.m),
            num(self.alpha),
            num(self.b1),
            self.regime.clone(),
            num(self.f_total),
            num(self.f_blackbody),
            num(self.f_plate_const),
            num(self.f_boundary),
            num(self.f1a),
            num(self.f1b),
            num(self.f_closed_regime),
            num(self.force),
            num(self.force_bulk_subtracted),
            num(self.entropy),
            num(self.err_bound),
        ];
        fields.join(",")
    }
}

/// Everything `eval` reports for one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRecord {
    pub system: PlateSystem,
    pub temperature: f64,
    pub b1: f64,
    pub regime: Regime,
    pub convention: SignConvention,
    pub warnings: Vec<String>,
    pub result: FreeEnergyResult,
    pub force: f64,
    pub force_bulk_subtracted: f64,
    pub entropy: f64,
}

fn evaluate(sys: PlateSystem, settings: &Settings, conv: SignConvention) -> Result<EvalRecord, CliError> {
    let (sys, warnings) = sys.validate()?;
    let cfg = &settings.sum;
    let result = total_free_energy(&sys, cfg, conv)?;
    let raw = DerivativeConfig {
        subtract_bulk: false,
        ..settings.derivative
    };
    let sub = DerivativeConfig {
        subtract_bulk: true,
        ..settings.derivative
    };
    Ok(EvalRecord {
        system: sys,
        temperature: sys.temperature(),
        b1: sys.b1()?,
        regime: classify_regime(&sys, cfg),
        convention: conv,
        warnings: warnings.iter().map(|w| w.to_string()).collect(),
        result,
        force: casimir_force(&sys, cfg, &raw, conv)?,
        force_bulk_subtracted: casimir_force(&sys, cfg, &sub, conv)?,
        entropy: entropy(&sys, cfg, &raw, conv)?,
    })
}

impl From<&EvalRecord> for SweepRow {
    fn from(r: &EvalRecord) -> Self {
        let p = &r.result.parts;
        Self {
            gap: r.system.gap,
            beta: r.system.beta,
            temperature: r.temperature,
            m: r.system.mass,
            alpha: r.system.alpha,
            b1: r.b1,
            regime: r.regime.as_str().into(),
            f_total: r.result.total,
            f_blackbody: p.blackbody,
            f_plate_const: p.plate_constant,
            f_boundary: p.boundary_sum,
            f1a: p.order_alpha_a,
            f1b: p.order_alpha_b,
            f_closed_regime: r.result.closed_form.map_or(f64::NAN, |c| c.value),
            force: r.force,
            force_bulk_subtracted: r.force_bulk_subtracted,
            entropy: r.entropy,
            err_bound: r.result.error_bound,
            diagnostic: None,
        }
    }
}

fn point_beta(args: &PointArgs) -> f64 {
    match (args.beta, args.temperature) {
        (Some(b), _) => b,
        (None, Some(t)) => 1.0 / t,
        (None, None) => f64::NAN,
    }
}

fn format_eval_text(r: &EvalRecord) -> String {
    let mut s = String::new();
    let p = &r.result.parts;
    let lines: [(&str, f64); 17] = [
        ("L", r.system.gap),
        ("beta", r.system.beta),
        ("T", r.temperature),
        ("m", r.system.mass),
        ("alpha", r.system.alpha),
        ("b1", r.b1),
        ("F_total", r.result.total),
        ("F_blackbody", p.blackbody),
        ("F_plate_const", p.plate_constant),
        ("F_boundary", p.boundary_sum),
        ("F1a", p.order_alpha_a),
        ("F1b", p.order_alpha_b),
        ("err_bound", r.result.error_bound),
        ("force", r.force),
        ("force_bulk_subtracted", r.force_bulk_subtracted),
        ("entropy", r.entropy),
        ("F_closed_regime", r.result.closed_form.map_or(f64::NAN, |c| c.value)),
    ];
    let _ = writeln!(s, "regime = {}", r.regime.as_str());
    let _ = writeln!(s, "convention = {}", r.convention.as_str());
    for (k, v) in lines {
        let _ = writeln!(s, "{k} = {}", num(v));
    }
    s
}

pub fn cmd_eval(args: &PointArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let settings = load_settings(args.common.config.as_deref())?;
    let sys = PlateSystem::new(args.gap, point_beta(args), args.m, args.alpha);
    let conv = args.common.convention.into();
    let record = evaluate(sys, &settings, conv)?;
    for w in &record.warnings {
        writeln!(stderr, "warning: {w}")?;
    }
    let text = match args.format {
        OutputFormat::Json => serde_json::to_string_pretty(&record)? + "\n",
        OutputFormat::Text => format_eval_text(&record),
        OutputFormat::Csv => format!("{}\n{}\n", CSV_COLUMNS.join(","), SweepRow::from(&record).csv_line()),
    };
    write_output(args.common.output.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn values(r: Option<ParamRange>, default: f64) -> Vec<f64> {
    r.unwrap_or(ParamRange::scalar(default)).values()
}

/// Expand the ranges into grid points, `L` outermost, then β, m, α.
pub(crate) fn expand_grid(grid: &GridArgs) -> CliResult<Vec<GridPoint>> {
    let gaps = grid
        .gap
        .ok_or_else(|| CliError::Usage("--L is required".into()))?
        .values();
    let betas: Vec<f64> = match (grid.beta, grid.temperature) {
        (Some(b), None) => b.values(),
        (None, Some(t)) => t.values().into_iter().map(|t| 1.0 / t).collect(),
        (Some(_), Some(_)) => return Err(CliError::Usage("--beta and --T are exclusive".into())),
        (None, None) => return Err(CliError::Usage("one of --beta or --T is required".into())),
    };
    let ms = values(grid.m, DEFAULT_MASS);
    let alphas = values(grid.alpha, DEFAULT_ALPHA);
    let mut out = Vec::with_capacity(gaps.len() * betas.len() * ms.len() * alphas.len());
    for &gap in &gaps {
        for &beta in &betas {
            for &m in &ms {
                for &alpha in &alphas {
                    out.push(GridPoint { beta, gap, m, alpha });
                }
            }
        }
    }
    Ok(out)
}

/// Evaluate grid points in parallel; rows come back in grid order.
pub fn sweep_rows(grid: &[GridPoint], settings: &Settings, conv: SignConvention) -> Vec<SweepRow> {
    grid.par_iter()
        .map(|p| {
            let sys = p.system();
            match evaluate(sys, settings, conv) {
                Ok(r) => SweepRow::from(&r),
                Err(e) => SweepRow::failed(&sys, e.to_string()),
            }
        })
        .collect()
}

fn thread_pool(jobs: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))
}

fn timestamp_line() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("# generated_unix_time={secs}\n")
}

pub fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let settings = load_settings(args.common.config.as_deref())?;
    let grid = expand_grid(&args.grid)?;
    let conv = args.common.convention.into();
    let rows = thread_pool(args.jobs)?.install(|| sweep_rows(&grid, &settings, conv));
    for (i, row) in rows.iter().enumerate() {
        if let Some(d) = &row.diagnostic {
            writeln!(stderr, "row {i} (L={}, beta={}): {d}", row.gap, row.beta)?;
        }
    }
    let mut out = String::new();
    match args.format {
        OutputFormat::Json => {
            out.push_str(&serde_json::to_string_pretty(&rows)?);
            out.push('\n');
        }
        OutputFormat::Csv | OutputFormat::Text => {
            if !args.no_timestamp {
                out.push_str(&timestamp_line());
            }
            out.push_str(&CSV_COLUMNS.join(","));
            out.push('\n');
            for row in &rows {
                out.push_str(&row.csv_line());
                out.push('\n');
            }
        }
    }
    write_output(args.common.output.as_deref(), &out, stdout)?;
    Ok(EXIT_OK)
}

fn check_grid(grid: &GridArgs) -> CliResult<Vec<GridPoint>> {
    if grid.gap.is_some() || grid.beta.is_some() || grid.temperature.is_some() {
        return expand_grid(grid);
    }
    let mut points = default_grid();
    if grid.m.is_some() || grid.alpha.is_some() {
        let ms = grid.m.map(|r| r.values());
        let alphas = grid.alpha.map(|r| r.values());
        let mut out = Vec::new();
        for p in &points {
            for &m in ms.as_deref().unwrap_or(&[p.m]) {
                for &alpha in alphas.as_deref().unwrap_or(&[p.alpha]) {
                    out.push(GridPoint { m, alpha, ..*p });
                }
            }
        }
        points = out;
    }
    Ok(points)
}

pub fn cmd_check(args: &CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let settings = load_settings(args.common.config.as_deref())?;
    let grid = check_grid(&args.grid)?;
    for p in &grid {
        p.system().validate()?;
    }
    let tol = match args.tol {
        Some(t) if !(t > 0.0 && t.is_finite()) => {
            return Err(CliError::Usage(format!("--tol {t} must be finite and > 0")))
        }
        Some(t) => AuditTolerances::uniform(t),
        None => AuditTolerances::default(),
    };
    let report = run_identity_suite(&grid, &settings.sum, &tol, &AuditThresholds::default())?;
    let text = serde_json::to_string_pretty(&report)? + "\n";
    write_output(args.common.output.as_deref(), &text, stdout)?;

    let failures = report.reports.iter().filter(|r| !r.pass).count();
    match report.reconciling_convention {
        None => {
            writeln!(stderr, "no sign convention passes I2 and I4 on this grid")?;
            Ok(EXIT_IRRECONCILABLE)
        }
        Some(conv) => {
            writeln!(
                stderr,
                "reconciling convention: {} ({} of {} entries failing overall)",
                conv.as_str(),
                failures,
                report.reports.len()
            )?;
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_BREACH })
        }
    }
}

pub fn cmd_match(args: &MatchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let settings = load_settings(args.common.config.as_deref())?;
    let grid = expand_grid(&args.grid)?;
    let conv = args.common.convention.into();
    let mut reports: Vec<MatchReport> = Vec::with_capacity(grid.len());
    for p in &grid {
        let (sys, _) = p.system().validate()?;
        let report = match args.b1 {
            None => match_high_t(&sys, &settings.sum, conv)?,
            Some(b1) => {
                let coeffs = EftCoefficients {
                    b1,
                    e1: b1,
                    e2: b1,
                    f_unit: unit_operator_f(sys.beta, sys.gap, b1),
                    d1: None,
                };
                match_with_coefficients(&sys, &coeffs, &settings.sum, conv)
            }
        };
        if report.regime != Regime::HighT {
            writeln!(
                stderr,
                "warning: (beta={}, L={}) is {}, not high temperature; the 3d theory is not expected to apply",
                sys.beta,
                sys.gap,
                report.regime.as_str()
            )?;
        }
        reports.push(report);
    }
    let text = match args.format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports)? + "\n",
        OutputFormat::Csv | OutputFormat::Text => {
            let mut s = String::from("L,beta,T,lhs,rhs,residual,regime\n");
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    num(r.gap),
                    num(r.beta),
                    num(1.0 / r.beta),
                    num(r.lhs),
                    num(r.rhs),
                    num(r.residual),
                    r.regime.as_str()
                );
            }
            s
        }
    };
    write_output(args.common.output.as_deref(), &text, stdout)?;
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(if worst < MATCH_RESIDUAL_LIMIT { EXIT_OK } else { EXIT_BREACH })
}
