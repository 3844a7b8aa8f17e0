//! Command-line front end for the time-delay series engine.

pub mod config;
pub mod document;
mod eval;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use tdelay_core::statistics::{compute, validate_conjectures};
use tdelay_core::verify::{run_scope, Outcome, Scope, Severity};
use tdelay_core::{Engine, Partition, Statistic, StatisticRequest, Variable};
use thiserror::Error;

use config::{Config, ConfigError};
pub use document::{Format, OutputDocument};

#[derive(Debug, Parser)]
#[command(name = "tdelay", version, about = "Exact series for time-delay statistics of absorbing chaotic cavities")]
pub struct Cli {
    /// Plain-text key=value configuration file.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Overrides the configured order cap.
    #[arg(long, global = true, value_name = "K")]
    pub order_cap: Option<i64>,
    /// Writes output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Reports wall time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expands one statistic as an exact truncated series.
    Series(SeriesArgs),
    /// Reproduces the registered printed series.
    Verify(VerifyArgs),
    /// Evaluates a statistic numerically in several regimes and compares them.
    Eval(EvalArgs),
    /// Checks the conjectured relations (a)-(e).
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Args)]
#[group(id = "statistic", required = true, multiple = false)]
pub struct StatisticArgs {
    /// <s_λ(Q)> for a partition such as 3,1,1.
    #[arg(long, value_name = "PARTITION")]
    pub schur: Option<Partition>,
    /// <s_μ(R)>, the reflection-matrix Schur-moment.
    #[arg(long, value_name = "PARTITION")]
    pub schur_r: Option<Partition>,
    /// <p_λ(Q)>.
    #[arg(long, value_name = "PARTITION")]
    pub power_sum: Option<Partition>,
    /// <p_λ(Q)>/M^ℓ(λ), e.g. 2 for <Tr Q^2>/M or 1,1 for <(Tr Q)^2>/M^2.
    #[arg(long, value_name = "PARTITION")]
    pub trace_powers: Option<Partition>,
    /// <τ_W^n>.
    #[arg(long, value_name = "N")]
    pub wigner_moment: Option<usize>,
    /// k_n, the n-th cumulant of τ_W.
    #[arg(long, value_name = "N")]
    pub cumulant: Option<usize>,
    /// var(τ_W).
    #[arg(long)]
    pub variance: bool,
}

impl StatisticArgs {
    pub fn statistic(&self) -> Statistic {
        let p = |x: &Option<Partition>| x.clone();
        if let Some(partition) = p(&self.schur) {
            Statistic::SchurQ { partition }
        } else if let Some(partition) = p(&self.schur_r) {
            Statistic::SchurR { partition }
        } else if let Some(partition) = p(&self.power_sum) {
            Statistic::PowerSum { partition }
        } else if let Some(partition) = p(&self.trace_powers) {
            Statistic::TracePowers { partition }
        } else if let Some(n) = self.wigner_moment {
            Statistic::WignerMoment { n }
        } else if let Some(n) = self.cumulant {
            Statistic::Cumulant { n }
        } else {
            Statistic::Variance
        }
    }
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub statistic: StatisticArgs,
    /// inv-m, gamma or inv-gamma.
    #[arg(long)]
    pub regime: Variable,
    /// Highest power of the expansion variable kept exact.
    #[arg(long, allow_negative_numbers = true)]
    pub order: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, intro, section3, section4, section5 or conjectures.
    #[arg(long, default_value = "all", value_parser = parse_scope)]
    pub scope: ScopeSel,
    /// Largest n for the conjecture items.
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    /// Soft findings fail the run too.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Clone, Debug)]
pub struct ScopeSel(pub Vec<Scope>);

fn parse_scope(s: &str) -> Result<ScopeSel, String> {
    if s == "all" {
        return Ok(ScopeSel(Scope::ALL.to_vec()));
    }
    s.parse::<Scope>().map(|x| ScopeSel(vec![x])).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub statistic: StatisticArgs,
    /// Number of channels, an exact rational such as 20.
    #[arg(long = "m", value_name = "M")]
    pub m: tdelay_core::Rational,
    /// Absorption strength, an exact rational such as 1/10.
    #[arg(long, value_name = "GAMMA")]
    pub gamma: tdelay_core::Rational,
    #[arg(long, value_name = "K")]
    pub inv_m_order: Option<i64>,
    #[arg(long, value_name = "K")]
    pub gamma_order: Option<i64>,
    #[arg(long, value_name = "K")]
    pub inv_gamma_order: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    /// Failures exit with status 1.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tdelay_core::Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCap { order: i64, cap: i64 },
    #[error("{0}")]
    Input(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

/// What a command produced: the text for stdout and the exit status.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(cap) = cli.order_cap {
        cfg.order_cap = cap;
    }
    Ok(cfg)
}

fn check_cap(order: i64, cfg: &Config) -> Result<(), CliError> {
    if order > cfg.order_cap {
        return Err(CliError::OrderCap { order, cap: cfg.order_cap });
    }
    Ok(())
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, cfg: &Config, engine: &Engine) -> Result<Output, CliError> {
    match &cli.command {
        Command::Series(a) => {
            check_cap(a.order, cfg)?;
            let req = StatisticRequest::new(a.statistic.statistic(), a.regime, a.order);
            let s = compute(engine, &req)?;
            Ok(Output::ok(document::render(&req, &s, a.format)))
        }
        Command::Verify(a) => Ok(verify(engine, a)?),
        Command::Eval(a) => eval::run(engine, a, cfg),
        Command::Conjecture(a) => {
            let report = validate_conjectures(engine, a.n_max)?;
            let text = match a.format {
                ReportFormat::Json => json(&report),
                ReportFormat::Text => {
                    let mut out: String = report.items.iter().map(|i| format!("{i}\n")).collect();
                    let passed = report.items.iter().filter(|i| i.passed()).count();
                    out.push_str(&format!("{passed} of {} conjecture instances hold\n", report.items.len()));
                    out
                }
            };
            let code = if a.strict && !report.all_passed() { EXIT_FAILED } else { 0 };
            Ok(Output { text, code })
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn verify(engine: &Engine, a: &VerifyArgs) -> tdelay_core::Result<Output> {
    let per_scope: Vec<Vec<Outcome>> = a
        .scope
        .0
        .par_iter()
        .map(|&scope| run_scope(engine, scope, a.n_max))
        .collect::<tdelay_core::Result<_>>()?;
    let outcomes: Vec<Outcome> = per_scope.into_iter().flatten().collect();
    let hard_failed = outcomes.iter().filter(|o| o.severity == Severity::Hard && !o.passed).count();
    let soft_failed = outcomes.iter().filter(|o| o.severity == Severity::Soft && !o.passed).count();
    let text = match a.format {
        ReportFormat::Json => json(&outcomes),
        ReportFormat::Text => {
            let mut out: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
            let hard = outcomes.iter().filter(|o| o.severity == Severity::Hard).count();
            out.push_str(&format!(
                "hard: {} of {hard} passed; soft: {soft_failed} noted of {}\n",
                hard - hard_failed,
                outcomes.len() - hard
            ));
            out
        }
    };
    let code = if hard_failed > 0 || (a.strict && soft_failed > 0) { EXIT_FAILED } else { 0 };
    Ok(Output { text, code })
}

/// Entry point shared by the binary: returns the process exit status.
pub fn main_with(cli: Cli) -> i32 {
    let started = Instant::now();
    let result = load_config(&cli).and_then(|cfg| {
        if let Some(n) = cfg.threads {
            // Fails only if a pool already exists, which is harmless.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        run(&cli, &cfg, &Engine::new())
    });
    let code = match result.and_then(|out| emit(&cli, out)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    if cli.timing {
        eprintln!("timing: {:.3}s", started.elapsed().as_secs_f64());
    }
    code
}

fn emit(cli: &Cli, out: Output) -> Result<i32, CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, &out.text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{}", out.text),
    }
    Ok(out.code)
}
