//! Numeric cross-regime comparison at one point `(M, γ)`.

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use tdelay_core::statistics::{evaluate_with_error, RegimeEvaluation};
use tdelay_core::{Engine, Rational, StatisticRequest, Variable};

use crate::config::Config;
use crate::document::regime_key;
use crate::{check_cap, json, CliError, EvalArgs, Output, ReportFormat};

const DEFAULT_INV_M: i64 = 6;
const DEFAULT_GAMMA: i64 = 6;
const DEFAULT_INV_GAMMA: i64 = 10;

#[derive(Debug, Serialize)]
struct Value {
    exact: String,
    approx: String,
}

impl Value {
    fn new(x: &Rational) -> Self {
        Value {
            exact: x.to_string(),
            approx: approx(x),
        }
    }
}

#[derive(Debug, Serialize)]
struct Row {
    regime: &'static str,
    order: i64,
    value: Value,
    first_omitted: Value,
}

#[derive(Debug, Serialize)]
struct Difference {
    a: &'static str,
    b: &'static str,
    abs: Value,
    /// Sum of the two first-omitted magnitudes.
    bound: Value,
}

#[derive(Debug, Serialize)]
struct Report {
    schema_version: u32,
    statistic: String,
    m: String,
    gamma: String,
    rows: Vec<Row>,
    differences: Vec<Difference>,
}

fn approx(x: &Rational) -> String {
    format!("{:.12e}", x.to_f64().unwrap_or(f64::NAN))
}

/// Regimes to run: the ones given orders explicitly, otherwise `1/M` plus
/// whichever absorption expansion the point favours.
fn regimes(a: &EvalArgs) -> Vec<(Variable, i64)> {
    let explicit: Vec<(Variable, i64)> = [
        (Variable::InvM, a.inv_m_order),
        (Variable::Gamma, a.gamma_order),
        (Variable::InvGamma, a.inv_gamma_order),
    ]
    .into_iter()
    .filter_map(|(v, k)| k.map(|k| (v, k)))
    .collect();
    if !explicit.is_empty() {
        return explicit;
    }
    let mut out = vec![(Variable::InvM, DEFAULT_INV_M)];
    if a.gamma <= Rational::one() {
        out.push((Variable::Gamma, DEFAULT_GAMMA));
    }
    if a.gamma >= Rational::one() {
        out.push((Variable::InvGamma, DEFAULT_INV_GAMMA));
    }
    out
}

pub(crate) fn run(engine: &Engine, a: &EvalArgs, cfg: &Config) -> Result<Output, CliError> {
    if !a.gamma.is_positive() {
        return Err(CliError::Input(format!("gamma must be positive, got {}", a.gamma)));
    }
    if !a.m.is_positive() {
        return Err(CliError::Input(format!("M must be positive, got {}", a.m)));
    }
    let stat = a.statistic.statistic();
    let mut evals: Vec<RegimeEvaluation> = Vec::new();
    for (regime, order) in regimes(a) {
        check_cap(order, cfg)?;
        let req = StatisticRequest::new(stat.clone(), regime, order);
        evals.push(evaluate_with_error(engine, &req, &a.m, &a.gamma)?);
    }
    let rows: Vec<Row> = evals
        .iter()
        .map(|e| Row {
            regime: regime_key(e.regime),
            order: e.order,
            value: Value::new(&e.value),
            first_omitted: Value::new(&e.first_omitted),
        })
        .collect();
    let mut differences = Vec::new();
    for (i, x) in evals.iter().enumerate() {
        for y in &evals[i + 1..] {
            let bound = &x.first_omitted + &y.first_omitted;
            differences.push(Difference {
                a: regime_key(x.regime),
                b: regime_key(y.regime),
                abs: Value::new(&(&x.value - &y.value).abs()),
                bound: Value::new(&bound),
            });
        }
    }
    let report = Report {
        schema_version: crate::document::SCHEMA_VERSION,
        statistic: stat.to_string(),
        m: a.m.to_string(),
        gamma: a.gamma.to_string(),
        rows,
        differences,
    };
    let text = match a.format {
        ReportFormat::Json => json(&report),
        ReportFormat::Text => text(&report),
    };
    Ok(Output::ok(text))
}

fn text(r: &Report) -> String {
    let mut out = format!("{} at M = {}, g = {}\n", r.statistic, r.m, r.gamma);
    out.push_str(&format!("{:<10} {:>5}  {:<20} {}\n", "regime", "order", "value", "first omitted"));
    for row in &r.rows {
        out.push_str(&format!(
            "{:<10} {:>5}  {:<20} {}\n",
            row.regime, row.order, row.value.approx, row.first_omitted.approx
        ));
    }
    for d in &r.differences {
        out.push_str(&format!("|{} - {}| = {}  (sum of first omitted {})\n", d.a, d.b, d.abs.approx, d.bound.approx));
    }
    out
}
