//! The `series` output document and its three renderings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use tdelay_core::algebra::{integer_parts, render_series, Factored, Style};
use tdelay_core::{Polynomial, RationalFunction, Statistic, StatisticRequest, Symbol, TruncatedSeries, Variable};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("unsupported schema_version {0}")]
    Schema(u32),
    #[error("bad integer `{0}`")]
    Integer(String),
    #[error("unknown symbol `{0}`")]
    Symbol(String),
    #[error(transparent)]
    Core(#[from] tdelay_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestEcho {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub regime: String,
    pub order: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff {
    /// Integer numerator coefficients, lowest degree first.
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub symbol: String,
    pub factored: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub power: i64,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub request: RequestEcho,
    pub terms: Vec<Term>,
    pub guarantee_order: i64,
}

pub fn regime_key(v: Variable) -> &'static str {
    match v {
        Variable::InvM => "inv_m",
        Variable::Gamma => "gamma",
        Variable::InvGamma => "inv_gamma",
    }
}

fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_ints(v: &[String], symbol: Symbol) -> Result<Polynomial, DocumentError> {
    let coeffs = v
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map(BigRational::from_integer)
                .map_err(|_| DocumentError::Integer(s.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(symbol, coeffs))
}

impl OutputDocument {
    pub fn new(req: &StatisticRequest, series: &TruncatedSeries) -> Self {
        let terms = series
            .terms()
            .map(|(power, c)| {
                let (num, den) = integer_parts(c);
                Term {
                    power,
                    coeff: Coeff {
                        num: ints(&num),
                        den: ints(&den),
                        symbol: c.symbol().text().to_string(),
                        factored: Factored::new(c).render(Style::Text),
                    },
                }
            })
            .collect();
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            request: RequestEcho {
                kind: req.statistic.kind().to_string(),
                partition: req.statistic.partition().map(ToString::to_string),
                n: req.statistic.n(),
                regime: regime_key(req.regime.regime).to_string(),
                order: req.regime.order,
            },
            terms,
            guarantee_order: series.order().unwrap_or(req.regime.order),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rebuilds the exact series the document describes.
    pub fn to_series(&self) -> Result<TruncatedSeries, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(self.schema_version));
        }
        let regime: Variable = self.request.regime.parse()?;
        let mut s = TruncatedSeries::zero_through(regime, self.guarantee_order);
        for t in &self.terms {
            let symbol = match t.coeff.symbol.as_str() {
                "M" => Symbol::M,
                "g" => Symbol::Gamma,
                other => return Err(DocumentError::Symbol(other.to_string())),
            };
            let r = RationalFunction::new(parse_ints(&t.coeff.num, symbol)?, parse_ints(&t.coeff.den, symbol)?)?;
            s.add_term(t.power, r);
        }
        Ok(s)
    }
}

fn latex_name(stat: &Statistic) -> String {
    match stat {
        Statistic::SchurQ { partition } => format!("\\langle s_{{({partition})}}(Q)\\rangle"),
        Statistic::SchurR { partition } => format!("\\langle s_{{({partition})}}(R)\\rangle"),
        Statistic::PowerSum { partition } => format!("\\langle p_{{({partition})}}(Q)\\rangle"),
        Statistic::TracePowers { partition } => {
            let l = partition.length();
            let den = if l == 1 { "M".to_string() } else { format!("M^{{{l}}}") };
            format!("\\langle p_{{({partition})}}(Q)\\rangle/{den}")
        }
        Statistic::WignerMoment { n: 1 } => "\\langle \\tau_W\\rangle".into(),
        Statistic::WignerMoment { n } => format!("\\langle \\tau_W^{{{n}}}\\rangle"),
        Statistic::Cumulant { n } => format!("k_{{{n}}}"),
        Statistic::Variance => "\\mathrm{var}(\\tau_W)".into(),
    }
}

/// Renders a computed series in the requested format.
pub fn render(req: &StatisticRequest, series: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Text => format!("{} = {}\n", req.statistic, render_series(series, Style::Text)),
        Format::Latex => format!("{} = {}\n", latex_name(&req.statistic), render_series(series, Style::Latex)),
        Format::Json => OutputDocument::new(req, series).to_json(),
    }
}
