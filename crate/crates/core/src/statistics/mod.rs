//! Physically named statistics built from Schur-moments: power-sum moments,
//! moments and cumulants of the Wigner time delay `τ_W = Tr(Q)/M`, plus the
//! validators for the observed relations and conjectures.

mod conjectures;
mod consistency;
mod moments;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use conjectures::{validate_conjectures, ConjectureItem, ConjectureKind, ConjectureReport};
pub use consistency::{
    double_expansion_mismatches, evaluate_with_error, ExpansionMismatch, RegimeEvaluation,
};
pub use moments::{
    cumulant, cumulants_from_moments, moments_from_cumulants, power_sum_moment, trace_power_moment,
    variance, wigner_moment, wigner_moments,
};

use crate::algebra::{RationalFunction, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::Partition;
use crate::engine::{Engine, RegimeRequest};
use crate::error::{Error, Result};

/// What to expand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Statistic {
    /// `⟨s_λ(Q)⟩`.
    SchurQ { partition: Partition },
    /// `⟨s_μ(R)⟩`.
    SchurR { partition: Partition },
    /// `⟨p_λ(Q)⟩ = ⟨Π Tr(Q^{λ_i})⟩`.
    PowerSum { partition: Partition },
    /// `⟨p_λ(Q)⟩ / M^{ℓ(λ)}`, e.g. `⟨Tr Q²⟩/M` or `⟨(Tr Q)²⟩/M²`.
    TracePowers { partition: Partition },
    /// `⟨τ_W^n⟩`.
    WignerMoment { n: usize },
    /// `k_n`, the n-th cumulant of `τ_W`.
    Cumulant { n: usize },
    /// `var(τ_W) = k_2`.
    Variance,
}

impl Statistic {
    pub fn kind(&self) -> &'static str {
        match self {
            Statistic::SchurQ { .. } => "schur_q",
            Statistic::SchurR { .. } => "schur_r",
            Statistic::PowerSum { .. } => "power_sum",
            Statistic::TracePowers { .. } => "trace_powers",
            Statistic::WignerMoment { .. } => "wigner_moment",
            Statistic::Cumulant { .. } => "cumulant",
            Statistic::Variance => "variance",
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Statistic::SchurQ { partition }
            | Statistic::SchurR { partition }
            | Statistic::PowerSum { partition }
            | Statistic::TracePowers { partition } => Some(partition),
            _ => None,
        }
    }

    pub fn n(&self) -> Option<usize> {
        match self {
            Statistic::WignerMoment { n } | Statistic::Cumulant { n } => Some(*n),
            Statistic::Variance => Some(2),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Statistic::SchurQ { partition }
            | Statistic::PowerSum { partition }
            | Statistic::TracePowers { partition }
                if partition.is_empty() =>
            {
                Err(Error::InvalidRequest(format!("{} needs a non-empty partition", self.kind())))
            }
            Statistic::WignerMoment { n: 0 } | Statistic::Cumulant { n: 0 } => {
                Err(Error::InvalidRequest(format!("{} needs n ≥ 1", self.kind())))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::SchurQ { partition } => write!(f, "<s_({partition})(Q)>"),
            Statistic::SchurR { partition } => write!(f, "<s_({partition})(R)>"),
            Statistic::PowerSum { partition } => write!(f, "<p_({partition})(Q)>"),
            Statistic::TracePowers { partition } => {
                write!(f, "<p_({partition})(Q)>/M^{}", partition.length())
            }
            Statistic::WignerMoment { n } => write!(f, "<tau_W^{n}>"),
            Statistic::Cumulant { n } => write!(f, "k_{n}"),
            Statistic::Variance => f.write_str("var(tau_W)"),
        }
    }
}

/// A statistic in a regime at an order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatisticRequest {
    pub statistic: Statistic,
    pub regime: RegimeRequest,
}

impl StatisticRequest {
    pub fn new(statistic: Statistic, regime: Variable, order: i64) -> Self {
        StatisticRequest {
            statistic,
            regime: RegimeRequest::new(regime, order),
        }
    }
}

/// Expands a statistic.
pub fn compute(engine: &Engine, req: &StatisticRequest) -> Result<TruncatedSeries> {
    req.statistic.validate()?;
    let RegimeRequest { regime, order } = req.regime;
    match &req.statistic {
        Statistic::SchurQ { partition } => engine.schur_moment_q(partition, regime, order),
        Statistic::SchurR { partition } => Ok(engine.schur_moment_r(partition, regime, order)),
        Statistic::PowerSum { partition } => power_sum_moment(engine, partition, regime, order),
        Statistic::TracePowers { partition } => trace_power_moment(engine, partition, regime, order),
        Statistic::WignerMoment { n } => wigner_moment(engine, *n, regime, order),
        Statistic::Cumulant { n } => cumulant(engine, *n, regime, order),
        Statistic::Variance => variance(engine, regime, order),
    }
}

/// Order at which a quantity must be computed so that after division by
/// `M^k` it is exact through `order`.
pub(crate) fn order_before_division(regime: Variable, order: i64, k: usize) -> i64 {
    match regime {
        Variable::InvM => order - k as i64,
        Variable::Gamma | Variable::InvGamma => order,
    }
}

/// Divides a series by `M^k`.
pub(crate) fn divide_by_m_power(s: &TruncatedSeries, k: usize) -> TruncatedSeries {
    match s.variable() {
        Variable::InvM => s.shift(k as i64),
        Variable::Gamma | Variable::InvGamma => {
            s.scale(&RationalFunction::power_of_symbol(Symbol::M, -(k as i64)))
        }
    }
}
