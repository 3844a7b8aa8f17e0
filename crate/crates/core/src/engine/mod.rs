//! Series expansions of Schur-moments of `R` in the three regimes, and the
//! binomial transform to Schur-moments of `Q = (1 − R)/γ`.

mod determinants;
mod factorials;
mod gamma;
mod inv_gamma;
mod inv_m;

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

pub use determinants::{binomial_det_b, geometric_det_g};
pub use factorials::{falling_factorial_gen, g_beta, rising_factorial_gen};

use crate::algebra::{Rational, RationalFunction, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::{subpartitions, Partition, Tables};
use crate::error::{Error, Result};

/// An asymptotic regime, named by its expansion variable.
pub type Regime = Variable;

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "inv-m" | "1/m" | "m" => Ok(Variable::InvM),
            "gamma" | "g" => Ok(Variable::Gamma),
            "inv-gamma" | "inv-g" | "1/gamma" | "1/g" => Ok(Variable::InvGamma),
            _ => Err(Error::InvalidRequest(format!(
                "unknown regime `{s}` (expected inv-m, gamma or inv-gamma)"
            ))),
        }
    }
}

/// A regime together with the highest power of its variable to keep exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegimeRequest {
    pub regime: Regime,
    pub order: i64,
}

impl RegimeRequest {
    pub fn new(regime: Regime, order: i64) -> Self {
        RegimeRequest { regime, order }
    }
}

/// Order-preserving map, run on the rayon pool when `parallel` is enabled.
pub(crate) fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Entry point for all expansions. Holds the combinatorial tables and a
/// cache of `⟨s_μ(R)⟩` at the highest order computed so far.
#[derive(Debug, Default)]
pub struct Engine {
    tables: Arc<Tables>,
    r_cache: RwLock<HashMap<(Partition, Regime), TruncatedSeries>>,
}

fn covers(s: &TruncatedSeries, order: i64) -> bool {
    s.order().is_none_or(|o| o >= order)
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tables(tables: Arc<Tables>) -> Self {
        Engine {
            tables,
            r_cache: RwLock::default(),
        }
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    /// `⟨s_μ(R)⟩` exact through `x^order` in the regime's variable `x`.
    pub fn schur_moment_r(&self, mu: &Partition, regime: Regime, order: i64) -> TruncatedSeries {
        let key = (mu.clone(), regime);
        if let Some(s) = self.r_cache.read().expect("cache lock").get(&key) {
            if covers(s, order) {
                return s.truncate(order);
            }
        }
        let s = match regime {
            Variable::InvM => inv_m::schur_moment_r(&self.tables, mu, order),
            Variable::Gamma => gamma::schur_moment_r(&self.tables, mu, order),
            Variable::InvGamma => inv_gamma::schur_moment_r(&self.tables, mu, order),
        };
        let mut cache = self.r_cache.write().expect("cache lock");
        let keep = cache.get(&key).is_none_or(|old| !covers(old, order));
        if keep {
            cache.insert(key, s.clone());
        }
        s
    }

    /// `⟨s_λ(Q)⟩` exact through `x^order`, via
    /// `⟨s_λ(Q)⟩ = γ^{−|λ|} Σ_{μ⊂λ} (−1)^{|μ|} B_{λμ} ⟨s_μ(R)⟩`.
    pub fn schur_moment_q(&self, lambda: &Partition, regime: Regime, order: i64) -> Result<TruncatedSeries> {
        if lambda.is_empty() {
            return Err(Error::InvalidRequest("Schur-moment of the empty partition".into()));
        }
        let n = lambda.weight() as i64;
        let subs = subpartitions(lambda);
        let mut acc = TruncatedSeries::zero(regime);
        for mu in &subs {
            let b = binomial_det_b(lambda, mu)?;
            let sign = if mu.weight() % 2 == 0 { 1 } else { -1 };
            let b = b.scale(&Rational::from_integer(sign.into()));
            let k = mu.weight() as i64;
            let term = match regime {
                Variable::InvM => {
                    let r = self.schur_moment_r(mu, regime, order + n - k);
                    TruncatedSeries::laurent_inverse_power(&b, 0, None).mul(&r)?
                }
                Variable::Gamma => self
                    .schur_moment_r(mu, regime, order + n)
                    .scale(&RationalFunction::from_poly(b)),
                Variable::InvGamma => self
                    .schur_moment_r(mu, regime, order - n)
                    .scale(&RationalFunction::from_poly(b)),
            };
            acc = acc.add(&term)?;
        }
        match regime {
            Variable::InvM => {
                let g = RationalFunction::power_of_symbol(Symbol::Gamma, -n);
                Ok(acc.scale(&g).truncate(order))
            }
            Variable::Gamma => {
                if let Some(p) = acc.min_power().filter(|&p| p < n) {
                    return Err(Error::Consistency(format!(
                        "⟨s_{lambda}(Q)⟩: coefficient of g^{p} in the γ-expansion of \
                         Σ(−1)^|μ| B ⟨s_μ(R)⟩ does not cancel"
                    )));
                }
                Ok(acc.shift(-n).truncate(order))
            }
            Variable::InvGamma => Ok(acc.shift(n).truncate(order)),
        }
    }
}

/// `Σ_{ν: D(ν)=D} c^ν_{ab} d_ν t_ν²`, the Durfee-filtered LR sum shared by
/// all three regimes.
pub fn durfee_filtered_lr_sum(tables: &Tables, a: &Partition, b: &Partition, durfee: usize) -> num_bigint::BigInt {
    tables.lr_sum(a, b, durfee)
}
