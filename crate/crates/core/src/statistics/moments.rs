use super::{divide_by_m_power, order_before_division};
use crate::algebra::{Rational, TruncatedSeries, Variable};
use crate::combinatorics::{binomial, Partition};
use crate::engine::Engine;
use crate::error::{Error, Result};

/// Sum of `c_μ ⟨s_μ(Q)⟩` over `μ ⊢ n`.
fn schur_combination<F>(engine: &Engine, n: usize, regime: Variable, order: i64, weight: F) -> Result<TruncatedSeries>
where
    F: Fn(&Partition) -> Result<Rational>,
{
    let mut acc = TruncatedSeries::zero(regime);
    for mu in engine.tables().partitions(n, false).iter() {
        let c = weight(mu)?;
        if c == Rational::from_integer(0.into()) {
            continue;
        }
        let s = engine.schur_moment_q(mu, regime, order)?;
        acc = acc.add(&s.scale_rational(&c))?;
    }
    Ok(acc.truncate(order))
}

/// `⟨p_λ(Q)⟩ = Σ_{μ⊢|λ|} χ_μ(λ) ⟨s_μ(Q)⟩`.
pub fn power_sum_moment(engine: &Engine, lambda: &Partition, regime: Variable, order: i64) -> Result<TruncatedSeries> {
    if lambda.is_empty() {
        return Err(Error::InvalidRequest("power sum of the empty partition".into()));
    }
    schur_combination(engine, lambda.weight(), regime, order, |mu| {
        Ok(Rational::from_integer(engine.tables().character(mu, lambda)?.into()))
    })
}

/// `⟨p_λ(Q)⟩ / M^{ℓ(λ)}`.
pub fn trace_power_moment(engine: &Engine, lambda: &Partition, regime: Variable, order: i64) -> Result<TruncatedSeries> {
    let k = lambda.length();
    let raw = power_sum_moment(engine, lambda, regime, order_before_division(regime, order, k))?;
    Ok(divide_by_m_power(&raw, k).truncate(order))
}

/// `⟨τ_W^n⟩ = M^{−n} Σ_{μ⊢n} d_μ ⟨s_μ(Q)⟩`.
pub fn wigner_moment(engine: &Engine, n: usize, regime: Variable, order: i64) -> Result<TruncatedSeries> {
    if n == 0 {
        return Ok(TruncatedSeries::one(regime));
    }
    let raw = schur_combination(engine, n, regime, order_before_division(regime, order, n), |mu| {
        Ok(Rational::from_integer(mu.dimension()))
    })?;
    Ok(divide_by_m_power(&raw, n).truncate(order))
}

/// `[⟨τ_W^0⟩, …, ⟨τ_W^n⟩]`, each exact through `order`.
pub fn wigner_moments(engine: &Engine, n: usize, regime: Variable, order: i64) -> Result<Vec<TruncatedSeries>> {
    (0..=n).map(|j| wigner_moment(engine, j, regime, order)).collect()
}

/// Cumulants `[k_1, …, k_n]` from moments `[m_0 = 1, m_1, …, m_n]` by
/// `k_n = m_n − Σ_{j=1}^{n−1} C(n−1, j−1) k_j m_{n−j}`.
pub fn cumulants_from_moments(moments: &[TruncatedSeries]) -> Result<Vec<TruncatedSeries>> {
    let mut k: Vec<TruncatedSeries> = Vec::with_capacity(moments.len().saturating_sub(1));
    for n in 1..moments.len() {
        let mut acc = moments[n].clone();
        for j in 1..n {
            let c = Rational::from_integer(binomial(n - 1, j - 1));
            acc = acc.sub(&k[j - 1].mul(&moments[n - j])?.scale_rational(&c))?;
        }
        k.push(acc);
    }
    Ok(k)
}

/// Moments `[m_0 = 1, m_1, …, m_n]` from cumulants `[k_1, …, k_n]` by
/// `m_n = Σ_{j=1}^{n} C(n−1, j−1) k_j m_{n−j}`.
pub fn moments_from_cumulants(cumulants: &[TruncatedSeries], variable: Variable) -> Result<Vec<TruncatedSeries>> {
    let mut m = vec![TruncatedSeries::one(variable)];
    for n in 1..=cumulants.len() {
        let mut acc = TruncatedSeries::zero(variable);
        for j in 1..=n {
            let c = Rational::from_integer(binomial(n - 1, j - 1));
            acc = acc.add(&cumulants[j - 1].mul(&m[n - j])?.scale_rational(&c))?;
        }
        m.push(acc);
    }
    Ok(m)
}

/// `k_n` of the Wigner time delay.
pub fn cumulant(engine: &Engine, n: usize, regime: Variable, order: i64) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::InvalidRequest("cumulants start at n = 1".into()));
    }
    let moments = wigner_moments(engine, n, regime, order)?;
    let k = cumulants_from_moments(&moments)?;
    Ok(k[n - 1].truncate(order))
}

pub fn variance(engine: &Engine, regime: Variable, order: i64) -> Result<TruncatedSeries> {
    cumulant(engine, 2, regime, order)
}
