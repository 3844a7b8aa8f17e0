//! Many-channel regime: `⟨s_μ(R)⟩` as a series in `1/M` with coefficients
//! rational in `γ`.
//!
//! `⟨s_μ(R)⟩ = ([M]^μ)²/t_μ² Σ_m Σ'_{β⊢m} F(γ,β) M^{−(n+m−ℓ(β))}` where the
//! primed sum skips cycle types with fixed points and
//! `F = (−1)^{ℓ(β)} b_β g_β(γ) / (m!(n+m)!(1+γ)^{n+m}) · Σ_{ρ⊢m} χ_ρ(β) L(μ,ρ)`
//! with `L` the Durfee-filtered LR sum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::factorials::{g_beta, rising_factorial_gen};
use super::par_map;
use crate::algebra::{Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::{factorial, Partition, Tables};

/// `Σ_{ρ⊢m} χ_ρ(β) L(μ,ρ)` for every fixed-point-free `β ⊢ m`.
fn character_weighted_sums(tables: &Tables, mu: &Partition, m: usize) -> Vec<(Partition, BigInt)> {
    let d = mu.durfee();
    let lr: Vec<(Partition, BigInt)> = tables
        .partitions(m, false)
        .iter()
        .map(|rho| (rho.clone(), tables.lr_sum(mu, rho, d)))
        .filter(|(_, l)| !l.is_zero())
        .collect();
    tables
        .partitions(m, true)
        .iter()
        .map(|beta| {
            let x = lr
                .iter()
                .map(|(rho, l)| l * tables.character(rho, beta).expect("equal weights"))
                .sum::<BigInt>();
            (beta.clone(), x)
        })
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// `⟨s_μ(R)⟩` exact through `(1/M)^order`.
pub(crate) fn schur_moment_r(tables: &Tables, mu: &Partition, order: i64) -> TruncatedSeries {
    let var = Variable::InvM;
    let n = mu.weight() as i64;
    // Every term has power ≥ −n + ⌈m/2⌉, so m ≤ 2(order + n) suffices.
    if order < -n {
        return TruncatedSeries::zero_through(var, order);
    }
    let m_max = (2 * (order + n)) as usize;
    let t2 = {
        let t = mu.content_product();
        Rational::from_integer(&t * &t)
    };

    let jobs: Vec<usize> = (0..=m_max).collect();
    let per_m = par_map(&jobs, |&m| character_weighted_sums(tables, mu, m));

    let one_plus_g = Polynomial::linear(Symbol::Gamma, 1, 1);
    let mut numerators: BTreeMap<i64, Polynomial> = BTreeMap::new();
    for (m, sums) in per_m.into_iter().enumerate() {
        if sums.is_empty() {
            continue;
        }
        let norm = Rational::from_integer(factorial(m) * factorial(mu.weight() + m)) * &t2;
        let pad = one_plus_g.pow((m_max - m) as u32);
        for (beta, x) in sums {
            let len = beta.length() as i64;
            let sign = if len % 2 == 0 { 1 } else { -1 };
            let c = Rational::from_integer(beta.class_size() * x * sign) / &norm;
            let term = (&g_beta(&beta) * &pad).scale(&c);
            let power = n + m as i64 - len;
            let slot = numerators.entry(power).or_insert_with(|| Polynomial::zero(Symbol::Gamma));
            *slot = &*slot + &term;
        }
    }
    let den = one_plus_g.pow((n as usize + m_max) as u32);
    let inner_order = n + (m_max as i64 + 2) / 2 - 1;
    let inner = TruncatedSeries::new(
        var,
        numerators
            .into_iter()
            .map(|(p, num)| (p, RationalFunction::new(num, den.clone()).expect("non-zero"))),
        Some(inner_order),
    );
    let rising = rising_factorial_gen(mu);
    let prefactor = TruncatedSeries::laurent_inverse_power(&(&rising * &rising), 0, None);
    let out = prefactor.mul(&inner).expect("same variable").truncate(order);
    debug_assert!(out.order().is_none_or(|o| o >= order));
    out
}
