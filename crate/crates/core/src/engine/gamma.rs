//! Weak-absorption regime: `⟨s_μ(R)⟩` as a power series in `γ` with
//! coefficients rational in `M`.
//!
//! `⟨s_μ(R)⟩ = [M]^μ/t_μ² Σ_m F(M,m) γ^m`,
//! `F(M,m) = (−M)^m/(m!(n+m)!) Σ_{ρ⊢m} d_ρ L(μ,ρ)/[M]_ρ`.

use num_traits::Zero;

use super::factorials::{falling_factorial_gen, rising_factorial_gen};
use super::par_map;
use crate::algebra::{Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::{factorial, Partition, Tables};

fn coefficient(tables: &Tables, mu: &Partition, m: usize) -> RationalFunction {
    let d = mu.durfee();
    let parts: Vec<RationalFunction> = tables
        .partitions(m, false)
        .iter()
        .filter_map(|rho| {
            let l = tables.lr_sum(mu, rho, d);
            if l.is_zero() {
                return None;
            }
            let c = Rational::from_integer(rho.dimension() * l);
            Some(
                RationalFunction::new(Polynomial::constant(Symbol::M, c), falling_factorial_gen(rho))
                    .expect("non-zero falling factorial"),
            )
        })
        .collect();
    if parts.is_empty() {
        return RationalFunction::zero(Symbol::M);
    }
    let inner = crate::algebra::sum_rational_functions(parts, Symbol::M);
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let norm = Rational::from_integer(sign.into())
        / Rational::from_integer(factorial(m) * factorial(mu.weight() + m));
    let minus_m_pow = Polynomial::monomial(Symbol::M, m, norm);
    &inner * &RationalFunction::from_poly(minus_m_pow)
}

/// `⟨s_μ(R)⟩` exact through `γ^order`.
pub(crate) fn schur_moment_r(tables: &Tables, mu: &Partition, order: i64) -> TruncatedSeries {
    let var = Variable::Gamma;
    if order < 0 {
        return TruncatedSeries::zero_through(var, order);
    }
    let jobs: Vec<usize> = (0..=order as usize).collect();
    let coeffs = par_map(&jobs, |&m| coefficient(tables, mu, m));
    let t = mu.content_product();
    let pref = RationalFunction::from_poly(rising_factorial_gen(mu))
        .scale(&Rational::from_integer(&t * &t).recip());
    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m as i64, &c * &pref));
    TruncatedSeries::new(var, terms, Some(order))
}
