//! Strong-absorption regime: `⟨s_μ(R)⟩` as a series in `1/γ` with
//! coefficients rational in `M`.
//!
//! `⟨s_μ(R)⟩ = (−1)^{|μ|} ([M]^μ)²/t_μ² Σ_{ρ⊃μ} Σ_ω F(M,ρ,ω) γ^{−(|ω|+|ρ|)}`
//! with
//! `F = d_ω [M]^ω G_{μρ} / (|ω|! (|ω|+|ρ|)! (−M)^{|ω|+|ρ|}) · Σ_ν c^ν_{ωρ} d_ν t_ν² δ_{D(ν),D(μ)}`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::determinants::geometric_det_g;
use super::factorials::rising_factorial_gen;
use super::par_map;
use crate::algebra::{Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable};
use crate::combinatorics::{factorial, Partition, Tables};

/// Contributions of one `ρ ⊃ μ`: `(power, polynomial numerator over M^power)`.
fn rho_terms(tables: &Tables, mu: &Partition, rho: &Partition, order: usize) -> Vec<(usize, Polynomial)> {
    let g = geometric_det_g(mu, rho).expect("ρ contains μ");
    if g.is_zero() {
        return Vec::new();
    }
    let d = mu.durfee();
    let mut out = Vec::new();
    for w in 0..=order - rho.weight() {
        for omega in tables.partitions(w, false).iter() {
            let l = tables.lr_sum(omega, rho, d);
            if l.is_zero() {
                continue;
            }
            let t = w + rho.weight();
            let sign = if t.is_multiple_of(2) { 1 } else { -1 };
            let c = Rational::from_integer(omega.dimension() * &g * l * sign)
                / Rational::from_integer(factorial(w) * factorial(t));
            out.push((t, rising_factorial_gen(omega).scale(&c)));
        }
    }
    out
}

/// `⟨s_μ(R)⟩` exact through `(1/γ)^order`.
pub(crate) fn schur_moment_r(tables: &Tables, mu: &Partition, order: i64) -> TruncatedSeries {
    let var = Variable::InvGamma;
    let n = mu.weight();
    if order < n as i64 {
        return TruncatedSeries::zero_through(var, order);
    }
    let order_u = order as usize;
    let rhos: Vec<Partition> = (n..=order_u)
        .flat_map(|r| tables.partitions(r, false).iter().cloned().collect::<Vec<_>>())
        .filter(|rho| rho.contains(mu))
        .collect();
    let per_rho = par_map(&rhos, |rho| rho_terms(tables, mu, rho, order_u));

    let mut numerators: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (t, p) in per_rho.into_iter().flatten() {
        let slot = numerators.entry(t).or_insert_with(|| Polynomial::zero(Symbol::M));
        *slot = &*slot + &p;
    }
    let rising = rising_factorial_gen(mu);
    let tmu = mu.content_product();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let pref = RationalFunction::from_poly(&rising * &rising)
        .scale(&(Rational::from_integer(sign.into()) / Rational::from_integer(&tmu * &tmu)));
    let terms = numerators.into_iter().map(|(t, num)| {
        let f = RationalFunction::new(num, Polynomial::monomial(Symbol::M, t, Rational::from_integer(1.into())))
            .expect("non-zero");
        (t as i64, &f * &pref)
    });
    TruncatedSeries::new(var, terms, Some(order))
}
