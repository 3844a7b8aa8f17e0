use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{compute, StatisticRequest};
use crate::algebra::{Rational, TruncatedSeries, Variable};
use crate::engine::Engine;
use crate::error::{Error, Result};

/// One disagreeing entry `a_{pq}` of the double expansion
/// `Σ a_{pq} M^{−p} y^q`, with `y = γ` or `1/γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMismatch {
    pub inv_m_power: i64,
    pub other_power: i64,
    pub from_inv_m: Rational,
    pub from_other: Rational,
}

/// Re-expands both series of the same statistic as double series in `1/M`
/// and `γ` (or `1/γ`) and lists every coefficient on which they disagree,
/// over the rectangle where both are exact.
pub fn double_expansion_mismatches(inv_m: &TruncatedSeries, other: &TruncatedSeries) -> Result<Vec<ExpansionMismatch>> {
    if inv_m.variable() != Variable::InvM {
        return Err(Error::VariableMismatch(Variable::InvM, inv_m.variable()));
    }
    let at_infinity = match other.variable() {
        Variable::Gamma => false,
        Variable::InvGamma => true,
        v => return Err(Error::VariableMismatch(Variable::Gamma, v)),
    };
    let (Some(p_max), Some(q_max)) = (inv_m.order(), other.order()) else {
        return Err(Error::InvalidRequest("double expansion needs truncated series".into()));
    };

    let mut from_a = std::collections::BTreeMap::new();
    for (p, c) in inv_m.terms() {
        let expansion = if at_infinity {
            c.expand_at_infinity(q_max)
        } else {
            c.expand_at_zero(q_max)
        };
        for (q, v) in expansion {
            from_a.insert((p, q), v);
        }
    }
    let mut from_b = std::collections::BTreeMap::new();
    for (q, c) in other.terms() {
        for (p, v) in c.expand_at_infinity(p_max) {
            from_b.insert((p, q), v);
        }
    }
    let keys: BTreeSet<(i64, i64)> = from_a.keys().chain(from_b.keys()).copied().collect();
    let zero = Rational::zero();
    Ok(keys
        .into_iter()
        .filter_map(|key| {
            let a = from_a.get(&key).unwrap_or(&zero);
            let b = from_b.get(&key).unwrap_or(&zero);
            (a != b).then(|| ExpansionMismatch {
                inv_m_power: key.0,
                other_power: key.1,
                from_inv_m: a.clone(),
                from_other: b.clone(),
            })
        })
        .collect())
}

/// A truncated series evaluated at a point, with the size of the first term
/// it leaves out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeEvaluation {
    pub regime: Variable,
    pub order: i64,
    pub value: Rational,
    /// `|c_p x^p|` for the lowest non-zero power `p` above `order`, looked
    /// for among the next two powers; zero if both vanish.
    pub first_omitted: Rational,
}

/// Evaluates `req` exactly at `(M, γ)`. A pole of any kept coefficient is an
/// error naming the vanishing factor.
pub fn evaluate_with_error(engine: &Engine, req: &StatisticRequest, m: &Rational, gamma: &Rational) -> Result<RegimeEvaluation> {
    let order = req.regime.order;
    let mut ahead = req.clone();
    ahead.regime.order = order + 2;
    let s = compute(engine, &ahead)?;
    let kept = s.truncate(order);
    let value = kept.evaluate(m, gamma)?;
    let mut first_omitted = Rational::zero();
    for p in [order + 1, order + 2] {
        let c = s.coeff(p)?;
        if c.is_zero() {
            continue;
        }
        let term = TruncatedSeries::new(s.variable(), [(p, c)], None).evaluate(m, gamma)?;
        first_omitted = term.abs();
        break;
    }
    Ok(RegimeEvaluation {
        regime: req.regime.regime,
        order,
        value,
        first_omitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::statistics::Statistic;

    #[test]
    fn mean_regimes_agree_as_double_series() {
        let e = Engine::new();
        let stat = Statistic::WignerMoment { n: 1 };
        let a = compute(&e, &StatisticRequest::new(stat.clone(), Variable::InvM, 4)).unwrap();
        let b = compute(&e, &StatisticRequest::new(stat.clone(), Variable::Gamma, 3)).unwrap();
        let c = compute(&e, &StatisticRequest::new(stat, Variable::InvGamma, 5)).unwrap();
        assert!(double_expansion_mismatches(&a, &b).unwrap().is_empty());
        assert!(double_expansion_mismatches(&a, &c).unwrap().is_empty());
    }

    #[test]
    fn pole_is_reported() {
        let e = Engine::new();
        let req = StatisticRequest::new(Statistic::Variance, Variable::Gamma, 1);
        let err = evaluate_with_error(&e, &req, &rat(2, 1), &rat(1, 1)).unwrap_err();
        assert!(matches!(err, Error::Pole { ref factor, .. } if factor.contains("M^2-4")), "{err}");
    }
}
