use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Polynomial, Rational, RationalFunction, Variable};
use crate::error::{Error, Result};

/// Laurent-type series in one expansion variable with rational-function
/// coefficients.
///
/// Every power up to and including `order` is exact (absent powers are
/// exact zeros). `order == None` marks a finite, exact expression. Only
/// non-zero coefficients are stored, and nothing above `order` is ever kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable: Variable,
    terms: BTreeMap<i64, RationalFunction>,
    order: Option<i64>,
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl TruncatedSeries {
    pub fn new(
        variable: Variable,
        terms: impl IntoIterator<Item = (i64, RationalFunction)>,
        order: Option<i64>,
    ) -> Self {
        let mut s = TruncatedSeries {
            variable,
            terms: BTreeMap::new(),
            order,
        };
        for (p, c) in terms {
            s.add_term(p, c);
        }
        s
    }

    /// The exact zero.
    pub fn zero(variable: Variable) -> Self {
        Self::new(variable, [], None)
    }

    /// Zero, known only through `order`.
    pub fn zero_through(variable: Variable, order: i64) -> Self {
        Self::new(variable, [], Some(order))
    }

    pub fn constant(variable: Variable, c: RationalFunction) -> Self {
        Self::new(variable, [(0, c)], None)
    }

    pub fn one(variable: Variable) -> Self {
        Self::constant(variable, RationalFunction::one(variable.coefficient_symbol()))
    }

    /// Exact Laurent expansion of `p(M)·M^{−k}` in powers of `1/M`, truncated
    /// at `order`.
    pub fn laurent_inverse_power(p: &Polynomial, k: i64, order: Option<i64>) -> Self {
        let sym = Variable::InvM.coefficient_symbol();
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (k - d as i64, RationalFunction::constant(sym, c.clone())));
        let mut s = Self::new(Variable::InvM, terms, None);
        if let Some(o) = order {
            s = s.truncate(o);
        }
        s
    }

    /// Adds `c·x^power` in place; terms beyond the order are dropped.
    pub fn add_term(&mut self, power: i64, c: RationalFunction) {
        if c.is_zero() || self.order.is_some_and(|o| power > o) {
            return;
        }
        match self.terms.remove(&power) {
            Some(prev) => {
                let sum = &prev + &c;
                if !sum.is_zero() {
                    self.terms.insert(power, sum);
                }
            }
            None => {
                self.terms.insert(power, c);
            }
        }
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    /// Highest power guaranteed exact; `None` for an exact finite series.
    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RationalFunction)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest stored power.
    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Lowest power that can be non-zero: the lowest stored power, or
    /// `order + 1` if nothing is stored. `None` for the exact zero.
    pub fn valuation(&self) -> Option<i64> {
        self.min_power().or(self.order.map(|o| o + 1))
    }

    /// Coefficient of `x^power`; an error if that power is not guaranteed.
    pub fn coeff(&self, power: i64) -> Result<RationalFunction> {
        if let Some(order) = self.order.filter(|&o| power > o) {
            return Err(Error::BeyondOrder { power, order });
        }
        Ok(self
            .terms
            .get(&power)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.variable.coefficient_symbol())))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::VariableMismatch(self.variable, other.variable));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.order = min_order(self.order, other.order);
        if let Some(o) = out.order {
            out.terms.retain(|&p, _| p <= o);
        }
        for (p, c) in other.terms() {
            out.add_term(p, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            variable: self.variable,
            terms: self.terms.iter().map(|(&p, c)| (p, -c)).collect(),
            order: self.order,
        }
    }

    /// Product; exact through `min(order_a + val_b, order_b + val_a)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if (self.is_zero() && self.order.is_none()) || (other.is_zero() && other.order.is_none()) {
            return Ok(Self::zero(self.variable));
        }
        let bound_a = self.order.zip(other.valuation()).map(|(o, v)| o + v);
        let bound_b = other.order.zip(self.valuation()).map(|(o, v)| o + v);
        let order = min_order(bound_a, bound_b);
        let mut acc: BTreeMap<i64, Vec<RationalFunction>> = BTreeMap::new();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                if order.is_some_and(|o| p + q > o) {
                    continue;
                }
                acc.entry(p + q).or_default().push(a * b);
            }
        }
        let terms = acc.into_iter().map(|(p, parts)| {
            let sym = self.variable.coefficient_symbol();
            (p, sum_all(parts, sym))
        });
        Ok(Self::new(self.variable, terms, order))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.variable);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return TruncatedSeries {
                variable: self.variable,
                terms: BTreeMap::new(),
                order: self.order,
            };
        }
        TruncatedSeries {
            variable: self.variable,
            terms: self.terms.iter().map(|(&p, a)| (p, a * c)).collect(),
            order: self.order,
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&RationalFunction::constant(self.variable.coefficient_symbol(), c.clone()))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries {
            variable: self.variable,
            terms: self.terms.iter().map(|(&p, c)| (p + k, c.clone())).collect(),
            order: self.order.map(|o| o + k),
        }
    }

    /// Keeps powers `≤ order`; the guarantee can only shrink.
    pub fn truncate(&self, order: i64) -> Self {
        let order = min_order(self.order, Some(order));
        TruncatedSeries {
            variable: self.variable,
            terms: self
                .terms
                .iter()
                .filter(|(&p, _)| order.is_none_or(|o| p <= o))
                .map(|(&p, c)| (p, c.clone()))
                .collect(),
            order,
        }
    }

    /// Exact value of the truncated sum at the point `(M, γ)`.
    pub fn evaluate(&self, m: &Rational, gamma: &Rational) -> Result<Rational> {
        let x = self.variable.value_at(m, gamma)?;
        let y = self.variable.coefficient_value(m, gamma);
        let mut total = Rational::zero();
        for (p, c) in self.terms() {
            total += c.eval(&y)? * rational_pow(&x, p);
        }
        Ok(total)
    }
}

/// `x^p` for any integer `p`.
pub(crate) fn rational_pow(x: &Rational, p: i64) -> Rational {
    let base = if p < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..p.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Sum of rational functions, grouping equal denominators first so that
/// gcd work happens once per distinct denominator.
pub(crate) fn sum_all(parts: Vec<RationalFunction>, sym: super::Symbol) -> RationalFunction {
    let mut groups: Vec<(Polynomial, Polynomial)> = Vec::new();
    for p in parts {
        if p.is_zero() {
            continue;
        }
        match groups.iter_mut().find(|(d, _)| d == p.denom()) {
            Some((_, n)) => *n = &*n + p.numer(),
            None => groups.push((p.denom().clone(), p.numer().clone())),
        }
    }
    groups
        .into_iter()
        .map(|(d, n)| RationalFunction::new(n, d).expect("non-zero denominator"))
        .fold(RationalFunction::zero(sym), |acc, r| &acc + &r)
}
