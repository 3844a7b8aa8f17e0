use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{factor_denominator, Polynomial, Rational, Symbol};
use crate::error::{Error, Result};

/// Quotient of two polynomials in one symbol, kept in canonical form: the
/// denominator is monic and coprime to the numerator, and zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        let symbol = if num.is_constant() { den.symbol() } else { num.symbol() };
        if num.is_zero() {
            return Self::zero(symbol);
        }
        if den.is_constant() {
            let c = den.leading().recip();
            return RationalFunction {
                num: num.scale(&c).with_symbol(symbol),
                den: Polynomial::one(symbol),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lc = den.leading().recip();
        RationalFunction {
            num: num.scale(&lc).with_symbol(symbol),
            den: den.scale(&lc).with_symbol(symbol),
        }
    }

    pub fn zero(symbol: Symbol) -> Self {
        RationalFunction {
            num: Polynomial::zero(symbol),
            den: Polynomial::one(symbol),
        }
    }

    pub fn one(symbol: Symbol) -> Self {
        Self::constant(symbol, Rational::one())
    }

    pub fn constant(symbol: Symbol, c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(symbol, c),
            den: Polynomial::one(symbol),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let symbol = p.symbol();
        RationalFunction {
            num: p,
            den: Polynomial::one(symbol),
        }
    }

    /// `x^k` for any integer `k`.
    pub fn power_of_symbol(symbol: Symbol, k: i64) -> Self {
        let mono = Polynomial::monomial(symbol, k.unsigned_abs() as usize, Rational::one());
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            RationalFunction {
                num: Polynomial::one(symbol),
                den: mono,
            }
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn symbol(&self) -> Symbol {
        if self.num.is_constant() { self.den.symbol() } else { self.num.symbol() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.symbol());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k >= 0 { self.clone() } else { self.recip().expect("inverse of zero") };
        let k = k.unsigned_abs();
        RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// Exact value at `x`; a vanishing denominator is reported with the
    /// factor responsible.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            let factor = factor_denominator(&self.den)
                .into_iter()
                .find(|(f, _)| f.eval(x).is_zero())
                .map(|(f, _)| super::display::poly_text(&f, true))
                .unwrap_or_else(|| super::display::poly_text(&self.den, true));
            return Err(Error::Pole {
                symbol: self.symbol().to_string(),
                value: x.to_string(),
                factor,
            });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Laurent expansion about `x = 0`: coefficients of `x^k` for all
    /// `k ≤ max_power`.
    pub fn expand_at_zero(&self, max_power: i64) -> BTreeMap<i64, Rational> {
        laurent(self.num.coeffs(), self.den.coeffs(), max_power)
    }

    /// Expansion about `x = ∞` in powers of `y = 1/x`: coefficients of `y^k`
    /// for all `k ≤ max_power`.
    pub fn expand_at_infinity(&self, max_power: i64) -> BTreeMap<i64, Rational> {
        if self.is_zero() {
            return BTreeMap::new();
        }
        let rn: Vec<Rational> = self.num.coeffs().iter().rev().cloned().collect();
        let rd: Vec<Rational> = self.den.coeffs().iter().rev().cloned().collect();
        let shift = self.den.degree().unwrap_or(0) as i64 - self.num.degree().unwrap_or(0) as i64;
        laurent(&rn, &rd, max_power - shift)
            .into_iter()
            .map(|(k, c)| (k + shift, c))
            .collect()
    }
}

/// Laurent coefficients of `num/den` about zero, up to `x^max_power`.
fn laurent(num: &[Rational], den: &[Rational], max_power: i64) -> BTreeMap<i64, Rational> {
    let mut out = BTreeMap::new();
    let Some(nv) = num.iter().position(|c| !c.is_zero()) else {
        return out;
    };
    let dv = den.iter().position(|c| !c.is_zero()).expect("non-zero denominator");
    let low = nv as i64 - dv as i64;
    if max_power < low {
        return out;
    }
    let count = (max_power - low + 1) as usize;
    let n = &num[nv..];
    let d = &den[dv..];
    let d0_inv = d[0].recip();
    let mut q: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = n.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(d.len() - 1) {
            acc -= &d[j] * &q[k - j];
        }
        q.push(acc * &d0_inv);
    }
    for (k, c) in q.into_iter().enumerate() {
        if !c.is_zero() {
            out.insert(low + k as i64, c);
        }
    }
    out
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RationalFunction::reduce(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RationalFunction::reduce(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = self.den.exact_div(&g).expect("gcd divides");
        let b = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RationalFunction::reduce(num, &a * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.symbol());
        }
        if self.is_constant() {
            return rhs.scale(&self.num.coeff(0));
        }
        if rhs.is_constant() {
            return self.scale(&rhs.num.coeff(0));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction { (&self).$f(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: &RationalFunction) -> RationalFunction { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn g(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(Symbol::Gamma, coeffs)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(g(n), g(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (g^2 - 1)/(2g - 2) = (g + 1)/2
        let r = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(r.numer(), &Polynomial::new(Symbol::Gamma, vec![rat(1, 2), rat(1, 2)]));
        assert!(r.denom().is_one());
        assert_eq!(rf(&[0], &[3, 1]), RationalFunction::zero(Symbol::Gamma));
        assert_eq!(RationalFunction::new(g(&[1]), g(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn sums_cancel() {
        // 1/(1+g) - 1/(1+g)^2 = g/(1+g)^2
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[1], &[1, 2, 1]);
        assert_eq!(&a - &b, rf(&[0, 1], &[1, 2, 1]));
    }

    #[test]
    fn expansions() {
        // (g^2+2)/(1+g)^6 = 2 - 12 g + ...
        let r = RationalFunction::new(g(&[2, 0, 1]), g(&[1, 1]).pow(6)).unwrap();
        let at0 = r.expand_at_zero(1);
        assert_eq!(at0[&0], rat(2, 1));
        assert_eq!(at0[&1], rat(-12, 1));
        // ... and 1/g^4 + ... at infinity
        let at_inf = r.expand_at_infinity(5);
        assert_eq!(at_inf.keys().copied().collect::<Vec<_>>(), vec![4, 5]);
        assert_eq!(at_inf[&4], rat(1, 1));
        assert_eq!(at_inf[&5], rat(-6, 1));
        // 1/g expands with a negative power at zero
        let inv = RationalFunction::power_of_symbol(Symbol::Gamma, -1);
        assert_eq!(inv.expand_at_zero(3).into_iter().collect::<Vec<_>>(), vec![(-1, rat(1, 1))]);
    }

    #[test]
    fn pole_reporting() {
        let r = RationalFunction::new(
            Polynomial::one(Symbol::M),
            &Polynomial::from_ints(Symbol::M, &[-1, 0, 1]) * &Polynomial::from_ints(Symbol::M, &[-4, 0, 1]),
        )
        .unwrap();
        match r.eval(&rat(2, 1)) {
            Err(Error::Pole { factor, .. }) => assert_eq!(factor, "(M^2-4)"),
            other => panic!("expected pole, got {other:?}"),
        }
        assert_eq!(r.eval(&rat(3, 1)).unwrap(), rat(1, 40));
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (
            proptest::collection::vec(-4i64..=4, 0..4),
            proptest::collection::vec(-4i64..=4, 1..4),
        )
            .prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(g(&n), g(&d)).ok())
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rf(), b in small_rf(), c in small_rf()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&(&a - &b) + &b - a.clone()).is_zero());
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap() * b.clone(), a.clone());
            }
        }

        #[test]
        fn normalization_idempotent(a in small_rf()) {
            let again = RationalFunction::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert!(a.denom().leading() == rat(1, 1));
            prop_assert!(a.numer().gcd(a.denom()).is_one() || a.is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_rf(), b in small_rf(), x in -6i64..=6) {
            let x = rat(x, 3);
            if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
                prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
                prop_assert_eq!((&a + &b).eval(&x).unwrap(), va + vb);
            }
        }
    }
}
