use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Rational, Symbol};
use crate::combinatorics::{factorial, Partition};

/// Generalized rising factorial `[M]^μ = Π_i (M+μ_i−i)!/(M−i)!`, i.e. the
/// product of `M + c` over the contents `c` of the cells of `μ`.
pub fn rising_factorial_gen(mu: &Partition) -> Polynomial {
    mu.contents()
        .fold(Polynomial::one(Symbol::M), |acc, c| &acc * &Polynomial::linear(Symbol::M, c, 1))
}

/// Generalized falling factorial `[M]_ρ = Π_i (M+i−1)!/(M+i−ρ_i−1)!`.
pub fn falling_factorial_gen(rho: &Partition) -> Polynomial {
    let mut acc = Polynomial::one(Symbol::M);
    for (i, &p) in rho.parts().iter().enumerate() {
        for k in 0..p {
            acc = &acc * &Polynomial::linear(Symbol::M, i as i64 - k as i64, 1);
        }
    }
    acc
}

/// `g_β(γ) = Π_{q∈β} (1 + qγ)`.
pub fn g_beta(beta: &Partition) -> Polynomial {
    beta.parts().iter().fold(Polynomial::one(Symbol::Gamma), |acc, &q| {
        &acc * &Polynomial::linear(Symbol::Gamma, 1, q as i64)
    })
}

/// `binomial(M + a, k)` as a polynomial in `M`; zero for `k < 0`.
pub(crate) fn binomial_poly(a: i64, k: i64) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(Symbol::M);
    }
    let mut acc = Polynomial::one(Symbol::M);
    for i in 0..k {
        acc = &acc * &Polynomial::linear(Symbol::M, a - i, 1);
    }
    acc.scale(&Rational::from_integer(factorial(k as usize)).recip())
}

/// `binomial(a, k)` for any integer `a`, as the polynomial `a(a−1)…(a−k+1)/k!`;
/// zero for `k < 0`.
pub(crate) fn binomial_int(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let num = (0..k).fold(BigInt::one(), |acc, i| acc * (a - i));
    num / factorial(k as usize)
}
