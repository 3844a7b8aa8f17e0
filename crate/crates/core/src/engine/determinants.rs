//! The two binomial determinants: `B_{λμ}` relating Schur polynomials of
//! `1 − R` to those of `R`, and `G_{μρ}` expanding `s_μ(Y/(1+Y))`.
//!
//! Entries are `binomial(K + a, K + b)` continued analytically in `K`, which
//! equals `binomial(K + a, a − b)` for every `K`. For `B` we keep `K = M`
//! symbolic; `G` is the same determinant at `K = 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factorials::{binomial_int, binomial_poly};
use crate::algebra::{Polynomial, Symbol};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

trait BareissRing: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl BareissRing for Polynomial {
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other).expect("Bareiss division is exact")
    }
}

/// Fraction-free Gaussian elimination.
fn bareiss<T: BareissRing>(mut a: Vec<Vec<T>>, one: T) -> T {
    let n = a.len();
    if n == 0 {
        return one;
    }
    let mut sign_flip = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return a[0][0].sub(&a[0][0]);
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Shifted parts `λ_i − i` (1-based `i`) of a partition padded to `len`.
fn shifted(p: &Partition, len: usize) -> Vec<i64> {
    (0..len).map(|i| p.part(i) as i64 - (i as i64 + 1)).collect()
}

/// `B_{λμ} = det[binomial(M+λ_i−i, M+μ_j−j)]`, a polynomial in `M`.
pub fn binomial_det_b(lambda: &Partition, mu: &Partition) -> Result<Polynomial> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.clone(),
            outer: lambda.clone(),
        });
    }
    let len = lambda.length();
    let rows = shifted(lambda, len);
    let cols = shifted(mu, len);
    let matrix = rows
        .iter()
        .map(|a| cols.iter().map(|b| binomial_poly(*a, a - b)).collect())
        .collect();
    Ok(bareiss(matrix, Polynomial::one(Symbol::M)))
}

/// `G_{μρ} = det[binomial(ρ_i−i, μ_j−j)]`, an integer.
pub fn geometric_det_g(mu: &Partition, rho: &Partition) -> Result<BigInt> {
    if !rho.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.clone(),
            outer: rho.clone(),
        });
    }
    let len = rho.length();
    let rows = shifted(rho, len);
    let cols = shifted(mu, len);
    let matrix = rows
        .iter()
        .map(|a| cols.iter().map(|b| binomial_int(*a, a - b)).collect())
        .collect();
    Ok(bareiss(matrix, BigInt::one()))
}
