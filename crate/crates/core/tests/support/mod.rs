//! Independent oracles for the integration tests. Nothing here calls the
//! character or LR code under test.

#![allow(dead_code)]

use std::collections::HashMap;

use tdelay_core::combinatorics::enumerate_partitions;
use tdelay_core::Partition;

/// Sparse multivariate polynomial with integer coefficients.
pub type Poly = HashMap<Vec<u32>, i64>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn unit(n: usize) -> Poly {
    Poly::from([(vec![0; n], 1)])
}

fn power_sum(k: u32, n: usize) -> Poly {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = k;
            (e, 1)
        })
        .collect()
}

fn vandermonde(n: usize) -> Poly {
    let mut acc = unit(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut xi = vec![0; n];
            xi[i] = 1;
            let mut xj = vec![0; n];
            xj[j] = 1;
            acc = poly_mul(&acc, &Poly::from([(xi, 1), (xj, -1)]));
        }
    }
    acc
}

/// `χ_λ(β)` by the Frobenius formula: the coefficient of `x^{λ+δ}` in
/// `Δ(x) Π_i p_{β_i}(x)` in `|λ|` variables.
pub fn frobenius_character(lambda: &Partition, beta: &Partition) -> i64 {
    let n = lambda.weight().max(1);
    let mut acc = vandermonde(n);
    for &q in beta.parts() {
        acc = poly_mul(&acc, &power_sum(q as u32, n));
    }
    let target: Vec<u32> = (0..n).map(|i| (lambda.part(i) + n - 1 - i) as u32).collect();
    acc.get(&target).copied().unwrap_or(0)
}

/// Cycle type of a permutation in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Monomial expansion of `s_λ` in `n` variables by enumerating
/// semistandard tableaux.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Poly::new();
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        n: usize,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u32; n];
            for row in grid.iter() {
                for &v in row {
                    e[v as usize - 1] += 1;
                }
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n as u32 {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

/// Exponent vector of a partition padded to `n`.
pub fn exponent(p: &Partition, n: usize) -> Vec<u32> {
    (0..n).map(|i| p.part(i) as u32).collect()
}

/// All `c^ν_{μρ}` from the monomial expansion of `s_μ s_ρ` in
/// `|μ|+|ρ|` variables: read the coefficient at each dominant monomial `x^ν`
/// in decreasing lexicographic order and peel off `c_ν s_ν`.
pub fn lr_by_multiplication(mu: &Partition, rho: &Partition) -> HashMap<Partition, i64> {
    let total = mu.weight() + rho.weight();
    let n = total.max(1);
    let a = schur_polynomial(mu, n);
    let b = schur_polynomial(rho, n);
    let shapes = enumerate_partitions(total, false);
    // Coefficient of x^κ in s_μ s_ρ for each partition κ.
    let mut product: HashMap<Partition, i64> = HashMap::new();
    for kappa in &shapes {
        let k = exponent(kappa, n);
        let mut c = 0;
        for (ea, ca) in &a {
            if ea.iter().zip(&k).any(|(x, y)| x > y) {
                continue;
            }
            let rest: Vec<u32> = k.iter().zip(ea).map(|(y, x)| y - x).collect();
            if let Some(cb) = b.get(&rest) {
                c += ca * cb;
            }
        }
        product.insert(kappa.clone(), c);
    }
    let mut sorted = shapes.clone();
    sorted.sort_by_key(|x| std::cmp::Reverse(exponent(x, n)));
    let mut out = HashMap::new();
    for nu in &sorted {
        let c = product[nu];
        if c == 0 {
            continue;
        }
        let s = schur_polynomial(nu, n);
        for kappa in &shapes {
            if let Some(k) = s.get(&exponent(kappa, n)) {
                *product.get_mut(kappa).unwrap() -= c * k;
            }
        }
        out.insert(nu.clone(), c);
    }
    out
}
