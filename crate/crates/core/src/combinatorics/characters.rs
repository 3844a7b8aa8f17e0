//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule, working on beta-sets (first-column hook lengths) so that rim-hook
//! removal is a single shift of one bead.

use super::Partition;

/// Beta-set of `λ` with `ℓ(λ)` beads: `λ_i + ℓ − 1 − i`, strictly decreasing.
fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.length();
    lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect()
}

fn from_beta_set(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let len = beads.len();
    let parts = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta-set yields a partition")
}

/// All ways of removing a rim hook of length `k` from `λ`, with the sign
/// `(−1)^{height}` of each.
pub(crate) fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let beads = beta_set(lambda);
    let mut out = Vec::new();
    for (i, &x) in beads.iter().enumerate() {
        if x < k {
            continue;
        }
        let y = x - k;
        if beads.contains(&y) {
            continue;
        }
        let passed = beads.iter().filter(|&&b| y < b && b < x).count();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        let mut moved = beads.clone();
        moved[i] = y;
        out.push((from_beta_set(moved), sign));
    }
    out
}

/// Murnaghan–Nakayama recursion without memoization; the cached entry point
/// is [`super::Tables::character`]. Assumes `|λ| = |β|`.
pub(crate) fn mn_recursive<F>(lambda: &Partition, cycle_type: &Partition, mut recurse: F) -> i64
where
    F: FnMut(&Partition, &Partition) -> i64,
{
    if cycle_type.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let k = cycle_type.parts()[0];
    let rest = cycle_type.tail();
    remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(shape, sign)| sign * recurse(&shape, &rest))
        .sum()
}
