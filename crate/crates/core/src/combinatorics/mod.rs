//! Partition-indexed combinatorics: enumeration, Young-diagram geometry,
//! symmetric-group characters and Littlewood–Richardson coefficients.

mod characters;
mod lr;
mod partition;

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use partition::{binomial, enumerate_partitions, factorial, subpartitions, Partition};

/// Memo table with shared reads and exclusive inserts.
#[derive(Debug)]
struct Memo<K, V>(RwLock<HashMap<K, V>>);

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo(RwLock::new(HashMap::new()))
    }
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    fn get(&self, key: &K) -> Option<V> {
        self.0.read().expect("memo lock").get(key).cloned()
    }

    fn insert(&self, key: K, value: V) -> V {
        self.0
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert(value)
            .clone()
    }
}

/// Shared caches for characters, LR coefficients and the Durfee-filtered LR
/// sums used by every expansion. Safe to share between threads; results do
/// not depend on evaluation order.
#[derive(Debug, Default)]
pub struct Tables {
    partitions: Memo<(usize, bool), Arc<Vec<Partition>>>,
    characters: Memo<(Partition, Partition), i64>,
    lr: Memo<(Partition, Partition, Partition), u64>,
    lr_sums: Memo<(Partition, Partition, usize), BigInt>,
}

impl Tables {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cached [`enumerate_partitions`].
    pub fn partitions(&self, m: usize, forbid_part_one: bool) -> Arc<Vec<Partition>> {
        let key = (m, forbid_part_one);
        if let Some(v) = self.partitions.get(&key) {
            return v;
        }
        self.partitions
            .insert(key, Arc::new(enumerate_partitions(m, forbid_part_one)))
    }

    /// `χ_μ(β)`: the irreducible character labelled by `μ` at a permutation
    /// of cycle type `β`.
    pub fn character(&self, mu: &Partition, beta: &Partition) -> Result<i64> {
        if mu.weight() != beta.weight() {
            return Err(Error::WeightMismatch(mu.clone(), beta.clone()));
        }
        Ok(self.character_unchecked(mu, beta))
    }

    fn character_unchecked(&self, mu: &Partition, beta: &Partition) -> i64 {
        if beta.length() <= 1 || mu.is_empty() {
            // One rim hook (or none) left: a direct answer avoids cache churn.
            return characters::mn_recursive(mu, beta, |shape, _| i64::from(shape.is_empty()));
        }
        let key = (mu.clone(), beta.clone());
        if let Some(v) = self.characters.get(&key) {
            return v;
        }
        let value = characters::mn_recursive(mu, beta, |shape, rest| self.character_unchecked(shape, rest));
        self.characters.insert(key, value)
    }

    /// Littlewood–Richardson coefficient `c^ν_{μρ}`, the multiplicity of
    /// `s_ν` in `s_μ s_ρ`. Zero unless `|ν| = |μ| + |ρ|` and `μ, ρ ⊂ ν`.
    pub fn lr_coefficient(&self, mu: &Partition, rho: &Partition, nu: &Partition) -> u64 {
        if nu.weight() != mu.weight() + rho.weight() || !nu.contains(mu) || !nu.contains(rho) {
            return 0;
        }
        if mu.is_empty() || rho.is_empty() {
            return 1;
        }
        // Fill the smaller of the two skew shapes.
        let (inner, content) = if mu.weight() >= rho.weight() { (mu, rho) } else { (rho, mu) };
        let key = (inner.clone(), content.clone(), nu.clone());
        if let Some(v) = self.lr.get(&key) {
            return v;
        }
        let value = lr::count_lr_tableaux(nu, inner, content);
        self.lr.insert(key, value)
    }

    /// `Σ_ν c^ν_{ab} d_ν t_ν²` over `ν ⊢ |a|+|b|` with Durfee square of side
    /// `durfee`. This is the inner sum of all three expansions.
    pub fn lr_sum(&self, a: &Partition, b: &Partition, durfee: usize) -> BigInt {
        let (a, b) = if a.rev_lex_cmp(b).is_le() { (a, b) } else { (b, a) };
        let key = (a.clone(), b.clone(), durfee);
        if let Some(v) = self.lr_sums.get(&key) {
            return v;
        }
        let n = a.weight() + b.weight();
        let mut total = BigInt::zero();
        if a.durfee() <= durfee && b.durfee() <= durfee {
            for nu in self.partitions(n, false).iter() {
                if nu.durfee() != durfee {
                    continue;
                }
                let c = self.lr_coefficient(a, b, nu);
                if c == 0 {
                    continue;
                }
                let t = nu.content_product();
                total += BigInt::from(c) * nu.dimension() * &t * &t;
            }
        }
        self.lr_sums.insert(key, total)
    }
}
