use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a non-increasing list of positive parts.
///
/// The empty partition is valid and has weight and length zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::ParsePartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True iff `other ⊂ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)` of the Young diagram, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Contents `col − row` of all cells.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells().map(|(i, j)| j as i64 - i as i64)
    }

    /// Side of the largest square fitting in the diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Product of the non-zero contents; 1 for the empty partition.
    pub fn content_product(&self) -> BigInt {
        self.contents()
            .filter(|&c| c != 0)
            .fold(BigInt::one(), |acc, c| acc * c)
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| (self.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1)
            .collect()
    }

    /// Dimension of the irreducible representation of `S_n` labelled by
    /// `self`, from the hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let hooks: BigInt = self.hook_lengths().into_iter().map(BigInt::from).product();
        factorial(self.weight()) / hooks
    }

    /// `z_β = Π_q q^{m_q} m_q!`, the centralizer order of a permutation of
    /// cycle type `self`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let q = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == q).count();
            z *= BigInt::from(q).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        z
    }

    /// Size of the conjugacy class of cycle type `self` in `S_{|self|}`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.centralizer_order()
    }

    /// Multiset union of parts, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Partition with the first part removed.
    pub(crate) fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Reverse-lexicographic comparison: larger first parts come first.
    pub fn rev_lex_cmp(&self, other: &Partition) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty partition prints as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"3,1,1"`. The empty string and `"0"` give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::ParsePartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ParsePartition(s.to_string()));
        }
        Ok(Partition { parts })
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `m` in reverse-lexicographic order. With
/// `forbid_part_one`, only partitions whose parts are all at least 2.
pub fn enumerate_partitions(m: usize, forbid_part_one: bool) -> Vec<Partition> {
    let min_part = if forbid_part_one { 2 } else { 1 };
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(m, m, min_part, &mut current, &mut out);
    out
}

fn fill(rem: usize, max: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (min..=max.min(rem)).rev() {
        current.push(p);
        fill(rem - p, p, min, current, out);
        current.pop();
    }
}

/// All partitions `μ ⊂ λ`, by increasing weight, reverse-lex within a weight.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=lambda.weight())
        .flat_map(|k| enumerate_partitions(k, false))
        .filter(|mu| lambda.contains(mu))
        .collect();
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then(a.rev_lex_cmp(b)));
    out
}

/// Shorthand used in tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::combinatorics::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::combinatorics::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_partitions(0, false), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4, false).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(4, true), vec![partition![4], partition![2, 2]]);
        assert_eq!(enumerate_partitions(1, true), vec![]);
        assert_eq!(enumerate_partitions(0, true), vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|m| enumerate_partitions(m, false).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(partition![2, 1].durfee(), 1);
        assert_eq!(partition![3, 3, 2].durfee(), 2);
        assert_eq!(partition![5, 5, 5, 5].durfee(), 4);
    }

    #[test]
    fn content_products() {
        assert_eq!(partition![1].content_product(), BigInt::from(1));
        assert_eq!(partition![2, 1].content_product(), BigInt::from(-1));
        assert_eq!(partition![3].content_product(), BigInt::from(2));
        assert_eq!(Partition::empty().content_product(), BigInt::from(1));
        assert_eq!(partition![1, 1, 1].content_product(), BigInt::from(2));
    }

    #[test]
    fn dimensions() {
        for n in 0..6 {
            assert_eq!(Partition::row(n).dimension(), BigInt::from(1));
        }
        assert_eq!(partition![2, 1].dimension(), BigInt::from(2));
        assert_eq!(partition![2, 2].dimension(), BigInt::from(2));
        assert_eq!(partition![3, 2, 1].dimension(), BigInt::from(16));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(Partition::column(5).class_size(), BigInt::from(1));
        assert_eq!(partition![2].class_size(), BigInt::from(1));
        assert_eq!(partition![2, 2].class_size(), BigInt::from(3));
        assert_eq!(partition![3, 1].class_size(), BigInt::from(8));
        for m in 0..=10 {
            let total: BigInt = enumerate_partitions(m, false).iter().map(|b| b.class_size()).sum();
            assert_eq!(total, factorial(m), "m = {m}");
        }
    }

    #[test]
    fn containment() {
        assert!(partition![3, 1].contains(&Partition::empty()));
        assert!(partition![2, 2].contains(&partition![2, 1]));
        assert!(!partition![2, 2].contains(&partition![3]));
        assert!(!partition![2].contains(&partition![1, 1]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), partition![3, 1, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 2, 2 ".parse::<Partition>().unwrap(), partition![2, 2]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(partition![4, 2].to_string(), "4,2");
    }

    #[test]
    fn conjugate_and_hooks() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(partition![2, 2].hook_lengths(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn subpartitions_of_two_two() {
        let subs: Vec<String> = subpartitions(&partition![2, 2]).iter().map(|p| p.to_string()).collect();
        assert_eq!(subs, ["0", "1", "2", "1,1", "2,1", "2,2"]);
    }
}
