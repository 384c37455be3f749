//! Integer partitions and the 2-core / 2-quotient tower.
//!
//! Partitions are stored in canonical form: weakly decreasing, strictly
//! positive parts. The canonical listing order used everywhere in this crate
//! is descending lexicographic, so `(n)` comes first and `(1^n)` last.
//!
//! The 2-quotient is computed from a beta-set of even cardinality `2t`
//! (`t` minimal with `2t >=` number of parts, beta numbers
//! `b_i = lambda_i + 2t - i`). Component one is read off the even beta
//! numbers, component two off the odd ones. With this choice the quotient
//! of the conjugate partition is the conjugated, swapped pair, which is the
//! contract the rest of the crate relies on; see the property tests.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of a nonnegative integer, kept weakly decreasing with all
/// parts positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {:?}",
                parts
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Normalizing constructor: sorts descending and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `index` (0-based), with 0 for indices past the last part.
    pub fn part(&self, index: usize) -> usize {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// True when the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Part multiplicities, keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Sign of a permutation with this cycle type: `(-1)^(n - #parts)`.
    pub fn permutation_sign(&self) -> i8 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Centralizer order of the conjugacy class with this cycle type:
    /// `prod_k k^(a_k) a_k!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (k, a) in self.multiplicities() {
            for _ in 0..a {
                z *= BigInt::from(k);
            }
            for i in 2..=a {
                z *= BigInt::from(i);
            }
        }
        z
    }

    /// Beta-set `b_i = lambda_i + size - i` (1-based `i`), descending.
    /// `size` must be at least the number of parts.
    pub fn beta_set(&self, size: usize) -> Vec<usize> {
        assert!(size >= self.len(), "beta set too small for partition");
        (1..=size).map(|i| self.part(i - 1) + size - i).collect()
    }

    /// Inverse of `beta_set`: strips the staircase from a strictly
    /// decreasing beta sequence.
    pub fn from_beta_set(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let size = beta.len();
        let parts = beta
            .into_iter()
            .enumerate()
            .map(|(idx, b)| b - (size - idx - 1))
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Hook length of the box in (0-based) row `i`, column `j`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        self.part(i) - j + conj.part(j) - i - 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux_count(&self) -> BigInt {
        let n = self.size();
        let mut numerator = BigInt::one();
        for k in 2..=n {
            numerator *= BigInt::from(k);
        }
        let conj = self.conjugate();
        let mut denominator = BigInt::one();
        for i in 0..self.len() {
            for j in 0..self.parts[i] {
                let hook = self.parts[i] - j + conj.part(j) - i - 1;
                denominator *= BigInt::from(hook);
            }
        }
        numerator / denominator
    }

    /// Canonical text form `"4+2+1"`; the empty partition prints as `"∅"`.
    pub fn text(&self) -> String {
        if self.parts.is_empty() {
            "∅".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("+")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "[]" {
            return Ok(Partition::empty());
        }
        if s.starts_with('[') {
            let parts: Vec<usize> = serde_json::from_str(s)
                .map_err(|e| Error::InvalidPartition(format!("{s}: {e}")))?;
            return Partition::new(parts);
        }
        let parts = s
            .split('+')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// The 2-core, 2-quotient and 2-weight of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoQuotientData {
    pub core: Partition,
    pub quotient: (Partition, Partition),
    pub weight: usize,
}

/// Computes the 2-core and 2-quotient under the fixed beta-set convention
/// described in the module docs.
pub fn two_core_and_quotient(lambda: &Partition) -> TwoQuotientData {
    let r = lambda.len();
    let t = r.div_ceil(2);
    let beta = lambda.beta_set(2 * t);

    let mut even_m = Vec::new();
    let mut odd_m = Vec::new();
    for &b in &beta {
        if b % 2 == 0 {
            even_m.push(b / 2);
        } else {
            odd_m.push((b - 1) / 2);
        }
    }
    let first = Partition::from_beta_set(even_m.clone());
    let second = Partition::from_beta_set(odd_m.clone());

    // Push all beads to the bottom of each runner.
    let mut core_beta = Vec::with_capacity(2 * t);
    for i in 0..even_m.len() {
        core_beta.push(2 * i);
    }
    for i in 0..odd_m.len() {
        core_beta.push(2 * i + 1);
    }
    let core = Partition::from_beta_set(core_beta);

    let weight = first.size() + second.size();
    debug_assert_eq!(lambda.size(), core.size() + 2 * weight);
    TwoQuotientData {
        core,
        quotient: (first, second),
        weight,
    }
}

/// Inverse of `two_core_and_quotient`. Rejects a `core` argument that is not
/// actually a 2-core.
pub fn from_core_and_quotient(
    core: &Partition,
    quotient: &(Partition, Partition),
) -> Result<Partition> {
    if two_core_and_quotient(core).weight != 0 {
        return Err(Error::NotTwoCore(core.text()));
    }
    let (q1, q2) = quotient;

    // Grow the beta set until each runner has room for its component.
    let mut t = core.len().div_ceil(2);
    loop {
        let beta = core.beta_set(2 * t);
        let evens = beta.iter().filter(|&&b| b % 2 == 0).count();
        let odds = 2 * t - evens;
        if evens >= q1.len() && odds >= q2.len() {
            let mut combined = Vec::with_capacity(2 * t);
            for m in q1.beta_set(evens) {
                combined.push(2 * m);
            }
            for m in q2.beta_set(odds) {
                combined.push(2 * m + 1);
            }
            return Ok(Partition::from_beta_set(combined));
        }
        t += 1;
    }
}

/// Diagonal-hook partition of a self-conjugate partition:
/// `(2*l_1 - 1, 2*l_2 - 3, ...)` over the diagonal boxes. The result has
/// distinct odd parts and the same size.
pub fn bar_partition(lambda: &Partition) -> Result<Partition> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.text()));
    }
    let d = lambda
        .parts()
        .iter()
        .enumerate()
        .take_while(|(i, &p)| p >= i + 1)
        .count();
    let parts = (0..d).map(|i| 2 * lambda.part(i) - (2 * i + 1)).collect();
    Ok(Partition {
        parts,
    })
}

/// Named partition families used by the basic-set construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionFamily {
    AllOfN(usize),
    OddParts(usize),
    DistinctParts(usize),
    SelfConjugate(usize),
    /// `P'_m`: every part even. Empty when `m` is odd.
    AllEvenParts(usize),
}

/// All partitions of `n` in descending lexicographic order:
/// `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    let top = max.min(n);
    for k in (1..=top).rev() {
        prefix.push(k);
        gen_partitions(n - k, k, prefix, out);
        prefix.pop();
    }
}

/// Complete, duplicate-free enumeration of a family, in the canonical
/// descending-lexicographic order.
pub fn enumerate(family: PartitionFamily) -> Vec<Partition> {
    match family {
        PartitionFamily::AllOfN(n) => partitions_of(n),
        PartitionFamily::OddParts(n) => partitions_of(n)
            .into_iter()
            .filter(Partition::all_parts_odd)
            .collect(),
        PartitionFamily::DistinctParts(n) => partitions_of(n)
            .into_iter()
            .filter(Partition::has_distinct_parts)
            .collect(),
        PartitionFamily::SelfConjugate(n) => partitions_of(n)
            .into_iter()
            .filter(Partition::is_self_conjugate)
            .collect(),
        PartitionFamily::AllEvenParts(n) => {
            if n % 2 == 1 {
                Vec::new()
            } else {
                partitions_of(n)
                    .into_iter()
                    .filter(Partition::all_parts_even)
                    .collect()
            }
        }
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    // Euler's pentagonal recurrence.
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                total += sign * p[i - g2];
            }
            k += 1;
        }
        p[i] = total;
    }
    p[n] as usize
}

/// Sorts partitions into the canonical descending-lexicographic order.
pub fn sort_canonical(partitions: &mut [Partition]) {
    partitions.sort_unstable_by(|a, b| b.cmp(a));
}
