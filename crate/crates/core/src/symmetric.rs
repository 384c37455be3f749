//! Conjugacy classes and exact irreducible character values of the
//! symmetric group, via the Murnaghan-Nakayama recursion on beta-sets.
//!
//! Rows and columns of a table are both indexed by partitions of `n` in the
//! canonical descending-lexicographic order. Cycle-type parts are consumed
//! largest first in the recursion, and each table column memoizes its own
//! subtree, so table construction parallelizes cleanly over columns.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, two_core_and_quotient, Partition};

/// Default bound on `n` for full character tables.
pub const DEFAULT_TABLE_N_MAX: usize = 14;

/// A conjugacy class of the symmetric group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymClass {
    pub cycle_type: Partition,
    pub centralizer_order: BigIntWrapper,
    /// All parts odd, i.e. the elements have odd order.
    pub is_two_regular: bool,
    /// Signature character evaluated on the class.
    pub sign: i8,
}

/// Serialization helper: centralizer orders as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigIntWrapper(pub BigInt);

impl Serialize for BigIntWrapper {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// The classes of the symmetric group on `n` letters, canonical order.
pub fn sym_classes(n: usize) -> Vec<SymClass> {
    partitions_of(n)
        .into_iter()
        .map(|cycle_type| {
            let is_two_regular = cycle_type.all_parts_odd();
            let sign = cycle_type.permutation_sign();
            SymClass {
                centralizer_order: BigIntWrapper(cycle_type.centralizer_order()),
                is_two_regular,
                sign,
                cycle_type,
            }
        })
        .collect()
}

/// A class function with exact integer values, keyed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    pub n: usize,
    pub values: BTreeMap<Partition, BigInt>,
}

impl CharacterVector {
    /// Keeps only the classes whose cycle type has all parts odd.
    pub fn restrict_two_regular(&self) -> CharacterVector {
        CharacterVector {
            n: self.n,
            values: self
                .values
                .iter()
                .filter(|(pi, _)| pi.all_parts_odd())
                .map(|(pi, v)| (pi.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn value(&self, pi: &Partition) -> Option<&BigInt> {
        self.values.get(pi)
    }
}

/// `sum over c in C of a(c) * b(c) / z_c`, the class-restricted inner
/// product `(1/|G|) * sum_{g in C} a(g) * conj(b(g))` for integer values.
pub fn inner_product_over(
    class_set: &[Partition],
    a: &CharacterVector,
    b: &CharacterVector,
) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for c in class_set {
        let (Some(x), Some(y)) = (a.value(c), b.value(c)) else {
            return Err(Error::UnknownClass(c.text()));
        };
        total += BigRational::new(x * y, c.centralizer_order());
    }
    Ok(total)
}

type MnCache = HashMap<(Partition, usize), BigInt>;

fn mn_recursive(lam: &Partition, pi_rest: &[usize], cache: &mut MnCache) -> BigInt {
    if lam.is_empty() {
        return BigInt::one();
    }
    let key = (lam.clone(), pi_rest.len());
    if let Some(v) = cache.get(&key) {
        return v.clone();
    }
    let k = pi_rest[0];
    let rest = &pi_rest[1..];
    let beta = lam.beta_set(lam.len());
    let mut total = BigInt::zero();
    for (j, &b) in beta.iter().enumerate() {
        if b >= k && !beta.contains(&(b - k)) {
            // Leg length of the rim hook = beads strictly between b-k and b.
            let height = beta.iter().filter(|&&x| b - k < x && x < b).count();
            let mut new_beta = beta.clone();
            new_beta[j] = b - k;
            let mu = Partition::from_beta_set(new_beta);
            let term = mn_recursive(&mu, rest, cache);
            if height % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    cache.insert(key, total.clone());
    total
}

/// Exact character value `chi_lambda(pi)` by rim-hook recursion.
pub fn mn_value(lam: &Partition, pi: &Partition) -> Result<BigInt> {
    if lam.size() != pi.size() {
        return Err(Error::SizeMismatch {
            expected: lam.size(),
            actual: pi.size(),
        });
    }
    let mut cache = MnCache::new();
    Ok(mn_recursive(lam, pi.parts(), &mut cache))
}

/// Full exact character table of the symmetric group on `n` letters.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    classes: Vec<SymClass>,
    row_index: HashMap<Partition, usize>,
    class_index: HashMap<Partition, usize>,
    /// Row-major: `values[row * n_classes + col]`.
    values: Vec<BigInt>,
}

/// Builds the table with the default resource bound.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_bounded(n, DEFAULT_TABLE_N_MAX)
}

/// Builds the table, guarding against `n` beyond `n_max`.
pub fn character_table_bounded(n: usize, n_max: usize) -> Result<CharacterTable> {
    if n > n_max {
        return Err(Error::ResourceBound {
            what: "character table n",
            requested: n,
            bound: n_max,
        });
    }
    let partitions = partitions_of(n);
    let classes = sym_classes(n);
    let columns: Vec<Vec<BigInt>> = classes
        .par_iter()
        .map(|class| {
            let mut cache = MnCache::new();
            partitions
                .iter()
                .map(|lam| mn_recursive(lam, class.cycle_type.parts(), &mut cache))
                .collect()
        })
        .collect();

    let n_classes = classes.len();
    let mut values = vec![BigInt::zero(); partitions.len() * n_classes];
    for (c, column) in columns.into_iter().enumerate() {
        for (r, v) in column.into_iter().enumerate() {
            values[r * n_classes + c] = v;
        }
    }
    let row_index = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let class_index = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.cycle_type.clone(), i))
        .collect();
    Ok(CharacterTable {
        n,
        partitions,
        classes,
        row_index,
        class_index,
        values,
    })
}

impl CharacterTable {
    /// Reassembles a table from rows in canonical order (used by the CLI's
    /// persistent cache). Dimensions must match the canonical layout.
    pub fn from_values(n: usize, rows: Vec<Vec<BigInt>>) -> Result<CharacterTable> {
        let partitions = partitions_of(n);
        let classes = sym_classes(n);
        if rows.len() != partitions.len() || rows.iter().any(|r| r.len() != classes.len()) {
            return Err(Error::InvalidPartition(format!(
                "cached table shape mismatch for n={n}"
            )));
        }
        let row_index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let class_index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.cycle_type.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            partitions,
            classes,
            row_index,
            class_index,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[SymClass] {
        &self.classes
    }

    pub fn value_at(&self, row: usize, col: usize) -> &BigInt {
        &self.values[row * self.classes.len() + col]
    }

    pub fn value(&self, lam: &Partition, pi: &Partition) -> Result<&BigInt> {
        let r = self
            .row_index
            .get(lam)
            .ok_or_else(|| Error::UnknownClass(lam.text()))?;
        let c = self
            .class_index
            .get(pi)
            .ok_or_else(|| Error::UnknownClass(pi.text()))?;
        Ok(self.value_at(*r, *c))
    }

    pub fn row_vector(&self, lam: &Partition) -> Result<CharacterVector> {
        let r = self
            .row_index
            .get(lam)
            .ok_or_else(|| Error::UnknownClass(lam.text()))?;
        let values = self
            .classes
            .iter()
            .enumerate()
            .map(|(c, class)| (class.cycle_type.clone(), self.value_at(*r, c).clone()))
            .collect();
        Ok(CharacterVector { n: self.n, values })
    }

    pub fn degree(&self, lam: &Partition) -> Result<&BigInt> {
        let identity = Partition::from_unsorted(vec![1; self.n]);
        self.value(lam, &identity)
    }

    /// Cycle types of the 2-regular classes, canonical order.
    pub fn two_regular_classes(&self) -> Vec<Partition> {
        self.classes
            .iter()
            .filter(|c| c.is_two_regular)
            .map(|c| c.cycle_type.clone())
            .collect()
    }

    /// CSV export: rows labeled by partition text, columns by cycle type.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for class in &self.classes {
            out.push(',');
            out.push_str(&class.cycle_type.text());
        }
        out.push('\n');
        for (r, lam) in self.partitions.iter().enumerate() {
            out.push_str(&lam.text());
            for c in 0..self.classes.len() {
                out.push(',');
                out.push_str(&self.value_at(r, c).to_string());
            }
            out.push('\n');
        }
        out
    }

    /// JSON export with exact integer values.
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<String> = self.classes.iter().map(|c| c.cycle_type.text()).collect();
        let centralizers: Vec<String> = self
            .classes
            .iter()
            .map(|c| c.centralizer_order.0.to_string())
            .collect();
        let rows: Vec<serde_json::Value> = self
            .partitions
            .iter()
            .enumerate()
            .map(|(r, lam)| {
                let values: Vec<i64> = (0..self.classes.len())
                    .map(|c| {
                        i64::try_from(self.value_at(r, c)).expect("value fits in i64 at desk scale")
                    })
                    .collect();
                serde_json::json!({ "lambda": lam.text(), "values": values })
            })
            .collect();
        serde_json::json!({
            "schema": "charbasis/1",
            "group": "sn",
            "n": self.n,
            "classes": classes,
            "centralizer_orders": centralizers,
            "characters": rows,
        })
    }
}

/// A 2-block: all partitions of `n` sharing a 2-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoBlock {
    pub core: Partition,
    pub weight: usize,
    pub members: Vec<Partition>,
}

/// Partitions the labels of `Irr(S_n)` into 2-blocks, grouped by 2-core.
/// Blocks are listed by ascending core (so the largest weight comes first);
/// members stay in canonical order.
pub fn two_blocks(n: usize) -> Vec<TwoBlock> {
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in partitions_of(n) {
        let data = two_core_and_quotient(&lam);
        by_core.entry(data.core).or_default().push(lam);
    }
    by_core
        .into_iter()
        .map(|(core, members)| TwoBlock {
            weight: (n - core.size()) / 2,
            core,
            members,
        })
        .collect()
}
