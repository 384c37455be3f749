//! Class and character combinatorics of the wreath product of a cyclic
//! group of order `l` with the symmetric group on `w` letters, restricted
//! to what the basic-set verification needs: the multipartition
//! parametrization, the classes with cycle structure `(mu, ∅, ..., ∅)`,
//! character values on those classes, the conjugating check-map on
//! bipartitions, and the class-restricted inner product.
//!
//! General character values on other classes are deliberately not
//! implemented; the tests cross-check these values against a from-scratch
//! construction of the group as signed permutations at small `w`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lr::induced_young_value;
use crate::partition::{partitions_of, Partition};

/// An `l`-tuple of partitions with total size `w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "need at least one component");
        MultiPartition { components }
    }

    pub fn from_pair(first: Partition, second: Partition) -> Self {
        MultiPartition {
            components: vec![first, second],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    /// Total number of cycles/boxes.
    pub fn total(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn text(&self) -> String {
        self.components
            .iter()
            .map(Partition::text)
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl std::fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.text())
    }
}

/// All multipartitions with `ell` components and total `w`, ordered
/// lexicographically over the component tuple (components in the canonical
/// partition order).
pub fn enumerate_multipartitions(ell: usize, w: usize) -> Vec<MultiPartition> {
    assert!(ell >= 1);
    let mut out = Vec::new();
    let mut prefix: Vec<Partition> = Vec::new();
    fn rec(ell: usize, left: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if prefix.len() + 1 == ell {
            for last in partitions_of(left) {
                prefix.push(last);
                out.push(MultiPartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for k in (0..=left).rev() {
            for comp in partitions_of(k) {
                prefix.push(comp);
                rec(ell, left - k, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(ell, w, &mut prefix, &mut out);
    out
}

/// Centralizer order of a class with cycle structure `(pi, ∅, ..., ∅)`:
/// `prod_k a_k! (k*l)^(a_k) = l^(#parts of pi) * z_pi`. Note the exponent is
/// the number of parts, not the total size; the test suite pins this against
/// explicit group enumeration.
pub fn c_empty_centralizer(ell: usize, pi: &Partition) -> BigInt {
    let mut z = pi.centralizer_order();
    for _ in 0..pi.len() {
        z *= BigInt::from(ell);
    }
    z
}

/// Conjugacy-class data, specialized to what the verifications use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathClassData {
    pub structure: MultiPartition,
    /// True when every component after the first is empty.
    pub in_c_empty: bool,
    /// Centralizer order; only carried for classes in the distinguished
    /// subset.
    pub centralizer_order: Option<BigInt>,
}

/// Classes of the wreath product, labeled by multipartitions.
pub fn wreath_classes(ell: usize, w: usize) -> Vec<WreathClassData> {
    enumerate_multipartitions(ell, w)
        .into_iter()
        .map(|structure| {
            let in_c_empty = structure.components()[1..]
                .iter()
                .all(Partition::is_empty);
            let centralizer_order =
                in_c_empty.then(|| c_empty_centralizer(ell, &structure.components()[0]));
            WreathClassData {
                structure,
                in_c_empty,
                centralizer_order,
            }
        })
        .collect()
}

/// The classes with cycle structure `(mu, ∅, ..., ∅)`, one per partition of
/// `w`, in canonical order.
pub fn c_empty_classes(ell: usize, w: usize) -> Vec<WreathClassData> {
    partitions_of(w)
        .into_iter()
        .map(|mu| {
            let z = c_empty_centralizer(ell, &mu);
            let mut components = vec![mu];
            components.resize(ell, Partition::empty());
            WreathClassData {
                structure: MultiPartition::new(components),
                in_c_empty: true,
                centralizer_order: Some(z),
            }
        })
        .collect()
}

/// An irreducible-character label with its degree
/// (`multinomial(w; |mu_i|) * prod of standard-tableaux counts`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathCharacterLabel {
    pub label: MultiPartition,
    pub degree: BigInt,
}

fn multinomial(total: usize, sizes: &[usize]) -> BigInt {
    let mut numerator = BigInt::one();
    for k in 2..=total {
        numerator *= BigInt::from(k);
    }
    let mut denominator = BigInt::one();
    for &s in sizes {
        for k in 2..=s {
            denominator *= BigInt::from(k);
        }
    }
    numerator / denominator
}

fn label_with_degree(label: MultiPartition) -> WreathCharacterLabel {
    let sizes: Vec<usize> = label.components().iter().map(Partition::size).collect();
    let mut degree = multinomial(label.total(), &sizes);
    for comp in label.components() {
        degree *= comp.standard_tableaux_count();
    }
    WreathCharacterLabel { label, degree }
}

/// All character labels of the wreath product.
pub fn wreath_character_labels(ell: usize, w: usize) -> Vec<WreathCharacterLabel> {
    enumerate_multipartitions(ell, w)
        .into_iter()
        .map(label_with_degree)
        .collect()
}

/// The characters with the base subgroup in their kernel: labels
/// `(mu, ∅, ..., ∅)`. Their value vectors on the distinguished classes
/// reproduce the character table of the symmetric group on `w` letters.
pub fn b_empty_set(ell: usize, w: usize) -> Vec<WreathCharacterLabel> {
    partitions_of(w)
        .into_iter()
        .map(|mu| {
            let mut components = vec![mu];
            components.resize(ell, Partition::empty());
            label_with_degree(MultiPartition::new(components))
        })
        .collect()
}

/// Value of the character labeled by `mu` on the class of cycle structure
/// `(pi, ∅, ..., ∅)`: equal to the value at `pi` of the character of the
/// symmetric group induced from the Young subgroup cut out by the component
/// sizes.
pub fn theta_on_c_empty(mu: &MultiPartition, pi: &Partition) -> Result<BigInt> {
    if mu.total() != pi.size() {
        return Err(Error::SizeMismatch {
            expected: mu.total(),
            actual: pi.size(),
        });
    }
    induced_young_value(mu.components(), pi)
}

/// The full value vector of `theta_mu` on the distinguished classes, keyed
/// by the first-component partition of the class.
pub fn c_empty_value_vector(mu: &MultiPartition) -> Result<BTreeMap<Partition, BigInt>> {
    let w = mu.total();
    partitions_of(w)
        .into_iter()
        .map(|pi| {
            let v = theta_on_c_empty(mu, &pi)?;
            Ok((pi, v))
        })
        .collect()
}

/// The involutive check-map on bipartitions: conjugate the second component.
pub fn check_map(bi: &(Partition, Partition)) -> (Partition, Partition) {
    (bi.0.clone(), bi.1.conjugate())
}

/// Inner product over the distinguished classes:
/// `(1/|G|) sum over those elements of f * g`, i.e.
/// `sum over pi of f(pi) * g(pi) / centralizer((pi, ∅, ..., ∅))`.
pub fn inner_product_c_empty(
    f: &BTreeMap<Partition, BigInt>,
    g: &BTreeMap<Partition, BigInt>,
    w: usize,
    ell: usize,
) -> BigRational {
    let mut total = BigRational::from(BigInt::from(0));
    for pi in partitions_of(w) {
        let x = f.get(&pi).cloned().unwrap_or_default();
        let y = g.get(&pi).cloned().unwrap_or_default();
        total += BigRational::new(x * y, c_empty_centralizer(ell, &pi));
    }
    total
}
