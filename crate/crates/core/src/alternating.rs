//! Conjugacy classes and irreducible characters of the alternating group.
//!
//! A class of `S_n` consisting of even permutations stays a single class of
//! `A_n` unless its cycle type has all parts odd and distinct, in which case
//! it splits into a plus and a minus class. The plus class is the one
//! containing the canonical representative that fills its cycles with
//! `1, 2, 3, ...` in increasing order; the minus class is its conjugate by
//! the transposition of the first two letters. Everything downstream is
//! invariant under swapping the two labels globally, and the tests assert
//! that invariance rather than the labeling itself.
//!
//! For a self-conjugate label the restriction splits into two irreducible
//! characters. They agree (value `chi(x)/2`) except on the two classes whose
//! cycle type is the diagonal-hook partition, where the values are
//! `(e ± sqrt(e * product of hooks)) / 2` with `e = (-1)^((n-d)/2)`, `d` the
//! number of diagonal boxes. The brute-force oracle in the test suite
//! validates this closed form against explicit group enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{bar_partition, Partition};
use crate::quad::{QuadSum, QuadValue};
use crate::symmetric::{CharacterTable, CharacterVector};

/// Which half of a split class (or `None` for unsplit classes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SplitTag {
    None,
    Plus,
    Minus,
}

/// Key identifying a conjugacy class of the alternating group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AltClassLabel {
    pub cycle_type: Partition,
    pub tag: SplitTag,
}

impl AltClassLabel {
    pub fn text(&self) -> String {
        match self.tag {
            SplitTag::None => self.cycle_type.text(),
            SplitTag::Plus => format!("{}+", self.cycle_type.text()),
            SplitTag::Minus => format!("{}-", self.cycle_type.text()),
        }
    }
}

/// A conjugacy class of the alternating group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltClass {
    pub cycle_type: Partition,
    pub split: bool,
    pub tag: SplitTag,
    pub centralizer_order: BigInt,
    pub is_two_regular: bool,
}

impl AltClass {
    pub fn label(&self) -> AltClassLabel {
        AltClassLabel {
            cycle_type: self.cycle_type.clone(),
            tag: self.tag,
        }
    }
}

/// The classes of the alternating group on `n` letters, in canonical order
/// of cycle type with plus before minus.
pub fn alt_classes(n: usize) -> Vec<AltClass> {
    assert!(n >= 2, "alternating classes need n >= 2");
    let mut out = Vec::new();
    for cycle_type in crate::partition::partitions_of(n) {
        if cycle_type.permutation_sign() != 1 {
            continue;
        }
        let z = cycle_type.centralizer_order();
        let splits = cycle_type.all_parts_odd() && cycle_type.has_distinct_parts();
        let is_two_regular = cycle_type.all_parts_odd();
        if splits {
            for tag in [SplitTag::Plus, SplitTag::Minus] {
                out.push(AltClass {
                    cycle_type: cycle_type.clone(),
                    split: true,
                    tag,
                    centralizer_order: z.clone(),
                    is_two_regular,
                });
            }
        } else {
            out.push(AltClass {
                cycle_type,
                split: false,
                tag: SplitTag::None,
                centralizer_order: z / 2,
                is_two_regular,
            });
        }
    }
    out
}

/// Character label: either the restriction of a non-self-conjugate pair
/// (named by the lexicographically smaller of the two partitions) or one of
/// the two constituents of a self-conjugate restriction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AltLabel {
    NonSplit(Partition),
    Split(Partition, SplitTag),
}

impl AltLabel {
    pub fn text(&self) -> String {
        match self {
            AltLabel::NonSplit(lam) => lam.text(),
            AltLabel::Split(lam, SplitTag::Plus) => format!("{}+", lam.text()),
            AltLabel::Split(lam, SplitTag::Minus) => format!("{}-", lam.text()),
            AltLabel::Split(lam, SplitTag::None) => lam.text(),
        }
    }
}

/// An irreducible character of the alternating group, with exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltCharacter {
    pub label: AltLabel,
    pub values: BTreeMap<AltClassLabel, QuadValue>,
}

impl AltCharacter {
    pub fn value(&self, label: &AltClassLabel) -> Option<&QuadValue> {
        self.values.get(label)
    }

    pub fn degree(&self, n: usize) -> BigInt {
        let identity = AltClassLabel {
            cycle_type: Partition::from_unsorted(vec![1; n]),
            tag: SplitTag::None,
        };
        self.values
            .get(&identity)
            .and_then(QuadValue::integer)
            .expect("degree is a rational integer")
    }

    /// Keeps the classes whose cycle type has all parts odd; split tags are
    /// preserved.
    pub fn restrict_two_regular(&self) -> AltCharacter {
        AltCharacter {
            label: self.label.clone(),
            values: self
                .values
                .iter()
                .filter(|(k, _)| k.cycle_type.all_parts_odd())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

fn sign_exponent(n: usize, d: usize) -> i64 {
    if (n - d) / 2 % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The irreducible characters of `A_n` lying over `chi_lambda`: one
/// character when `lambda` is not self-conjugate, the split pair otherwise.
pub fn alt_character(lam: &Partition, table: &CharacterTable) -> Result<Vec<AltCharacter>> {
    let n = table.n();
    if lam.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: lam.size(),
        });
    }
    let classes = alt_classes(n);
    if !lam.is_self_conjugate() {
        let canonical = lam.clone().min(lam.conjugate());
        let mut values = BTreeMap::new();
        for class in &classes {
            let chi = table.value(&canonical, &class.cycle_type)?;
            values.insert(class.label(), QuadValue::from_integer(chi.clone()));
        }
        return Ok(vec![AltCharacter {
            label: AltLabel::NonSplit(canonical),
            values,
        }]);
    }

    let bar = bar_partition(lam)?;
    let d = bar.len();
    let eps = sign_exponent(n, d);
    let radicand: i64 = eps
        * bar
            .parts()
            .iter()
            .map(|&p| i64::try_from(p).expect("part fits i64"))
            .product::<i64>();
    let mut plus_values = BTreeMap::new();
    let mut minus_values = BTreeMap::new();
    for class in &classes {
        if class.cycle_type == bar {
            let s_plus_t = QuadValue::new(BigInt::from(eps), BigInt::from(1), radicand)?;
            let s_minus_t = QuadValue::new(BigInt::from(eps), BigInt::from(-1), radicand)?;
            match class.tag {
                SplitTag::Plus => {
                    plus_values.insert(class.label(), s_plus_t);
                    minus_values.insert(class.label(), s_minus_t);
                }
                SplitTag::Minus => {
                    plus_values.insert(class.label(), s_minus_t);
                    minus_values.insert(class.label(), s_plus_t);
                }
                SplitTag::None => unreachable!("bar partition classes always split"),
            }
        } else {
            let chi = table.value(lam, &class.cycle_type)?;
            let half = QuadValue::from_half(chi.clone());
            plus_values.insert(class.label(), half.clone());
            minus_values.insert(class.label(), half);
        }
    }
    Ok(vec![
        AltCharacter {
            label: AltLabel::Split(lam.clone(), SplitTag::Plus),
            values: plus_values,
        },
        AltCharacter {
            label: AltLabel::Split(lam.clone(), SplitTag::Minus),
            values: minus_values,
        },
    ])
}

/// The full list of irreducible characters of `A_n`, canonical order.
pub fn alt_character_table(table: &CharacterTable) -> Result<Vec<AltCharacter>> {
    let mut out = Vec::new();
    for lam in table.partitions() {
        let conj = lam.conjugate();
        if *lam > conj {
            continue; // the conjugate partner already contributed
        }
        out.extend(alt_character(lam, table)?);
    }
    Ok(out)
}

/// Induction to the symmetric group: doubles unsplit values, sums the two
/// halves on split classes, and vanishes on odd classes.
pub fn induce_to_sn(rho: &AltCharacter, n: usize) -> Result<CharacterVector> {
    let mut values = BTreeMap::new();
    for class in crate::symmetric::sym_classes(n) {
        let pi = class.cycle_type;
        if class.sign != 1 {
            values.insert(pi, BigInt::zero());
            continue;
        }
        let splits = pi.all_parts_odd() && pi.has_distinct_parts();
        let v = if splits {
            let plus = rho
                .value(&AltClassLabel {
                    cycle_type: pi.clone(),
                    tag: SplitTag::Plus,
                })
                .ok_or_else(|| Error::UnknownClass(pi.text()))?;
            let minus = rho
                .value(&AltClassLabel {
                    cycle_type: pi.clone(),
                    tag: SplitTag::Minus,
                })
                .ok_or_else(|| Error::UnknownClass(pi.text()))?;
            plus.checked_add(minus)?
                .integer()
                .ok_or(Error::NotRepresentable)?
        } else {
            let v = rho
                .value(&AltClassLabel {
                    cycle_type: pi.clone(),
                    tag: SplitTag::None,
                })
                .ok_or_else(|| Error::UnknownClass(pi.text()))?;
            // twice (a/2) = a
            v.numerator_a().clone()
        };
        values.insert(pi, v);
    }
    Ok(CharacterVector { n, values })
}

/// Restriction of an integer-valued symmetric-group class function to the
/// alternating classes (the same value on both halves of a split class).
pub fn restrict_sym_to_alt(chi: &CharacterVector, n: usize) -> AltCharacterValues {
    let mut values = BTreeMap::new();
    for class in alt_classes(n) {
        let v = chi
            .value(&class.cycle_type)
            .expect("class function defined on all classes");
        values.insert(class.label(), QuadValue::from_integer(v.clone()));
    }
    values
}

pub type AltCharacterValues = BTreeMap<AltClassLabel, QuadValue>;

/// Class-subset inner product `(1/|A_n|) sum over C of a(g) conj(b(g))`,
/// accumulated exactly with one radicand per class.
pub fn alt_inner_product(
    classes: &[AltClass],
    a: &AltCharacterValues,
    b: &AltCharacterValues,
) -> Result<QuadSum> {
    let mut sum = QuadSum::zero();
    for class in classes {
        let label = class.label();
        let (Some(x), Some(y)) = (a.get(&label), b.get(&label)) else {
            return Err(Error::UnknownClass(label.text()));
        };
        let scale = BigRational::new(BigInt::from(1), class.centralizer_order.clone());
        sum.add_product(x, y, &scale)?;
    }
    Ok(sum)
}

/// JSON export of the full table: classes, centralizer orders, and values
/// in the four-field quadratic encoding.
pub fn alt_table_json(table: &CharacterTable) -> Result<serde_json::Value> {
    let n = table.n();
    let classes = alt_classes(n);
    let chars = alt_character_table(table)?;
    let class_labels: Vec<String> = classes.iter().map(|c| c.label().text()).collect();
    let centralizers: Vec<String> = classes
        .iter()
        .map(|c| c.centralizer_order.to_string())
        .collect();
    let rows: Vec<serde_json::Value> = chars
        .iter()
        .map(|ch| {
            let values: Vec<serde_json::Value> = classes
                .iter()
                .map(|c| serde_json::to_value(ch.value(&c.label()).expect("complete row")))
                .collect::<std::result::Result<_, _>>()
                .expect("quad values serialize");
            serde_json::json!({ "label": ch.label.text(), "values": values })
        })
        .collect();
    Ok(serde_json::json!({
        "schema": crate::SCHEMA_VERSION,
        "group": "an",
        "n": n,
        "classes": class_labels,
        "centralizer_orders": centralizers,
        "characters": rows,
    }))
}
