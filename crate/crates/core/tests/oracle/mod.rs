//! Independent oracles used by the integration and acceptance tests.
//!
//! Nothing here goes through the production recursion paths: symmetric-group
//! values come from permutation characters orthogonalized over the exact
//! class inner product; alternating-group verification works from explicit
//! group enumeration (class data, class-algebra structure constants, central
//! characters); wreath-product values come from a from-scratch signed
//! permutation group and the raw induced-character sum; cores come from
//! exhaustive diagram-level domino removal; and a second Hermite normal form
//! uses two-row extended-gcd elimination instead of Euclid-by-minimum.

// Shared between several test targets; each one uses a different subset.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use charbasis::alternating::{AltClassLabel, SplitTag};
use charbasis::lattice::IntegerMatrix;
use charbasis::partition::{partitions_of, Partition};
use charbasis::quad::QuadValue;
use charbasis::wreath::MultiPartition;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// permutations

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &img) in p.iter().enumerate() {
        inv[img] = i;
    }
    inv
}

pub fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

pub fn parity(p: &[usize]) -> i8 {
    cycle_type(p).permutation_sign()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

/// The representative that fills the cycles of the type with consecutive
/// letters, longest cycle first: for type (3,2) on 5 letters this is
/// (0 1 2)(3 4).
pub fn canonical_representative(cycle_type: &Partition, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut next = 0;
    for &len in cycle_type.parts() {
        for offset in 0..len {
            p[next + offset] = next + (offset + 1) % len;
        }
        next += len;
    }
    p
}

// ---------------------------------------------------------------------------
// symmetric-group table via permutation characters and orthogonalization

/// Number of ways to distribute the cycles of an element of type `pi` over
/// ordered bins of capacities `mu` (the permutation-character value).
pub fn permutation_character(mu: &Partition, pi: &Partition) -> BigInt {
    let groups: Vec<(usize, usize)> = pi.multiplicities().into_iter().collect();
    let mut caps: Vec<usize> = mu.parts().to_vec();
    distribute_cycles(&groups, 0, &mut caps)
}

fn distribute_cycles(groups: &[(usize, usize)], g: usize, caps: &mut [usize]) -> BigInt {
    if g == groups.len() {
        return if caps.iter().all(|&c| c == 0) {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let (len, count) = groups[g];
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; caps.len()];
    fn rec(
        len: usize,
        left: usize,
        bin: usize,
        caps: &mut [usize],
        choice: &mut [usize],
        groups: &[(usize, usize)],
        g: usize,
        total: &mut BigInt,
    ) {
        if bin == caps.len() {
            if left == 0 {
                // multinomial: distinguishable cycles of this length
                let m: usize = choice.iter().sum();
                let mut weight = BigInt::one();
                for k in 2..=m {
                    weight *= BigInt::from(k);
                }
                for &x in choice.iter() {
                    for k in 2..=x {
                        weight /= BigInt::from(k);
                    }
                }
                *total += weight * distribute_cycles(groups, g + 1, caps);
            }
            return;
        }
        let max_take = (caps[bin] / len).min(left);
        for take in 0..=max_take {
            caps[bin] -= take * len;
            choice[bin] = take;
            rec(len, left - take, bin + 1, caps, choice, groups, g, total);
            caps[bin] += take * len;
            choice[bin] = 0;
        }
    }
    rec(len, count, 0, caps, &mut choice, groups, g, &mut total);
    total
}

/// Full character table computed without any rim-hook recursion: start from
/// the permutation characters and orthogonalize in descending order. Keys
/// are (row label, cycle type).
pub fn sym_table_oracle(n: usize) -> BTreeMap<(Partition, Partition), BigInt> {
    let classes = partitions_of(n);
    let z: Vec<BigInt> = classes.iter().map(Partition::centralizer_order).collect();
    let inner = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        a.iter()
            .zip(b)
            .zip(&z)
            .map(|((x, y), zc)| x * y / BigRational::from(zc.clone()))
            .sum()
    };

    let mut processed: Vec<(Partition, Vec<BigRational>)> = Vec::new();
    for mu in partitions_of(n) {
        let mut v: Vec<BigRational> = classes
            .iter()
            .map(|pi| BigRational::from(permutation_character(&mu, pi)))
            .collect();
        for (_, chi) in &processed {
            let c = inner(&v, chi);
            assert!(c.is_integer(), "projection multiplicities are integers");
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(chi) {
                    *x -= &c * y;
                }
            }
        }
        assert_eq!(inner(&v, &v), BigRational::one(), "unit norm for {mu}");
        processed.push((mu, v));
    }

    let mut table = BTreeMap::new();
    for (mu, row) in processed {
        for (pi, value) in classes.iter().zip(row) {
            assert!(value.is_integer());
            table.insert((mu.clone(), pi.clone()), value.to_integer());
        }
    }
    table
}

// ---------------------------------------------------------------------------
// alternating group by explicit enumeration

pub struct AltGroupData {
    pub n: usize,
    pub elements: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
    pub class_of: Vec<usize>,
    /// Per class: representative element index, class size, label.
    pub classes: Vec<(usize, usize, AltClassLabel)>,
}

pub fn alt_group_data(n: usize) -> AltGroupData {
    let elements: Vec<Vec<usize>> = all_permutations(n)
        .into_iter()
        .filter(|p| parity(p) == 1)
        .collect();
    let index: HashMap<Vec<usize>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let mut class_of = vec![usize::MAX; elements.len()];
    let mut raw_classes: Vec<(usize, usize)> = Vec::new(); // (rep, size)
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cls = raw_classes.len();
        let mut members = HashSet::new();
        for g in &elements {
            let conj = compose(&compose(g, &elements[start]), &inverse(g));
            members.insert(index[&conj]);
        }
        for &m in &members {
            class_of[m] = cls;
        }
        raw_classes.push((start, members.len()));
    }

    // Label: split types get Plus on the class of the canonical
    // representative, Minus on the other.
    let mut by_type: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    for (cls, (rep, _)) in raw_classes.iter().enumerate() {
        by_type
            .entry(cycle_type(&elements[*rep]))
            .or_default()
            .push(cls);
    }
    let mut labels = vec![None; raw_classes.len()];
    for (ty, classes_of_type) in &by_type {
        match classes_of_type.len() {
            1 => {
                labels[classes_of_type[0]] = Some(AltClassLabel {
                    cycle_type: ty.clone(),
                    tag: SplitTag::None,
                });
            }
            2 => {
                let canon = canonical_representative(ty, n);
                let plus_class = class_of[index[&canon]];
                for &cls in classes_of_type {
                    let tag = if cls == plus_class {
                        SplitTag::Plus
                    } else {
                        SplitTag::Minus
                    };
                    labels[cls] = Some(AltClassLabel {
                        cycle_type: ty.clone(),
                        tag,
                    });
                }
            }
            k => panic!("a cycle type never spreads over {k} classes"),
        }
    }

    let classes = raw_classes
        .into_iter()
        .zip(labels)
        .map(|((rep, size), label)| (rep, size, label.expect("labeled")))
        .collect();
    AltGroupData {
        n,
        elements,
        index,
        class_of,
        classes,
    }
}

impl AltGroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn class_index_by_label(&self, label: &AltClassLabel) -> usize {
        self.classes
            .iter()
            .position(|(_, _, l)| l == label)
            .expect("label exists")
    }

    /// Structure constant: number of pairs (x, y) in classes (i, j) with
    /// x * y equal to a fixed representative of class k.
    pub fn class_mult_coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        let target = &self.elements[self.classes[k].0];
        let mut count = 0;
        for (idx, x) in self.elements.iter().enumerate() {
            if self.class_of[idx] != i {
                continue;
            }
            let y = compose(&inverse(x), target);
            if self.class_of[self.index[&y]] == j {
                count += 1;
            }
        }
        count
    }
}

/// Exact element of Q(sqrt(delta)): `r + s * sqrt(delta)`.
#[derive(Clone, Debug)]
pub struct QuadRat {
    pub r: BigRational,
    pub s: BigRational,
    pub delta: i64,
}

impl PartialEq for QuadRat {
    fn eq(&self, other: &Self) -> bool {
        // the radicand is immaterial when the surd part vanishes
        self.r == other.r
            && self.s == other.s
            && (self.s.is_zero() || self.delta == other.delta)
    }
}

impl QuadRat {
    pub fn from_quad(v: &QuadValue) -> QuadRat {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        QuadRat {
            r: BigRational::from(v.numerator_a().clone()) * &half,
            s: BigRational::from(v.numerator_b().clone()) * &half,
            delta: v.delta(),
        }
    }

    pub fn zero(delta: i64) -> QuadRat {
        QuadRat {
            r: BigRational::zero(),
            s: BigRational::zero(),
            delta,
        }
    }

    pub fn scale(&self, c: &BigRational) -> QuadRat {
        QuadRat {
            r: &self.r * c,
            s: &self.s * c,
            delta: self.delta,
        }
    }

    pub fn add(&self, other: &QuadRat) -> QuadRat {
        let delta = self.merge_delta(other);
        QuadRat {
            r: &self.r + &other.r,
            s: &self.s + &other.s,
            delta,
        }
    }

    pub fn mul(&self, other: &QuadRat) -> QuadRat {
        let delta = self.merge_delta(other);
        QuadRat {
            r: &self.r * &other.r + &self.s * &other.s * BigRational::from(BigInt::from(delta)),
            s: &self.r * &other.s + &self.s * &other.r,
            delta,
        }
    }

    fn merge_delta(&self, other: &QuadRat) -> i64 {
        if self.s.is_zero() {
            other.delta
        } else {
            assert!(
                other.s.is_zero() || self.delta == other.delta,
                "incompatible radicands in oracle arithmetic"
            );
            self.delta
        }
    }
}

// ---------------------------------------------------------------------------
// wreath product of Z_2 with a symmetric group, as signed permutations

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem {
    pub twist: Vec<u8>,
    pub perm: Vec<usize>,
}

pub fn wreath_mul(a: &WreathElem, b: &WreathElem) -> WreathElem {
    let inv_a = inverse(&a.perm);
    let twist = (0..a.twist.len())
        .map(|i| (a.twist[i] + b.twist[inv_a[i]]) % 2)
        .collect();
    WreathElem {
        twist,
        perm: compose(&a.perm, &b.perm),
    }
}

pub fn wreath_inv(a: &WreathElem) -> WreathElem {
    let perm_inv = inverse(&a.perm);
    let twist = (0..a.twist.len()).map(|i| a.twist[a.perm[i]] % 2);
    // inverse twist: (h, s)^(-1) = (s^(-1) h, s^(-1)) with components permuted
    let twist: Vec<u8> = twist.collect();
    WreathElem {
        twist,
        perm: perm_inv,
    }
}

pub fn wreath_elements(w: usize) -> Vec<WreathElem> {
    let mut out = Vec::new();
    for perm in all_permutations(w) {
        for mask in 0..(1usize << w) {
            let twist = (0..w).map(|i| ((mask >> i) & 1) as u8).collect();
            out.push(WreathElem {
                twist,
                perm: perm.clone(),
            });
        }
    }
    out
}

/// Cycle structure: a cycle of the underlying permutation contributes its
/// length to the first partition when the twist product over the cycle is
/// trivial, to the second otherwise.
pub fn wreath_cycle_structure(x: &WreathElem) -> (Partition, Partition) {
    let w = x.perm.len();
    let mut seen = vec![false; w];
    let mut plain = Vec::new();
    let mut twisted = Vec::new();
    for start in 0..w {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut product = 0u8;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            product = (product + x.twist[i]) % 2;
            i = x.perm[i];
            len += 1;
        }
        if product == 0 {
            plain.push(len);
        } else {
            twisted.push(len);
        }
    }
    (
        Partition::from_unsorted(plain),
        Partition::from_unsorted(twisted),
    )
}

pub fn c_empty_representative(pi: &Partition, w: usize) -> WreathElem {
    WreathElem {
        twist: vec![0; w],
        perm: canonical_representative(pi, w),
    }
}

pub fn centralizer_order_brute(x: &WreathElem, elements: &[WreathElem]) -> usize {
    elements
        .iter()
        .filter(|g| wreath_mul(g, x) == wreath_mul(x, g))
        .count()
}

/// Raw induced-character evaluation of the character labeled by a
/// bipartition, from the inertia subgroup, using only oracle symmetric
/// tables for the component values.
pub fn theta_brute(
    mu: &MultiPartition,
    x: &WreathElem,
    elements: &[WreathElem],
    component_tables: &HashMap<usize, BTreeMap<(Partition, Partition), BigInt>>,
) -> BigRational {
    assert_eq!(mu.ell(), 2);
    let w = x.perm.len();
    let a = mu.components()[0].size();
    let value_on_inertia = |g: &WreathElem| -> Option<BigInt> {
        // block-preserving permutations only
        if g.perm[..a].iter().any(|&img| img >= a) {
            return None;
        }
        // the base-group character: sign of the twists over the second block
        let mut sign = 0u8;
        for i in a..w {
            sign = (sign + g.twist[i]) % 2;
        }
        // component cycle types
        let first = cycle_type(&g.perm[..a]);
        let second_perm: Vec<usize> = g.perm[a..].iter().map(|&img| img - a).collect();
        let second = cycle_type(&second_perm);
        let chi1 = if a == 0 {
            BigInt::one()
        } else {
            component_tables[&a][&(mu.components()[0].clone(), first)].clone()
        };
        let chi2 = if w - a == 0 {
            BigInt::one()
        } else {
            component_tables[&(w - a)][&(mu.components()[1].clone(), second)].clone()
        };
        let value = chi1 * chi2;
        Some(if sign == 1 { -value } else { value })
    };

    let mut total = BigInt::zero();
    for g in elements {
        let conj = wreath_mul(&wreath_mul(g, x), &wreath_inv(g));
        if let Some(v) = value_on_inertia(&conj) {
            total += v;
        }
    }
    let mut inertia_order = BigInt::one();
    for k in 2..=a {
        inertia_order *= BigInt::from(k);
    }
    for k in 2..=(w - a) {
        inertia_order *= BigInt::from(k);
    }
    for _ in 0..w {
        inertia_order *= 2;
    }
    BigRational::new(total, inertia_order)
}

// ---------------------------------------------------------------------------
// exhaustive domino removal on diagrams

/// All partitions obtainable by removing one rim domino, computed on the
/// diagram itself (no beta sets).
pub fn remove_one_domino(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = lam.len();
    for i in 0..rows {
        // horizontal: last two cells of row i
        if lam.part(i) >= 2 && lam.part(i) - 2 >= lam.part(i + 1) {
            let mut parts = lam.parts().to_vec();
            parts[i] -= 2;
            out.push(Partition::from_unsorted(parts));
        }
        // vertical: rows i, i+1 ending at the same column
        if i + 1 < rows
            && lam.part(i) == lam.part(i + 1)
            && lam.part(i + 1) >= 1
            && lam.part(i + 1) - 1 >= lam.part(i + 2)
        {
            let mut parts = lam.parts().to_vec();
            parts[i] -= 1;
            parts[i + 1] -= 1;
            out.push(Partition::from_unsorted(parts));
        }
    }
    out
}

/// Removes dominoes in every possible order; returns the set of terminal
/// partitions and the set of removal depths observed.
pub fn exhaustive_domino_cores(lam: &Partition) -> (HashSet<Partition>, HashSet<usize>) {
    let mut terminals = HashSet::new();
    let mut depths = HashSet::new();
    let mut memo = HashSet::new();
    fn walk(
        lam: &Partition,
        depth: usize,
        terminals: &mut HashSet<Partition>,
        depths: &mut HashSet<usize>,
        memo: &mut HashSet<(Partition, usize)>,
    ) {
        if !memo.insert((lam.clone(), depth)) {
            return;
        }
        let nexts = remove_one_domino(lam);
        if nexts.is_empty() {
            terminals.insert(lam.clone());
            depths.insert(depth);
            return;
        }
        for next in nexts {
            walk(&next, depth + 1, terminals, depths, memo);
        }
    }
    walk(lam, 0, &mut terminals, &mut depths, &mut memo);
    (terminals, depths)
}

// ---------------------------------------------------------------------------
// reference Hermite normal form (extended-gcd two-row elimination)

pub fn hnf_reference(m: &IntegerMatrix) -> IntegerMatrix {
    let rows = m.n_rows();
    let cols = m.n_cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot = 0;
    for col in 0..cols {
        if pivot == rows {
            break;
        }
        if let Some(nz) = (pivot..rows).find(|&r| !a[r][col].is_zero()) {
            a.swap(pivot, nz);
        } else {
            continue;
        }
        for r in pivot + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let (x, y, g) = extended_gcd(&a[pivot][col], &a[r][col]);
            let p_over = &a[pivot][col] / &g;
            let r_over = &a[r][col] / &g;
            for c in 0..cols {
                let top = &x * &a[pivot][c] + &y * &a[r][c];
                let bottom = &p_over * &a[r][c] - &r_over * &a[pivot][c];
                a[pivot][c] = top;
                a[r][c] = bottom;
            }
        }
        if a[pivot][col].is_negative() {
            for c in 0..cols {
                let v = std::mem::take(&mut a[pivot][c]);
                a[pivot][c] = -v;
            }
        }
        for r in 0..pivot {
            let q = a[r][col].div_floor(&a[pivot][col]);
            if !q.is_zero() {
                for c in 0..cols {
                    let sub = &q * &a[pivot][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivot += 1;
    }
    IntegerMatrix::from_rows(a)
}

/// Bezout: returns (x, y, g) with x*a + y*b = g = gcd(a, b) > 0.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.x, e.y, e.gcd)
}

/// Membership of `v` in the row lattice of an HNF basis, by pivot-driven
/// back-substitution over the integers.
pub fn hnf_solve_membership(h: &IntegerMatrix, v: &[BigInt]) -> bool {
    let mut rest: Vec<BigInt> = v.to_vec();
    for r in 0..h.n_rows() {
        let Some(lead) = (0..h.n_cols()).find(|&c| !h.get(r, c).is_zero()) else {
            break;
        };
        let (q, rem) = rest[lead].div_rem(h.get(r, lead));
        if rem.is_zero() && !q.is_zero() {
            for c in 0..h.n_cols() {
                let sub = &q * h.get(r, c);
                rest[c] -= sub;
            }
        }
    }
    rest.iter().all(Zero::is_zero)
}
