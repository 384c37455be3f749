//! Littlewood-Richardson coefficients by direct enumeration of lattice-word
//! skew tableaux, the induced-square characters `gamma_mu`, the triangular
//! coefficient matrix on doubled partitions, and values of characters
//! induced from Young subgroups.
//!
//! Induced values have two evaluation routes: the centralizer-weighted sum
//! over multiset splittings (`induced_young_value`) and the expansion
//! through iterated LR coefficients. The test suite asserts their
//! agreement.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;
use crate::partition::{partitions_of, Partition};
use crate::symmetric;

/// Decomposition of an induced character into irreducible constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRDecomposition {
    pub source: Vec<Partition>,
    pub terms: BTreeMap<Partition, u64>,
}

impl LRDecomposition {
    pub fn multiplicity(&self, lam: &Partition) -> u64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }
}

/// Number of semistandard skew tableaux of shape `lam/mu` and content `nu`
/// whose reverse reading word is a lattice word. Returns 0 for impossible
/// shapes.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lam: &Partition) -> u64 {
    if mu.size() + nu.size() != lam.size() || !lam.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1; // lam == mu at this point
    }
    // Cells of lam/mu in reverse reading order: rows top to bottom, each row
    // right to left. This order makes the lattice condition a prefix check.
    let mut cells = Vec::new();
    for r in 0..lam.len() {
        let lo = mu.part(r);
        let hi = lam.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let mut counts = vec![0usize; nu.len()];
    let mut filled: HashMap<(usize, usize), usize> = HashMap::new();
    let mut total = 0u64;
    fill(&cells, 0, mu, nu, &mut counts, &mut filled, &mut total);
    total
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    mu: &Partition,
    nu: &Partition,
    counts: &mut [usize],
    filled: &mut HashMap<(usize, usize), usize>,
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    for letter in 0..nu.len() {
        if counts[letter] == nu.part(letter) {
            continue; // content bound reached
        }
        // lattice condition on the reverse reading word prefix
        if letter > 0 && counts[letter] >= counts[letter - 1] {
            continue;
        }
        // weakly increasing along rows: the right neighbor was filled earlier
        if let Some(&right) = filled.get(&(r, c + 1)) {
            if letter > right {
                continue;
            }
        }
        // strictly increasing down columns; the cell above, when it belongs
        // to the skew shape, was filled earlier
        if r > 0 && c >= mu.part(r - 1) {
            if let Some(&above) = filled.get(&(r - 1, c)) {
                if above >= letter {
                    continue;
                }
            }
        }
        counts[letter] += 1;
        filled.insert((r, c), letter);
        fill(cells, idx + 1, mu, nu, counts, filled, total);
        filled.remove(&(r, c));
        counts[letter] -= 1;
    }
}

/// `gamma_mu = Ind(chi_mu x chi_mu)` from `S_w x S_w` to `S_{2w}`, expanded
/// into irreducibles: the coefficient of `chi_lam` is `c_{mu,mu}^{lam}`.
pub fn gamma_mu_decomposition(mu: &Partition) -> LRDecomposition {
    let w = mu.size();
    let mut terms = BTreeMap::new();
    for lam in partitions_of(2 * w) {
        let c = lr_coefficient(mu, mu, &lam);
        if c > 0 {
            terms.insert(lam, c);
        }
    }
    LRDecomposition {
        source: vec![mu.clone(), mu.clone()],
        terms,
    }
}

/// Doubled partition `(2 mu_1, ..., 2 mu_r)`.
pub fn doubled(mu: &Partition) -> Partition {
    Partition::from_unsorted(mu.parts().iter().map(|&p| 2 * p).collect())
}

/// The matrix `P = (c_{mu,mu}^{nu~})` over partitions of `w`, indexed in
/// increasing lexicographic order (so `(1^w)` labels the first row and
/// column). With this indexing the matrix is lower triangular with unit
/// diagonal; the returned flag asserts exactly that. Re-indexed by the
/// crate-wide descending order the same matrix is upper triangular.
pub fn triangular_p(w: usize) -> (IntegerMatrix, bool) {
    let mut parts = partitions_of(w);
    parts.reverse(); // increasing lexicographic
    let k = parts.len();
    let mut m = IntegerMatrix::zeros(k, k);
    for (i, mu) in parts.iter().enumerate() {
        for (j, nu) in parts.iter().enumerate() {
            let c = lr_coefficient(mu, mu, &doubled(nu));
            m.set(i, j, BigInt::from(c));
        }
    }
    let mut unitriangular = true;
    for i in 0..k {
        if *m.get(i, i) != BigInt::one() {
            unitriangular = false;
        }
        for j in i + 1..k {
            if !m.get(i, j).is_zero() {
                unitriangular = false;
            }
        }
    }
    (m, unitriangular)
}

/// Value at class `pi` of the character induced from a Young subgroup,
/// `Ind(chi_{c_1} x ... x chi_{c_l})`, by the centralizer-weighted sum over
/// all splittings of the multiset of parts of `pi`.
pub fn induced_young_value(components: &[Partition], pi: &Partition) -> Result<BigInt> {
    let total: usize = components.iter().map(Partition::size).sum();
    if total != pi.size() {
        return Err(Error::SizeMismatch {
            expected: total,
            actual: pi.size(),
        });
    }
    let nonempty: Vec<&Partition> = components.iter().filter(|c| !c.is_empty()).collect();
    if nonempty.is_empty() {
        return Ok(BigInt::one()); // pi empty too
    }

    let groups: Vec<(usize, usize)> = pi.multiplicities().into_iter().collect();
    let mut assignment: Vec<Vec<usize>> = vec![Vec::new(); nonempty.len()];
    let mut remaining: Vec<usize> = nonempty.iter().map(|c| c.size()).collect();
    let mut sum = BigRational::zero();
    split_parts(
        &groups,
        0,
        &nonempty,
        &mut assignment,
        &mut remaining,
        &mut sum,
    )?;
    let weighted = sum * BigRational::from(pi.centralizer_order());
    assert!(weighted.is_integer(), "induced value must be integral");
    Ok(weighted.to_integer())
}

fn split_parts(
    groups: &[(usize, usize)],
    g: usize,
    components: &[&Partition],
    assignment: &mut [Vec<usize>],
    remaining: &mut [usize],
    sum: &mut BigRational,
) -> Result<()> {
    if g == groups.len() {
        // every component must be exactly filled
        if remaining.iter().any(|&r| r != 0) {
            return Ok(());
        }
        let mut term = BigRational::one();
        for (i, comp) in components.iter().enumerate() {
            let eta = Partition::from_unsorted(assignment[i].clone());
            let chi = symmetric::mn_value(comp, &eta)?;
            if chi.is_zero() {
                return Ok(());
            }
            term *= BigRational::new(chi, eta.centralizer_order());
        }
        *sum += term;
        return Ok(());
    }
    let (part, mult) = groups[g];
    distribute(
        part, mult, 0, groups, g, components, assignment, remaining, sum,
    )
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    part: usize,
    left: usize,
    comp_idx: usize,
    groups: &[(usize, usize)],
    g: usize,
    components: &[&Partition],
    assignment: &mut [Vec<usize>],
    remaining: &mut [usize],
    sum: &mut BigRational,
) -> Result<()> {
    if comp_idx == components.len() {
        if left == 0 {
            return split_parts(groups, g + 1, components, assignment, remaining, sum);
        }
        return Ok(());
    }
    let max_here = (remaining[comp_idx] / part).min(left);
    for take in 0..=max_here {
        for _ in 0..take {
            assignment[comp_idx].push(part);
        }
        remaining[comp_idx] -= take * part;
        distribute(
            part,
            left - take,
            comp_idx + 1,
            groups,
            g,
            components,
            assignment,
            remaining,
            sum,
        )?;
        remaining[comp_idx] += take * part;
        for _ in 0..take {
            assignment[comp_idx].pop();
        }
    }
    Ok(())
}

/// Left-fold of pairwise LR products: the decomposition of the character
/// induced from a Young subgroup with the given components.
pub fn iterated_lr_decomposition(components: &[Partition]) -> LRDecomposition {
    let nonempty: Vec<&Partition> = components.iter().filter(|c| !c.is_empty()).collect();
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    if let Some(first) = nonempty.first() {
        current.insert((*first).clone(), 1);
    } else {
        current.insert(Partition::empty(), 1);
    }
    for comp in nonempty.iter().skip(1) {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (sigma, mult) in &current {
            for lam in partitions_of(sigma.size() + comp.size()) {
                let c = lr_coefficient(sigma, comp, &lam);
                if c > 0 {
                    *next.entry(lam).or_insert(0) += mult * c;
                }
            }
        }
        current = next;
    }
    LRDecomposition {
        source: components.to_vec(),
        terms: current,
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut v = BigInt::one();
    for i in 0..k.min(n - k) {
        v = v * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    v
}
