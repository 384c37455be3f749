//! Exact integer linear algebra: Hermite normal form, row-lattice
//! comparison, unimodularity, and the column-splitting map that turns
//! quadratic-valued character vectors into integer matrices.
//!
//! The HNF here is row-style: pivots move strictly right and down, pivots
//! are positive, entries above a pivot are reduced into `[0, pivot)`. Two
//! matrices span the same row lattice over Z exactly when their HNFs agree
//! after dropping zero rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadValue;

/// Dense matrix over Z with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == n_cols),
            "ragged row lengths"
        );
        IntegerMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(Zero::is_zero)
    }

    /// Appends the rows of `other`; column counts must agree.
    pub fn stack(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntegerMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    /// `row[dst] -= q * row[src]`
    fn submul_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let sub = q * &self.data[src * self.cols + c];
            self.data[dst * self.cols + c] -= sub;
        }
    }
}

impl std::fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Canonical row-style Hermite normal form of the row lattice. Zero rows
/// sink to the bottom; the row lattice is preserved throughout (all
/// operations are unimodular row operations).
pub fn hnf(m: &IntegerMatrix) -> IntegerMatrix {
    let mut a = m.clone();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        // Euclid on the rows below pivot_row until one nonzero entry remains.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..a.rows {
                if !a.get(r, col).is_zero() {
                    best = match best {
                        Some(b) if a.get(b, col).abs() <= a.get(r, col).abs() => Some(b),
                        _ => Some(r),
                    };
                }
            }
            let Some(best) = best else { break };
            a.swap_rows(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..a.rows {
                if !a.get(r, col).is_zero() {
                    let q = a.get(r, col).div_floor(a.get(pivot_row, col));
                    a.submul_row(r, pivot_row, &q);
                    if !a.get(r, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a.get(pivot_row, col).is_zero() {
            continue;
        }
        if a.get(pivot_row, col).is_negative() {
            a.negate_row(pivot_row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for r in 0..pivot_row {
            let q = a.get(r, col).div_floor(a.get(pivot_row, col));
            a.submul_row(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    a
}

fn nonzero_rows(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    (0..m.n_rows())
        .filter(|&r| !m.is_zero_row(r))
        .map(|r| m.row(r).to_vec())
        .collect()
}

/// True when the two row lattices coincide. Column counts must agree.
pub fn lattice_equal(a: &IntegerMatrix, b: &IntegerMatrix) -> bool {
    assert_eq!(a.n_cols(), b.n_cols(), "column count mismatch");
    nonzero_rows(&hnf(a)) == nonzero_rows(&hnf(b))
}

/// Rank of the row lattice (number of nonzero HNF rows).
pub fn lattice_rank(m: &IntegerMatrix) -> usize {
    let h = hnf(m);
    (0..h.n_rows()).filter(|&r| !h.is_zero_row(r)).count()
}

/// Membership of a single vector in the row lattice of `basis`.
pub fn in_row_lattice(basis: &IntegerMatrix, v: &[BigInt]) -> bool {
    assert_eq!(basis.n_cols(), v.len(), "column count mismatch");
    let extended = basis.stack(&IntegerMatrix::from_rows(vec![v.to_vec()]));
    lattice_equal(basis, &extended)
}

/// Square matrix with `|det| = 1`, checked via HNF = identity.
pub fn is_unimodular(m: &IntegerMatrix) -> bool {
    m.n_rows() == m.n_cols() && hnf(m) == IntegerMatrix::identity(m.n_rows())
}

/// Fraction-free determinant (Bareiss).
pub fn determinant(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.n_rows(), m.n_cols(), "determinant of non-square matrix");
    let n = m.n_rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Turns rows of quadratic values into an integer matrix.
///
/// Every value is scaled by 2 (one uniform scaling for all rows). A column
/// whose entries are all rational contributes one integer column; a column
/// with a nontrivial radicand contributes two (rational parts, then surd
/// coefficients). Entries within one column must share a single radicand.
/// Row-lattice comparisons between outputs are invariant under the shared
/// scaling.
pub fn rationalize_columns(rows: &[Vec<QuadValue>]) -> Result<IntegerMatrix> {
    if rows.is_empty() {
        return Ok(IntegerMatrix::zeros(0, 0));
    }
    let width = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == width), "ragged row lengths");

    // One radicand per column, or rational throughout.
    let mut column_delta = vec![1i64; width];
    for row in rows {
        for (c, v) in row.iter().enumerate() {
            if !v.is_rational() {
                if column_delta[c] == 1 {
                    column_delta[c] = v.delta();
                } else if column_delta[c] != v.delta() {
                    return Err(Error::IncompatibleRadicands(column_delta[c], v.delta()));
                }
            }
        }
    }

    let mut out_rows = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::new();
        for (c, v) in row.iter().enumerate() {
            // scaled by 2: value*2 = a + b*sqrt(delta)
            out.push(v.numerator_a().clone());
            if column_delta[c] != 1 {
                out.push(v.numerator_b().clone());
            }
        }
        out_rows.push(out);
    }
    Ok(IntegerMatrix::from_rows(out_rows))
}
