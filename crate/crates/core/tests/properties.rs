//! Property tests for the combinatorial kernel and the exact linear
//! algebra, plus agreement with the reference implementations in the
//! oracle module.

mod oracle;

use charbasis::lattice::{
    determinant, hnf, in_row_lattice, is_unimodular, lattice_equal, IntegerMatrix,
};
use charbasis::partition::{from_core_and_quotient, two_core_and_quotient, Partition};
use charbasis::quad::QuadValue;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn partition_strategy(max_total: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 0..=6).prop_map(move |mut parts| {
        // trim to the budget, then canonicalize
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_total
        });
        Partition::from_unsorted(parts)
    })
}

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c..=c), r..=r).prop_map(|rows| {
            IntegerMatrix::from_rows(
                rows.into_iter()
                    .map(|row| row.into_iter().map(BigInt::from).collect())
                    .collect(),
            )
        })
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition_strategy(24)) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.size(), lam.size());
        prop_assert_eq!(conj.conjugate(), lam);
    }

    #[test]
    fn quotient_tower_round_trips(lam in partition_strategy(24)) {
        let data = two_core_and_quotient(&lam);
        prop_assert_eq!(lam.size(), data.core.size() + 2 * data.weight);
        prop_assert_eq!(data.weight, data.quotient.0.size() + data.quotient.1.size());
        let back = from_core_and_quotient(&data.core, &data.quotient).unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn quotient_conjugation_contract(lam in partition_strategy(24)) {
        let q = two_core_and_quotient(&lam).quotient;
        let qc = two_core_and_quotient(&lam.conjugate()).quotient;
        prop_assert_eq!(qc.0, q.1.conjugate());
        prop_assert_eq!(qc.1, q.0.conjugate());
    }

    #[test]
    fn hnf_is_idempotent_and_matches_reference(m in matrix_strategy(5)) {
        let h = hnf(&m);
        prop_assert_eq!(hnf(&h), h.clone());
        prop_assert_eq!(h, oracle::hnf_reference(&m));
    }

    #[test]
    fn row_operations_preserve_the_lattice(
        m in matrix_strategy(4),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
    ) {
        let mut transformed: Vec<Vec<BigInt>> =
            (0..m.n_rows()).map(|r| m.row(r).to_vec()).collect();
        for (a, b, k) in ops {
            let (a, b) = (a % m.n_rows(), b % m.n_rows());
            if a != b {
                // add k times row b to row a: determinant-1 operation
                for c in 0..m.n_cols() {
                    let add = BigInt::from(k) * &transformed[b][c];
                    transformed[a][c] += add;
                }
            }
        }
        let t = IntegerMatrix::from_rows(transformed);
        prop_assert!(lattice_equal(&m, &t));
    }

    #[test]
    fn membership_matches_back_substitution(
        m in matrix_strategy(4),
        coeffs in prop::collection::vec(-3i64..=3, 4),
        probe in prop::collection::vec(-4i64..=4, 4),
    ) {
        // a known combination of the rows is always a member
        let mut v = vec![BigInt::zero(); m.n_cols()];
        for (r, &k) in coeffs.iter().take(m.n_rows()).enumerate() {
            for c in 0..m.n_cols() {
                v[c] += BigInt::from(k) * m.get(r, c);
            }
        }
        prop_assert!(in_row_lattice(&m, &v));
        prop_assert!(oracle::hnf_solve_membership(&hnf(&m), &v));

        // arbitrary probes: the two membership routes agree
        let probe: Vec<BigInt> = probe.into_iter().take(m.n_cols()).map(BigInt::from).collect();
        if probe.len() == m.n_cols() {
            prop_assert_eq!(
                in_row_lattice(&m, &probe),
                oracle::hnf_solve_membership(&hnf(&m), &probe)
            );
        }
    }

    #[test]
    fn unimodularity_routes_agree(m in matrix_strategy(4)) {
        if m.n_rows() == m.n_cols() {
            let via_hnf = is_unimodular(&m);
            let via_det = determinant(&m).abs() == BigInt::one();
            prop_assert_eq!(via_hnf, via_det);
        }
    }

    #[test]
    fn quad_value_json_round_trip(a in -50i64..=50, b in -50i64..=50, d in -30i64..=30) {
        if d != 0 {
            let v = QuadValue::new(BigInt::from(a), BigInt::from(b), d).unwrap();
            let json = serde_json::to_string(&v).unwrap();
            let back: QuadValue = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, v);
        }
    }

    #[test]
    fn quad_norm_is_rational_and_nonnegative(a in -20i64..=20, b in -20i64..=20, d in -20i64..=-1) {
        // for negative radicands, v * conj(v) is a nonnegative rational
        let v = QuadValue::new(BigInt::from(a), BigInt::from(b), d).unwrap();
        let (rational, _, surd) = v.mul_conj_parts(&v).unwrap();
        prop_assert!(surd.is_zero());
        prop_assert!(rational >= num_rational::BigRational::zero());
    }
}

#[test]
fn unimodular_tower_to_size_thirty() {
    // structured unimodular matrices up to 30x30: all three routes agree
    for size in [2usize, 5, 12, 21, 30] {
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            rows[i][i] = BigInt::one();
            if i + 1 < size {
                rows[i][i + 1] = BigInt::from((i as i64 % 5) - 2);
            }
            if i >= 2 {
                rows[i][i - 2] = BigInt::from(i as i64 % 3);
            }
        }
        // triangular-ish with unit diagonal is not guaranteed unimodular
        // once the subdiagonal entries land, so test the determinant first
        let m = IntegerMatrix::from_rows(rows);
        let det = determinant(&m).abs();
        assert_eq!(is_unimodular(&m), det == BigInt::one(), "size {size}");
        assert_eq!(
            hnf(&m) == IntegerMatrix::identity(size),
            det == BigInt::one(),
            "size {size}"
        );
    }

    // and a guaranteed-unimodular product of shears at size 30
    let size = 30;
    let mut m = IntegerMatrix::identity(size);
    let mut rows: Vec<Vec<BigInt>> = (0..size).map(|r| m.row(r).to_vec()).collect();
    for step in 0..60usize {
        let a = (7 * step + 3) % size;
        let b = (11 * step + 1) % size;
        if a != b {
            let k = BigInt::from((step % 7) as i64 - 3);
            for c in 0..size {
                let add = &k * &rows[b][c];
                rows[a][c] += add;
            }
        }
    }
    m = IntegerMatrix::from_rows(rows);
    assert!(is_unimodular(&m));
    assert_eq!(determinant(&m).abs(), BigInt::one());
    assert_eq!(hnf(&m), IntegerMatrix::identity(size));
}
