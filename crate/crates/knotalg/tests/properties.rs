//! Property tests for the structural invariants of the exact kernels:
//! Smith decompositions, saturation, and the S-normal form of Laurent
//! polynomials.

use knotalg::exact_linalg::{self, IntMatrix};
use knotalg::polyarith::{poly_s_equivalent, s_normalize, LaurentPolynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |entries| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(entries[i * c + j]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_decomposition_invariants(m in matrix_strategy(8, 20)) {
        let s = exact_linalg::smith_normal_form(&m);
        // U * M * V = D exactly
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        // unimodular transforms
        prop_assert!(s.u.det().abs().is_one());
        prop_assert!(s.v.det().abs().is_one());
        // diagonal with the divisor chain
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
        // rank over Q equals the count of nonzero invariant factors
        prop_assert_eq!(diag.iter().filter(|d| !d.is_zero()).count(), s.rank());
    }

    #[test]
    fn saturation_is_idempotent_with_free_quotient(m in matrix_strategy(5, 9)) {
        let n = m.rows();
        let s1 = exact_linalg::saturation(&m, n);
        let s2 = exact_linalg::saturation(&s1, n);
        // the two saturations span the same lattice
        prop_assert!(exact_linalg::solve(&s1, &s2).is_some());
        prop_assert!(exact_linalg::solve(&s2, &s1).is_some());
        // quotient by the saturation is torsion-free
        let q = exact_linalg::AbelianGroup::from_presentation(n, &s1);
        prop_assert!(q.torsion.is_empty());
    }

    #[test]
    fn s_normal_form_is_a_class_invariant(
        lo in -4i64..4,
        coeffs in prop::collection::vec(-9i64..=9, 0..6),
        shift in -5i64..5,
        flip in any::<bool>(),
    ) {
        let p = LaurentPolynomial::from_i64(lo, &coeffs);
        let mut q = p.shift(shift);
        if flip {
            q = q.neg();
        }
        // ±t^k multiples share one normal form
        prop_assert!(poly_s_equivalent(&p, &q));
        let n = s_normalize(&p);
        prop_assert_eq!(s_normalize(&n.clone()), n.clone());
        if !n.is_zero() {
            prop_assert_eq!(n.lowest_degree(), 0);
            prop_assert!(n.coefficient(0).is_positive());
        }
    }
}
