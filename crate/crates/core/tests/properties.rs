//! Property tests for the algebraic invariants that hold on all inputs, not
//! just the worked examples.

use proptest::prelude::*;

use vq_core::combinatorics::{
    discriminant, floor_via_formula, vandermonde_det, vandermonde_power_matrix, vandermonde_solve,
};
use vq_core::laughlin::{vandermonde_power_expand, vandermonde_product_eval};
use vq_core::qseries::QSeries;
use vq_core::rational::{rat, rint, Rational};
use vq_core::rmatrix::RationalMatrix;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(((0i64..=16, 1i64..=2), (-5i64..=5, 1i64..=4)), 1..6).prop_map(|terms| {
        QSeries::from_terms(
            terms
                .into_iter()
                .map(|((en, ed), (cn, cd))| (rat(en, ed), rat(cn, cd))),
            Some(rint(10)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qseries_ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert!(a.mul(&b).eq_to_shared_order(&b.mul(&a)));
        prop_assert!(a.add(&b).eq_to_shared_order(&b.add(&a)));
        prop_assert!(a.mul(&b).mul(&c).eq_to_shared_order(&a.mul(&b.mul(&c))));
        prop_assert!(a.mul(&b.add(&c)).eq_to_shared_order(&a.mul(&b).add(&a.mul(&c))));
    }

    #[test]
    fn qderiv_is_a_derivation(a in series(), b in series()) {
        let lhs = a.mul(&b).qderiv();
        let rhs = a.qderiv().mul(&b).add(&a.mul(&b.qderiv()));
        prop_assert!(lhs.eq_to_shared_order(&rhs));
    }

    #[test]
    fn discriminant_sign_rule(xs in prop::collection::vec(rational(), 2..=7)) {
        let n = xs.len();
        let delta = vandermonde_det(&xs);
        let sign = if (n * (n - 1) / 2) % 2 == 0 { rint(1) } else { rint(-1) };
        prop_assert_eq!(discriminant(&xs), sign * &delta * &delta);
    }

    #[test]
    fn vandermonde_product_equals_matrix_det(xs in prop::collection::vec(rational(), 2..=6)) {
        prop_assert_eq!(vandermonde_det(&xs), vandermonde_power_matrix(&xs).det().unwrap());
    }

    #[test]
    fn vandermonde_solve_reconstructs(xs in prop::collection::vec(-8i64..=8, 2..=5), b in prop::collection::vec(rational(), 5)) {
        let mut points: Vec<Rational> = Vec::new();
        for x in &xs {
            let r = rint(*x);
            if !points.contains(&r) {
                points.push(r);
            }
        }
        prop_assume!(points.len() >= 2);
        let rhs = &b[..points.len()];
        let coeffs = vandermonde_solve(&points, rhs).unwrap();
        // the polynomial interpolates every node exactly
        for (x, want) in points.iter().zip(rhs) {
            let mut acc = Rational::from_integer(0.into());
            let mut pw = rint(1);
            for c in &coeffs {
                acc += c * &pw;
                pw *= x;
            }
            prop_assert_eq!(&acc, want);
        }
    }

    #[test]
    fn floor_formula_matches(n in 0u64..=300, k in 2u32..=9) {
        prop_assert_eq!(floor_via_formula(n, k).unwrap(), (n / k as u64) as i64);
    }

    #[test]
    fn alternant_expansion_antisymmetric(
        seed in prop::collection::vec(rational(), 3),
        swap in 0usize..3,
    ) {
        let e = vandermonde_power_expand(3, 3).unwrap();
        let pts = seed;
        let mut swapped = pts.clone();
        let other = (swap + 1) % 3;
        swapped.swap(swap, other);
        let v = e.eval(&pts).unwrap();
        let w = e.eval(&swapped).unwrap();
        prop_assert_eq!(v, -w);
    }

    #[test]
    fn alternant_eval_equals_product(pts in prop::collection::vec(rational(), 3)) {
        let e = vandermonde_power_expand(3, 3).unwrap();
        prop_assert_eq!(e.eval(&pts).unwrap(), vandermonde_product_eval(&pts, 3));
    }

    #[test]
    fn rmatrix_inverse_roundtrip(entries in prop::collection::vec(rational(), 9)) {
        let m = RationalMatrix::new(3, 3, entries).unwrap();
        prop_assume!(m.det().unwrap() != rint(0));
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
    }
}
