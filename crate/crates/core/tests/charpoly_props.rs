mod common;

use common::{gauss, left_matrix, random_int, sig, Mv};
use gasylv_core::charpoly::{
    adjugate, char_poly, closed_form_adjugate, closed_form_det, determinant, generalized_coeffs,
    inverse, ExplicitFactors, N4Variant,
};
use gasylv_core::{Error, Multivector, Rational, Scalar, Signature};
use num_traits::{Pow, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(max_n: usize, bound: i64) -> impl Strategy<Value = Mv> {
    (1..=max_n)
        .prop_flat_map(|n| (0..=n).prop_map(move |p| sig(p, n - p)))
        .prop_flat_map(move |s| {
            proptest::collection::vec(-bound..=bound, s.blade_count()).prop_map(move |cs| {
                Mv::from_coeffs(s, cs.into_iter().map(Rational::from_i64).collect()).unwrap()
            })
        })
}

fn poly_at(b: &Mv, poly: &[Rational]) -> Mv {
    // Horner with multivector argument.
    let mut acc = Mv::zero(b.sig());
    for c in poly {
        acc = (&acc * b).add_scalar(c);
    }
    acc
}

#[test]
fn cayley_hamilton_up_to_n6() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=6 {
        for s in Signature::all_with_dim(n) {
            for _ in 0..3 {
                let b: Mv = random_int(&mut rng, s, 5);
                let cp = char_poly(&b).unwrap();
                assert_eq!(cp.degree(), s.matrix_size());
                assert!(poly_at(&b, &cp.polynomial()).is_zero(), "{s}");
            }
        }
    }
}

#[test]
fn determinant_matches_left_regular_representation() {
    // det(X ↦ BX) = Det(B)^(2^n / N).
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=4 {
        for s in Signature::all_with_dim(n) {
            for _ in 0..4 {
                let b: Mv = random_int(&mut rng, s, 4);
                let (det_l, _) = gauss(left_matrix(&b), None);
                let power = (s.blade_count() / s.matrix_size()) as u32;
                let det = determinant(&b).unwrap();
                assert_eq!(det_l, Pow::pow(&det, power), "{s}");
            }
        }
    }
}

#[test]
fn explicit_n4_factors_reproduce_the_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for s in Signature::all_with_dim(4) {
        for _ in 0..10 {
            let b: Mv = random_int(&mut rng, s, 9);
            let cp = char_poly(&b).unwrap();
            for variant in [N4Variant::Natural, N4Variant::Sharp] {
                let got = ExplicitFactors::new(&b, variant).coeffs(&b);
                for (k, c) in got.iter().enumerate() {
                    assert_eq!(
                        c,
                        &Mv::scalar(s, cp.coeff(k + 1)),
                        "{s} {variant:?} b({})",
                        k + 1
                    );
                }
            }
        }
    }
}

#[test]
fn closed_adjugates_are_adjugates() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for n in 1..=5 {
        for s in Signature::all_with_dim(n) {
            let b: Mv = random_int(&mut rng, s, 9);
            let adj = adjugate(&b).unwrap();
            assert_eq!(
                closed_form_adjugate(&b, N4Variant::Natural).unwrap(),
                adj,
                "{s}"
            );
            assert_eq!(
                closed_form_adjugate(&b, N4Variant::Sharp).unwrap(),
                adj,
                "{s}"
            );
        }
    }
}

#[test]
fn generalized_coefficients_are_central_and_annihilate() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for n in [1, 3, 5, 7] {
        for s in Signature::all_with_dim(n).filter(|s| n < 7 || s.p() == 4) {
            let b: Mv = random_int(&mut rng, s, 5);
            let g = generalized_coeffs(&b).unwrap();
            assert_eq!(g.len(), s.matrix_size() / 2);
            let mut acc = Mv::zero(s);
            for k in 0..=g.len() {
                let c = g.coeff(k);
                assert!(c.is_central(), "{s} b'({k})");
                // φ'_B(B) = -Σ b'(k) B^(len-k) with b'(0) = -e.
                acc = &(&acc * &b) - &c;
            }
            assert!(acc.is_zero(), "{s}");
            let adj = g.shifted_iterate(g.len() - 1);
            let prod = &b * &adj;
            assert_eq!(prod, g.coeff(g.len()), "{s}");
        }
    }
}

#[test]
fn float_recursion_tracks_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in [sig(1, 3), sig(3, 0), sig(2, 3)] {
        let b: Mv = random_int(&mut rng, s, 5);
        let bf =
            Multivector::<f64>::from_coeffs(s, b.coeffs().iter().map(Scalar::to_f64).collect())
                .unwrap();
        let exact = determinant(&b).unwrap().to_f64();
        let float = determinant(&bf).unwrap();
        assert!(
            (exact - float).abs() <= 1e-9 * exact.abs().max(1.0),
            "{s}: {exact} vs {float}"
        );
    }
}

#[test]
fn singular_elements_have_no_inverse() {
    for s in [sig(1, 0), sig(1, 3), sig(4, 1)] {
        let b = &Mv::one(s) + &Mv::generator(s, 1).unwrap();
        assert!(determinant(&b).unwrap().is_zero());
        assert!(matches!(inverse(&b), Err(Error::SingularElement { .. })));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_det_equals_recursive_det(b in element(5, 9)) {
        prop_assert_eq!(closed_form_det(&b).unwrap(), determinant(&b).unwrap());
    }

    #[test]
    fn adjugate_identity(b in element(6, 4)) {
        let cp = char_poly(&b).unwrap();
        let det = Mv::scalar(b.sig(), cp.determinant());
        prop_assert_eq!(&b * &cp.adjugate(), det.clone());
        prop_assert_eq!(&cp.adjugate() * &b, det);
    }

    #[test]
    fn inverse_round_trip(b in element(6, 4)) {
        let det = determinant(&b).unwrap();
        prop_assume!(!det.is_zero());
        let inv = inverse(&b).unwrap();
        prop_assert_eq!(&inv * &b, Mv::one(b.sig()));
        prop_assert_eq!(&b * &inv, Mv::one(b.sig()));
    }

    #[test]
    fn determinant_is_multiplicative(
        (u, v) in element(4, 3).prop_flat_map(|u| {
            let s = u.sig();
            (Just(u), proptest::collection::vec(-3i64..=3, s.blade_count()))
        })
    ) {
        let v = Mv::from_coeffs(u.sig(), v.into_iter().map(Rational::from_i64).collect()).unwrap();
        let lhs = determinant(&(&u * &v)).unwrap();
        prop_assert_eq!(lhs, determinant(&u).unwrap() * determinant(&v).unwrap());
    }

    #[test]
    fn scalar_multiple_of_identity(lam in -20i64..=20, n in 1usize..=6) {
        let s = sig(n / 2, n - n / 2);
        let b = Mv::from_i64(s, lam);
        let det = determinant(&b).unwrap();
        prop_assert_eq!(det, Pow::pow(&Rational::from_i64(lam), s.matrix_size() as u32));
    }
}
