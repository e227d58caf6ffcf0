use lozenge_arith::{int, rat, GaussianRational, Poly, Rational};
use lozenge_detkit::{hankel_det, MomentSequence};
use lozenge_orthopoly::*;
use num_traits::Zero;
use proptest::prelude::*;

const FAMILIES: [(i64, i64, i64, i64); 4] = [(1, 1, 1, 1), (2, 2, 1, 1), (1, 2, 2, 2), (2, 2, 0, 1)];

#[test]
fn hahn_recurrence_and_symmetry() {
    for (a, b, c, d) in FAMILIES {
        let p = HahnParams::ints(a, b, c, d);
        assert!(chahn_recurrence_holds(&p, 6).unwrap(), "{p}");
        assert!(chahn_symmetry_holds(&p, 6).unwrap(), "{p}");
    }
}

#[test]
fn hahn_polynomials_are_orthogonal_for_their_moments() {
    for (a, b, c, d) in FAMILIES {
        let p = HahnParams::ints(a, b, c, d);
        let mu = ChahnMoments::new(&p).unwrap();
        for n in 0..=4 {
            assert_eq!(orth_poly_from_moments(&mu, n).unwrap(), chahn_poly(&p, n).unwrap(), "{p} n={n}");
        }
    }
}

#[test]
fn jfraction_matches_hahn_coefficients() {
    for (a, b, c, d) in FAMILIES {
        let p = HahnParams::ints(a, b, c, d);
        let mu = ChahnMoments::new(&p).unwrap();
        let jf = jfraction_from_moments(&mu, 5).unwrap();
        for n in 0..5 {
            let (an, bn) = chahn_recurrence_coeffs(&p, n).unwrap();
            assert_eq!(jf.a[n], -an, "{p} a_{n}");
            if n >= 1 {
                assert_eq!(jf.b_n(n).unwrap(), &bn, "{p} b_{n}");
                assert_eq!(chahn_b_displayed(&p, n).unwrap(), -bn);
            }
        }
    }
}

#[test]
fn first_coefficients_at_ones() {
    let p = HahnParams::ints(1, 1, 1, 1);
    let mu = ChahnMoments::new(&p).unwrap();
    let jf = jfraction_from_moments(&mu, 2).unwrap();
    assert_eq!(jf.mu0, GaussianRational::real(rat(1, 6)));
    assert_eq!(jf.b_n(1).unwrap(), &GaussianRational::real(rat(1, 5)));
    assert_eq!(hankel_det(&mu, 2, 0), GaussianRational::real(rat(1, 180)));
}

#[test]
fn jfraction_hankel_and_series() {
    for (a, b, c, d) in FAMILIES {
        let mu = ChahnMoments::new(&HahnParams::ints(a, b, c, d)).unwrap();
        let jf = jfraction_from_moments(&mu, 6).unwrap();
        for n in 0..=5 {
            assert_eq!(hankel_via_jfraction(&jf, n).unwrap(), hankel_det(&mu, n, 0));
        }
        let s = jf.series(12);
        for (k, v) in s.iter().enumerate() {
            assert_eq!(*v, mu.moment(k), "k={k}");
        }
    }
}

#[test]
fn favard_round_trip() {
    for (a, b, c, d) in FAMILIES {
        let mu = ChahnMoments::new(&HahnParams::ints(a, b, c, d)).unwrap();
        let jf = jfraction_from_moments(&mu, 5).unwrap();
        let ps = jf.polynomials(5).unwrap();
        for (n, pn) in ps.iter().enumerate() {
            assert_eq!(*pn, orth_poly_from_moments(&mu, n).unwrap());
        }
    }
}

#[test]
fn singular_moments_are_reported() {
    let mu = |k: usize| if k % 2 == 0 { int(1) } else { int(0) };
    // μ = 1,0,1,0,…: det of order 2 is 1, order 3 vanishes
    assert!(orth_poly_from_moments(&mu, 2).is_ok());
    assert!(matches!(orth_poly_from_moments(&mu, 3), Err(OrthoError::SingularMomentMatrix { n: 3 })));
}

#[test]
fn lemma_configuration() {
    let mu = |k: usize| lambda(k + 2);
    assert!(leclerc_check(&mu, 2, 2, &int(0)));
}

fn poly_orthogonality(mu: &[Rational], p: &Poly<Rational>, k: usize) -> Rational {
    p.coeffs().iter().enumerate().map(|(j, c)| c * &mu[j + k]).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn leclerc_random(seq in prop::collection::vec(-4i64..=4, 16), l in 1usize..=3, m in 1usize..=3, xi in 0usize..3) {
        let mu: Vec<Rational> = seq.iter().map(|v| int(*v)).collect();
        let f = |k: usize| mu[k].clone();
        prop_assume!((1..=l + m).all(|k| !hankel_det(&f, k, 0).is_zero()));
        let x = [int(0), int(1), int(-2)][xi].clone();
        let (lhs, rhs) = leclerc_sides(&f, l, m, &x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_polynomial_is_orthogonal(seq in prop::collection::vec(-5i64..=5, 12), n in 1usize..=5) {
        let mu: Vec<Rational> = seq.iter().map(|v| int(*v)).collect();
        let f = |k: usize| mu[k].clone();
        let p = moment_determinant_poly(&f, n);
        for k in 0..n {
            prop_assert!(poly_orthogonality(&mu, &p, k).is_zero());
        }
        prop_assert_eq!(p.coeff(n), hankel_det(&f, n, 0));
    }
}
