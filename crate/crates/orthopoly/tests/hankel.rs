use lozenge_arith::{bernoulli_number, int, rat, Rational};
use lozenge_detkit::{det_exact, hankel_det, Matrix};
use lozenge_orthopoly::*;
use num_traits::Zero;
use proptest::prelude::*;

fn bridge(n: usize) -> Rational {
    if (n * n.saturating_sub(1) / 2) % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

#[test]
fn product_formula_matches_elimination() {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    for n in 1..=5 {
                        let direct = hankel_bernoulli_direct(a, b, c, d, n).unwrap();
                        let closed = hankel_bernoulli_closed(a, b, c, d, n).unwrap();
                        assert_eq!(direct, closed, "({a},{b},{c},{d}) n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn product_formula_n6_sample() {
    for (a, b, c, d) in [(1, 1, 1, 1), (2, 1, 0, 3), (3, 3, 2, 1)] {
        assert_eq!(hankel_bernoulli_direct(a, b, c, d, 6).unwrap(), hankel_bernoulli_closed(a, b, c, d, 6).unwrap());
    }
}

#[test]
fn plain_bernoulli_hankel_oracle() {
    // (1,1,1,1) has entries B_{i+j}, (1,1,0,0) has B_{i+j−2}
    for n in 1..=6 {
        let m = Matrix::from_fn(n, n, |i, j| bernoulli_number(i + j));
        assert_eq!(det_exact(&m).unwrap(), hankel_bernoulli_closed(1, 1, 1, 1, n).unwrap());
        let m = Matrix::from_fn(n, n, |i, j| bernoulli_number(i + j - 2));
        assert_eq!(det_exact(&m).unwrap(), hankel_bernoulli_closed(1, 1, 0, 0, n).unwrap());
    }
}

#[test]
fn moment_hankel_differs_by_bridge_sign() {
    for (a, b, c, d) in [(1, 1, 1, 1), (2, 2, 1, 1), (1, 2, 2, 2), (2, 2, 0, 1)] {
        let mu = ChahnMoments::new(&HahnParams::ints(a, b, c, d)).unwrap();
        for n in 1..=5 {
            let h = hankel_det(&mu, n, 0);
            assert!(h.is_real());
            assert_eq!(h.re, bridge(n) * hankel_bernoulli_closed(a, b, c, d, n).unwrap());
        }
    }
}

#[test]
fn extra_closed_matches_direct() {
    for n in 1..=8 {
        assert_eq!(extra_bernoulli_direct(n), extra_bernoulli_closed(n), "n={n}");
    }
    assert_eq!(extra_bernoulli_closed(1), rat(13, 6));
}

#[test]
fn extra_decomposition() {
    for n in 1..=5 {
        let dec = ExtraDecomposition::compute(n);
        for (name, ok) in dec.checks() {
            assert!(ok, "{name} at n={n}");
        }
    }
    let one = ExtraDecomposition::compute(1);
    assert_eq!(one.delta, rat(1, 6));
    assert_eq!(one.delta_11, int(1));
    assert_eq!(one.delta_1212, Rational::zero());
}

#[test]
fn c0_is_constant_term() {
    for n in 0..=10 {
        assert_eq!(c_polynomial(n).coeff(0), c0_closed(n), "n={n}");
    }
}

#[test]
fn weird_identity_and_its_two_halves() {
    for n in 0..=30 {
        assert_eq!(lemma_weird_lhs(n), lemma_weird_rhs(n), "n={n}");
        assert_eq!(weird_first_line(n), simplesum_closed(n), "n={n}");
        assert_eq!(weird_second_line(n), doublesum_closed(n), "n={n}");
    }
}

#[test]
fn bernoulli_polynomial_hankel_closed_forms() {
    for x in [int(-1), rat(-1, 2), rat(1, 2)] {
        for n in 1..=6 {
            assert_eq!(bernoulli_poly_hankel(n, &x), bernoulli_poly_hankel_closed(n, &x).unwrap(), "N={n} x={x}");
        }
    }
}

#[test]
fn bernoulli_polynomial_at_minus_one_is_extra() {
    for n in 1..=6 {
        assert_eq!(bernoulli_poly_hankel(n, &int(-1)), extra_bernoulli_direct(n));
    }
}

#[test]
fn conjecture_residual_c2_d2() {
    let rep = conjecture_explore(ConjectureFamily::Polynomial { c: 2, d: 2 }, 7).unwrap();
    assert_eq!(rep.bound_holds, Some(true));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn product_formula_random(a in 1i64..=4, b in 1i64..=4, c in 0i64..=4, d in 0i64..=4, n in 1usize..=4) {
        prop_assert_eq!(hankel_bernoulli_direct(a, b, c, d, n).unwrap(), hankel_bernoulli_closed(a, b, c, d, n).unwrap());
    }

    #[test]
    fn product_formula_symmetric(a in 1i64..=4, b in 1i64..=4, c in 0i64..=4, d in 0i64..=4, n in 1usize..=5) {
        // (a,b) and (c,d) enter symmetrically
        let v = hankel_bernoulli_closed(a, b, c, d, n).unwrap();
        prop_assert_eq!(&v, &hankel_bernoulli_closed(b, a, c, d, n).unwrap());
        prop_assert_eq!(&v, &hankel_bernoulli_closed(a, b, d, c, n).unwrap());
    }
}
