use lozenge_arith::{int, pochhammer, rat, Rational};
use lozenge_hyper::float::{near_center_4f3, near_center_gap};
use lozenge_hyper::{
    chu_vandermonde_check, pfq_terminating, summe_closed, summe_from_recurrence, transform_checks, whipple_check,
    whipple_sides, wz_certificate_check, wz_sum, HypSeries, HyperError, Whipple,
};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

/// Direct double-loop evaluation, independent of the term-ratio recursion.
fn pfq_naive(up: &[Rational], lo: &[Rational], z: &Rational, k_max: u64) -> Rational {
    (0..=k_max)
        .map(|k| {
            let num: Rational = up.iter().map(|a| pochhammer(a, k)).product();
            let den: Rational = lo.iter().map(|b| pochhammer(b, k)).product::<Rational>() * pochhammer(&int(1), k);
            num / den * num_traits::Pow::pow(z, k as u32)
        })
        .sum()
}

proptest! {
    #[test]
    fn upper_and_lower_permutations(
        n in 0u64..6,
        ups in proptest::collection::vec(small_rational(), 2),
        lows in proptest::collection::vec((1i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q)), 2),
        z in small_rational(),
    ) {
        let mut up = ups.clone();
        up.push(-int(n as i64));
        let s1 = HypSeries::new(up.clone(), lows.clone(), z.clone());
        let mut up2 = up.clone();
        up2.rotate_left(1);
        let mut lo2 = lows.clone();
        lo2.reverse();
        let s2 = HypSeries::new(up2, lo2, z.clone());
        let v = pfq_terminating(&s1).unwrap();
        prop_assert_eq!(&v, &pfq_terminating(&s2).unwrap());
        let k = s1.termination_index().unwrap();
        prop_assert_eq!(v, pfq_naive(&up, &lows, &z, k));
    }

    #[test]
    fn chu_vandermonde_random(a in small_rational(), c in (1i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q)), n in 0u64..=4) {
        prop_assert!(chu_vandermonde_check(&a, &c, n).unwrap());
    }

    #[test]
    fn whipple_random(a in small_rational(), b in small_rational(), c in small_rational(),
                      d in small_rational(), e in small_rational(), n in 0u64..=4) {
        let w = Whipple { a, b, c, d, e, n };
        match whipple_sides(&w) {
            Ok((l, r)) => prop_assert_eq!(l, r),
            Err(HyperError::ZeroDenominatorBeforeTermination { .. } | HyperError::ZeroDenominator { .. }) => {
                prop_assume!(false)
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn transformation_random(a in small_rational(), c in small_rational(), n in 0u64..=4,
                             z in small_rational().prop_filter("z ≠ 0", |z| *z != int(0))) {
        match transform_checks(&a, &c, n, &z) {
            Ok(ok) => prop_assert!(ok),
            Err(_) => prop_assume!(false),
        }
    }
}

#[test]
fn seven_f_six_matches_the_near_center_sum() {
    for (n, m) in [(2u64, 2u64), (3, 1), (3, 4), (4, 2), (5, 5)] {
        let (ni, mi) = (n as i64, m as i64);
        let direct: Rational = (0..n)
            .map(|h| {
                let num = pochhammer(&int(2), h)
                    * pochhammer(&int(1 - ni), h)
                    * pochhammer(&(rat(3, 2) + int(ni)), h)
                    * pochhammer(&int(1 - ni - mi), h)
                    * pochhammer(&int(1 + ni + mi), h);
                let den = pochhammer(&int(1), h)
                    * pochhammer(&int(2 + ni), h)
                    * pochhammer(&(rat(3, 2) - int(ni)), h)
                    * pochhammer(&int(2 + ni + mi), h)
                    * pochhammer(&int(2 - ni - mi), h);
                num / den
            })
            .sum();
        let w = Whipple::near_center(n, m);
        assert_eq!(pfq_terminating(&w.seven_f_six()).unwrap(), direct);
        assert!(whipple_check(&w).unwrap());
        // (4n+2)/((n+1)(2n−1)) · S = (2n+1) · ₄F₃
        let lhs = int(4 * ni + 2) / int((ni + 1) * (2 * ni - 1)) * direct;
        assert_eq!(lhs, int(2 * ni + 1) * near_center_4f3(n, m));
    }
}

#[test]
fn wz_up_to_six() {
    assert!(wz_certificate_check(6));
    let regenerated = summe_from_recurrence(6);
    assert_eq!(regenerated[0], int(1));
    for (n, s) in (1..=6).zip(regenerated) {
        assert_eq!(s, summe_closed(n));
        assert_eq!(s, wz_sum(n));
    }
}

#[test]
fn near_center_series_approaches_arcsine_value() {
    let gaps: Vec<f64> = [10u64, 20, 40, 80, 160].iter().map(|&n| near_center_gap(n, n)).collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    // the approach is only O(1/n): about 1e-2 at n = 10
    assert!(gaps[0] < 2e-2);
    assert!(gaps[4] < 1e-3, "{gaps:?}");
}
