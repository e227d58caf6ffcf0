//! Named verification suites. Every check is deterministic: randomized
//! instances come from fixed seeds, and results are collected in input
//! order before anything is printed.

use lozenge_arith::{int, rat, superfactorial, BigInt, Rational};
use lozenge_detkit::{check_d_symmetry, eval_d, hankel_det};
use lozenge_hyper::float::{arcsin_identity_check, five_halves_relation_check, three_halves_relation_check};
use lozenge_hyper::{
    chu_vandermonde_check, summe_closed, summe_from_recurrence, transform_checks, whipple_sides, wz_certificate_check,
    Whipple,
};
use lozenge_oracle::{axis_profiles, count_dented_bruteforce, count_with_axis_rhombus, DEFAULT_BUDGET};
use lozenge_orthopoly::{
    bernoulli_poly_hankel, bernoulli_poly_hankel_closed, chahn_recurrence_holds, chahn_symmetry_holds,
    doublesum_closed, extra_bernoulli_closed, extra_bernoulli_direct, hankel_bernoulli_closed, hankel_bernoulli_direct,
    hankel_via_jfraction, jfraction_from_moments, lambda, leclerc_check, lemma_weird_lhs, lemma_weird_rhs,
    simplesum_closed, weird_first_line, weird_second_line, ChahnMoments, ExtraDecomposition, HahnParams,
};
use lozenge_par::Mode;
use lozenge_tiling::{
    arcsine_deviation, closed_form, count_dented_trapezoid, count_fixed_rhombus, macmahon, propp_closed_form,
    propp_via_theorem, verify_sum_identity, ClosedFormVariant, DentedTrapezoid, HexagonQuery, ProppVariant,
    SumIdentity,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::Check;

pub const SEED: u64 = 0x6c6f7a656e6765;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tilings,
    Determinants,
    Hankel,
    Orthopoly,
    Lemmas,
    Hyper,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Self::Tilings, Self::Determinants, Self::Hankel, Self::Orthopoly, Self::Lemmas, Self::Hyper];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tilings => "tilings",
            Self::Determinants => "determinants",
            Self::Hankel => "hankel",
            Self::Orthopoly => "orthopoly",
            Self::Lemmas => "lemmas",
            Self::Hyper => "hyper",
            Self::All => "all",
        }
    }
}

/// Runs a suite at its default sizes.
pub fn run_suite(suite: Suite, mode: Mode) -> Vec<Check> {
    match suite {
        Suite::Tilings => [
            oracle_equivalence(7, mode),
            theorem_suite(4, mode),
            propp_suite(5),
            dented_suite(6, mode),
            arcsine_suite(mode),
        ]
        .concat(),
        Suite::Determinants => [detklein_suite(6, mode), symmetry_suite(4, 5, mode)].concat(),
        Suite::Hankel => {
            [hankel_bernoulli_suite(6, mode), extra_bernoulli_suite(8, 5, mode), bernoulli_poly_suite(6, mode)].concat()
        }
        Suite::Orthopoly => orthopoly_suite(6, 5, 20, mode),
        Suite::Lemmas => [weird_suite(30, mode), sum_identity_suite(12)].concat(),
        Suite::Hyper => [hypergeometric_suite(10, 4), wz_suite(6), arcsine_identity_suite()].concat(),
        Suite::All => Suite::EACH.iter().flat_map(|s| run_suite(*s, mode)).collect(),
    }
}

fn shapes(max_sum: u64) -> Vec<(u64, u64)> {
    (1..max_sum).flat_map(|n| (1..=max_sum - n).map(move |m| (n, m))).collect()
}

fn det_count(n: u64, m: u64, l: u64) -> Option<BigInt> {
    HexagonQuery::new(n, m, l).and_then(count_fixed_rhombus).ok()
}

/// Every hexagon with `N + M ≤ max_sum`: the determinant count at each axis
/// slot and the MacMahon total against exhaustive enumeration.
pub fn oracle_equivalence(max_sum: u64, mode: Mode) -> Vec<Check> {
    let sh = shapes(max_sum);
    let us: Vec<(usize, usize)> = sh.iter().map(|&(n, m)| (n as usize, m as usize)).collect();
    let profiles = match axis_profiles(&us, DEFAULT_BUDGET, mode) {
        Ok(p) => p,
        Err(e) => return vec![Check::new(format!("oracle enumeration: {e}"), false)],
    };
    let per_shape = lozenge_par::map(mode, &profiles, |p| {
        let (n, m) = (p.n as u64, p.m as u64);
        let mut out = vec![Check::new(format!("oracle total N={n} M={m}"), BigInt::from(p.total) == macmahon(n, m, n))];
        for l in 0..n + m {
            let ok = det_count(n, m, l) == Some(BigInt::from(p.per_slot[l as usize]));
            out.push(Check::new(format!("oracle N={n} M={m} l={l}"), ok));
        }
        out
    });
    per_shape.concat()
}

/// Each closed form against the determinant at its hexagon, `n, m ≤ max`.
pub fn theorem_suite(max: u64, mode: Mode) -> Vec<Check> {
    let items: Vec<(ClosedFormVariant, u64, u64)> = ClosedFormVariant::ALL
        .into_iter()
        .flat_map(|v| (v.min_n()..=max).flat_map(move |n| (1..=max).map(move |m| (v, n, m))))
        .collect();
    lozenge_par::map(mode, &items, |&(v, n, m)| {
        let (bn, bm, l) = v.hexagon(n, m);
        let ok = matches!((closed_form(v, n, m), det_count(bn, bm, l)), (Ok(c), Some(d)) if c == d);
        Check::new(format!("closed {v} n={n} m={m}"), ok)
    })
}

pub fn propp_suite(max: u64) -> Vec<Check> {
    let mut out: Vec<Check> = ProppVariant::ALL
        .into_iter()
        .flat_map(|v| {
            (v.min_n()..=max).map(move |n| {
                let ok = matches!((propp_closed_form(v, n), propp_via_theorem(v, n)), (Ok(a), Ok(b)) if a == b);
                Check::new(format!("propp {v} n={n}"), ok)
            })
        })
        .collect();
    let anchor = |v: ProppVariant, n: u64, expected: i64| {
        let (cv, a, b) = v.theorem_args(n);
        let (bn, bm, l) = cv.hexagon(a, b);
        let brute = count_with_axis_rhombus(bn as usize, bm as usize, l as usize, DEFAULT_BUDGET).ok();
        let formula = propp_closed_form(v, n).ok();
        Check::new(
            format!("propp anchor {v}({n}) = {expected}"),
            brute == Some(BigInt::from(expected)) && formula == Some(BigInt::from(expected)),
        )
    };
    out.push(anchor(ProppVariant::ProppEven, 1, 6));
    out.push(anchor(ProppVariant::ProppOdd, 0, 1));
    out
}

/// Dented semi-hexagons with `N + M ≤ max_sum` and every choice of dents.
pub fn dented_suite(max_sum: u64, mode: Mode) -> Vec<Check> {
    let mut items = Vec::new();
    for (n, m) in shapes(max_sum) {
        let width = n + m;
        for mask in 0u64..(1 << width) {
            if mask.count_ones() as u64 == n {
                items.push((n, m, (0..width).filter(|b| mask >> b & 1 == 1).collect::<Vec<u64>>()));
            }
        }
    }
    lozenge_par::map(mode, &items, |(n, m, dents)| {
        let formula = DentedTrapezoid::new(*n, *m, dents.clone()).and_then(|t| count_dented_trapezoid(&t)).ok();
        let du: Vec<usize> = dents.iter().map(|&d| d as usize).collect();
        let brute = count_dented_bruteforce(*n as usize, *m as usize, &du, DEFAULT_BUDGET).ok();
        Check::new(format!("dented N={n} M={m} dents={dents:?}"), formula.is_some() && formula == brute)
    })
}

/// Deviations from `1/3` on the `2n` hexagons with `2n ∈ {4, …, 20}`.
pub fn arcsine_deviations(mode: Mode) -> Vec<(u64, Option<f64>)> {
    let ns: Vec<u64> = vec![2, 4, 6, 8, 10];
    lozenge_par::map(mode, &ns, |&n| (2 * n, arcsine_deviation(n).ok()))
}

pub fn arcsine_suite(mode: Mode) -> Vec<Check> {
    let devs = arcsine_deviations(mode);
    let values: Option<Vec<f64>> = devs.iter().map(|(_, d)| *d).collect();
    let Some(values) = values else {
        return vec![Check::new("arcsine deviations computed", false)];
    };
    vec![
        Check::new("arcsine |p - 1/3| < 0.02 at 2n=20", values[values.len() - 1] < 0.02),
        Check::new("arcsine deviation decreasing over 2n=4..20", values.windows(2).all(|w| w[1] < w[0])),
    ]
}

fn superfactorial_sq(k: u64) -> Rational {
    let s = superfactorial(k);
    Rational::from_integer(&s * &s)
}

/// `D(e,e,2e−1)`, `D(e,e−1,2e−2)`, `D(e,e−2,2e−3)` against products of squared factorials.
pub fn detklein_suite(e_max: i64, mode: Mode) -> Vec<Check> {
    let mut items = Vec::new();
    for e in 1..=e_max {
        items.push(("detklein", e, e, 2 * e - 1));
        if e >= 2 {
            items.push(("detklein2", e, e - 1, 2 * e - 2));
        }
        if e >= 3 {
            items.push(("detklein3", e, e - 2, 2 * e - 3));
        }
    }
    lozenge_par::map(mode, &items, |&(name, a, b, n)| {
        Check::new(format!("{name} e={a}"), eval_d(a, b, n as usize) == superfactorial_sq(n as u64))
    })
}

pub fn symmetry_suite(n_max: i64, big_n_max: usize, mode: Mode) -> Vec<Check> {
    let items: Vec<(i64, usize)> = (1..=n_max).flat_map(|n| (1..=big_n_max).map(move |b| (n, b))).collect();
    lozenge_par::map(mode, &items, |&(n, b)| Check::new(format!("D symmetry n={n} N={b}"), check_d_symmetry(n, b)))
}

pub fn hankel_bernoulli_suite(n_max: usize, mode: Mode) -> Vec<Check> {
    let mut items = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    items.push((a, b, c, d));
                }
            }
        }
    }
    let mut out = lozenge_par::map(mode, &items, |&(a, b, c, d)| {
        let ok = (1..=n_max).all(|n| {
            matches!((hankel_bernoulli_direct(a, b, c, d, n), hankel_bernoulli_closed(a, b, c, d, n)),
                (Ok(x), Ok(y)) if x == y)
        });
        Check::new(format!("hankel ({a},{b},{c},{d}) n<={n_max}"), ok)
    });
    out.push(Check::new("hankel anchor (1,1,1,1) n=1 = 1/6", hankel_bernoulli_closed(1, 1, 1, 1, 1) == Ok(rat(1, 6))));
    out.push(Check::new(
        "hankel anchor (1,1,0,0) n=2 = -1/12",
        hankel_bernoulli_closed(1, 1, 0, 0, 2) == Ok(rat(-1, 12)) && hankel_bernoulli_direct(1, 1, 0, 0, 2) == Ok(rat(-1, 12)),
    ));
    out
}

pub fn extra_bernoulli_suite(n_max: usize, dec_max: usize, mode: Mode) -> Vec<Check> {
    let ns: Vec<usize> = (1..=n_max).collect();
    let mut out = lozenge_par::map(mode, &ns, |&n| {
        Check::new(format!("extra n={n}"), extra_bernoulli_direct(n) == extra_bernoulli_closed(n))
    });
    out.push(Check::new("extra anchor n=1 = 13/6", extra_bernoulli_closed(1) == rat(13, 6)));
    let ds: Vec<usize> = (1..=dec_max).collect();
    let decs = lozenge_par::map(mode, &ds, |&n| {
        ExtraDecomposition::compute(n)
            .checks()
            .into_iter()
            .map(|(name, ok)| Check::new(format!("extra {name} n={n}"), ok))
            .collect::<Vec<_>>()
    });
    out.extend(decs.into_iter().flatten());
    out
}

pub fn bernoulli_poly_suite(n_max: usize, mode: Mode) -> Vec<Check> {
    let xs = [int(-1), rat(-1, 2), rat(1, 2)];
    let items: Vec<(Rational, usize)> = xs.iter().flat_map(|x| (1..=n_max).map(move |n| (x.clone(), n))).collect();
    let mut out = lozenge_par::map(mode, &items, |(x, n)| {
        let ok = bernoulli_poly_hankel_closed(*n, x).is_ok_and(|c| c == bernoulli_poly_hankel(*n, x));
        Check::new(format!("B(N;x) N={n} x={x}"), ok)
    });
    out.push(Check::new("B(1;-1/2) = 11/12", bernoulli_poly_hankel_closed(1, &rat(-1, 2)) == Ok(rat(11, 12))));
    out.push(Check::new("B(1;1/2) = -1/12", bernoulli_poly_hankel_closed(1, &rat(1, 2)) == Ok(rat(-1, 12))));
    out
}

pub const HAHN_FAMILIES: [(i64, i64, i64, i64); 4] = [(1, 1, 1, 1), (2, 2, 1, 1), (1, 2, 2, 2), (2, 2, 0, 1)];

/// Random integer moment sequences whose leading Hankel determinants do not vanish.
pub fn random_leclerc_instances(count: usize, seed: u64) -> Vec<(Vec<Rational>, usize, usize, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mu: Vec<Rational> = (0..16).map(|_| int(rng.gen_range(-4..=4))).collect();
        let l = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let x = [int(0), int(1), int(-2)][rng.gen_range(0..3)].clone();
        let f = |k: usize| mu[k].clone();
        if (1..=l + m).all(|k| !hankel_det(&f, k, 0).is_zero()) {
            out.push((mu, l, m, x));
        }
    }
    out
}

pub fn orthopoly_suite(n_rec: usize, n_hankel: usize, random: usize, mode: Mode) -> Vec<Check> {
    let fam = HAHN_FAMILIES.to_vec();
    let per_family = lozenge_par::map(mode, &fam, |&(a, b, c, d)| {
        let p = HahnParams::ints(a, b, c, d);
        let hankel = ChahnMoments::new(&p).ok().is_some_and(|mu| {
            jfraction_from_moments(&mu, n_hankel).is_ok_and(|jf| {
                (0..=n_hankel).all(|n| hankel_via_jfraction(&jf, n).is_ok_and(|h| h == hankel_det(&mu, n, 0)))
            })
        });
        vec![
            Check::new(format!("hahn recurrence {p} n<={n_rec}"), chahn_recurrence_holds(&p, n_rec) == Ok(true)),
            Check::new(format!("hahn symmetry {p} n<={n_rec}"), chahn_symmetry_holds(&p, n_rec) == Ok(true)),
            Check::new(format!("jfraction hankel {p} n<={n_hankel}"), hankel),
        ]
    });
    let mut out: Vec<Check> = per_family.concat();
    let lemma = |k: usize| lambda(k + 2);
    out.push(Check::new("leclerc lemma configuration l=2 m=2 x=0", leclerc_check(&lemma, 2, 2, &int(0))));
    let inst = random_leclerc_instances(random, SEED);
    let idx: Vec<usize> = (0..inst.len()).collect();
    out.extend(lozenge_par::map(mode, &idx, |&i| {
        let (mu, l, m, x) = &inst[i];
        let f = |k: usize| mu[k].clone();
        Check::new(format!("leclerc random #{i} l={l} m={m} x={x}"), leclerc_check(&f, *l, *m, x))
    }));
    out
}

pub fn weird_suite(n_max: u64, mode: Mode) -> Vec<Check> {
    let ns: Vec<u64> = (0..=n_max).collect();
    let mut out: Vec<Check> = lozenge_par::map(mode, &ns, |&n| {
        vec![
            Check::new(format!("weird n={n}"), lemma_weird_lhs(n) == lemma_weird_rhs(n)),
            Check::new(format!("weird single sum n={n}"), weird_first_line(n) == simplesum_closed(n)),
            Check::new(format!("weird double sum n={n}"), weird_second_line(n) == doublesum_closed(n)),
        ]
    })
    .concat();
    out.push(Check::new("weird anchor n=0 = 0", lemma_weird_lhs(0) == int(0)));
    out.push(Check::new("weird anchor n=1 = -5", lemma_weird_lhs(1) == int(-5)));
    out
}

pub fn sum_identity_suite(n_max: u64) -> Vec<Check> {
    SumIdentity::ALL
        .into_iter()
        .flat_map(|s| {
            let lo = if s == SumIdentity::Summe2 { 2 } else { 1 };
            (lo..=n_max).map(move |n| Check::new(format!("{s} n={n}"), verify_sum_identity(s, n)))
        })
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=5))
}

/// `count` accepted random instances of each identity, `N ≤ n_max`.
pub fn hypergeometric_suite(count: usize, n_max: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    let mut k = 0;
    while k < count {
        let a = random_rational(&mut rng);
        let c = rat(rng.gen_range(1..=20), rng.gen_range(1..=6));
        let n = rng.gen_range(0..=n_max);
        if let Ok(ok) = chu_vandermonde_check(&a, &c, n) {
            out.push(Check::new(format!("chu-vandermonde a={a} c={c} N={n}"), ok));
            k += 1;
        }
    }
    k = 0;
    while k < count {
        let w = Whipple {
            a: random_rational(&mut rng),
            b: random_rational(&mut rng),
            c: random_rational(&mut rng),
            d: random_rational(&mut rng),
            e: random_rational(&mut rng),
            n: rng.gen_range(0..=n_max),
        };
        if let Ok((l, r)) = whipple_sides(&w) {
            out.push(Check::new(format!("whipple a={} b={} c={} d={} e={} N={}", w.a, w.b, w.c, w.d, w.e, w.n), l == r));
            k += 1;
        }
    }
    k = 0;
    while k < count {
        let a = random_rational(&mut rng);
        let c = random_rational(&mut rng);
        let z = random_rational(&mut rng);
        let n = rng.gen_range(0..=n_max);
        if let Ok(ok) = transform_checks(&a, &c, n, &z) {
            out.push(Check::new(format!("transformation a={a} c={c} N={n} z={z}"), ok));
            k += 1;
        }
    }
    out
}

pub fn wz_suite(n_max: u64) -> Vec<Check> {
    let regen = summe_from_recurrence(n_max).into_iter().zip(1..).all(|(s, n)| s == summe_closed(n));
    vec![
        Check::new(format!("wz certificate n<={n_max}"), wz_certificate_check(n_max + 1)),
        Check::new(format!("summe regenerated from S(1)=1, n<={n_max}"), regen),
    ]
}

pub fn arcsine_identity_suite() -> Vec<Check> {
    [0.05, 0.25, 0.5, 0.75, 0.9]
        .into_iter()
        .map(|z| {
            Check::new(
                format!("2F1 arcsine relations z={z}"),
                arcsin_identity_check(z) && five_halves_relation_check(z) && three_halves_relation_check(z),
            )
        })
        .collect()
}
