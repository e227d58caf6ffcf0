use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::rational::{binomial, int, Rational};

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Bernoulli number `B_m` with `B_1 = −1/2`.
///
/// Values come from `Σ_{k=0}^{m} C(m+1,k) B_k = 0` and are cached; entries are
/// appended once and never modified, so concurrent readers always agree.
pub fn bernoulli_number(m: usize) -> Rational {
    {
        let t = table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = t.get(m) {
            return b.clone();
        }
    }
    let mut t = table().write().unwrap_or_else(|e| e.into_inner());
    while t.len() <= m {
        let n = t.len();
        let b = if n > 1 && n % 2 == 1 {
            Rational::zero()
        } else {
            let mut s = Rational::zero();
            for (k, bk) in t.iter().enumerate() {
                if !bk.is_zero() {
                    s += Rational::from_integer(binomial(n as i64 + 1, k as i64)) * bk;
                }
            }
            -s / int(n as i64 + 1)
        };
        t.push(b);
    }
    t[m].clone()
}

/// Bernoulli polynomial `B_l(x) = Σ_k C(l,k) B_{l−k} x^k`.
pub fn bernoulli_poly(l: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for k in 0..=l {
        acc += Rational::from_integer(binomial(l as i64, k as i64)) * bernoulli_number(l - k) * &xp;
        xp *= x;
    }
    acc
}
