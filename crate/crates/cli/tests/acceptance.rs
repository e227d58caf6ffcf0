//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always reach stdout; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lozenge_cli::suites::{self, arcsine_deviations};
use lozenge_cli::Check;
use lozenge_par::Mode;

/// Arcsine criterion: distance from `1/3` allowed at `2n = 20`.
const ARCSINE_TOL: f64 = 0.02;

struct Outcome {
    id: u32,
    title: &'static str,
    checks: usize,
    failed: Vec<String>,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Outcome {
    fn pass(&self) -> bool {
        self.checks > 0 && self.failed.is_empty() && self.limit.map_or(true, |l| self.elapsed < l)
    }
}

fn criterion(id: u32, title: &'static str, limit: Option<u64>, run: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = run();
    let elapsed = start.elapsed();
    let failed = checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
    Outcome { id, title, checks: checks.len(), failed, elapsed, limit: limit.map(Duration::from_secs) }
}

fn main() -> ExitCode {
    let mode = if lozenge_par::parallel_available() { Mode::Parallel } else { Mode::Sequential };
    let outcomes = vec![
        criterion(1, "oracle equivalence, N+M <= 7, every axis slot", Some(120), || suites::oracle_equivalence(7, mode)),
        criterion(2, "six closed forms = determinant, 1 <= n,m <= 4", Some(60), || suites::theorem_suite(4, mode)),
        criterion(3, "Propp formulas = theorems, n <= 5; anchors 6 and 1", None, || suites::propp_suite(5)),
        criterion(4, "Hankel-Bernoulli closed = direct, n <= 6, a,b,c,d <= 3", Some(60), || {
            suites::hankel_bernoulli_suite(6, mode)
        }),
        criterion(5, "extra Bernoulli Hankel n <= 8; minor decomposition n <= 5", None, || {
            suites::extra_bernoulli_suite(8, 5, mode)
        }),
        criterion(6, "weird lemma 0 <= n <= 30 with both partial sums", None, || suites::weird_suite(30, mode)),
        criterion(7, "D(e,e,2e-1) family e <= 6; D symmetry n <= 4, N <= 5", None, || {
            [suites::detklein_suite(6, mode), suites::symmetry_suite(4, 5, mode)].concat()
        }),
        criterion(8, "continuous Hahn, J-fraction Hankel, Leclerc (20 random)", None, || {
            suites::orthopoly_suite(6, 5, 20, mode)
        }),
        criterion(9, "Bernoulli-polynomial Hankels at x = -1, -1/2, 1/2, N <= 6", None, || {
            suites::bernoulli_poly_suite(6, mode)
        }),
        criterion(10, "Chu-Vandermonde, Whipple, transformation (10 each); WZ n <= 6", None, || {
            [suites::hypergeometric_suite(10, 4), suites::wz_suite(6)].concat()
        }),
        criterion(11, "arcsine law: |p - 1/3| < 0.02 at 2n = 20, monotone over 2n = 4..20", Some(60), || {
            let devs = arcsine_deviations(mode);
            let vals: Vec<f64> = devs.iter().map(|(_, d)| d.unwrap_or(f64::INFINITY)).collect();
            for (two_n, d) in &devs {
                println!("    2n={two_n:<3} deviation {:.6}", d.unwrap_or(f64::NAN));
            }
            vec![
                Check::new("deviation at 2n=20", vals[vals.len() - 1] < ARCSINE_TOL),
                Check::new("monotone decrease", vals.windows(2).all(|w| w[1] < w[0])),
            ]
        }),
    ];
    let mut all = true;
    for o in &outcomes {
        let status = if o.pass() { "PASS" } else { "FAIL" };
        let limit = o.limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {:>2}: {status}  {}  [{} checks, {:.2}s{limit}]",
            o.id,
            o.title,
            o.checks,
            o.elapsed.as_secs_f64()
        );
        for f in o.failed.iter().take(10) {
            println!("    failed: {f}");
        }
        all &= o.pass();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
