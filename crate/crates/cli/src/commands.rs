use clap::{Parser, Subcommand, ValueEnum};
use lozenge_arith::{int, parse_rational, rat, BigInt, Rational};
use lozenge_oracle::{axis_profile, count_dented_bruteforce, count_with_axis_rhombus, DEFAULT_BUDGET};
use lozenge_orthopoly::{
    bernoulli_poly_hankel, bernoulli_poly_hankel_closed, conjecture_explore, extra_bernoulli_closed,
    extra_bernoulli_direct, hankel_bernoulli_closed, hankel_bernoulli_direct, ConjectureFamily, OrthoError,
};
use lozenge_par::Mode;
use lozenge_tiling::{
    arcsine_prediction, closed_form_detailed, count_dented_trapezoid, count_fixed_rhombus, macmahon,
    propp_closed_form, propp_proportion, propp_via_theorem, ClosedFormVariant, DentedTrapezoid, HexagonQuery,
    ProppVariant,
};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::report::{Check, Format, Report, Table};
use crate::suites::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "lozenge", version, about = "Exact lozenge tiling counts and identity checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Det,
    Closed,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulaOrOracle {
    Formula,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Closed,
    Direct,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tilings of the N,M,N,N,M,N hexagon containing the axis rhombus at slot l.
    Count {
        #[arg(long = "N")]
        n: u64,
        #[arg(long = "M")]
        m: u64,
        #[arg(long)]
        l: u64,
        #[arg(long, value_enum, default_value = "det")]
        method: CountMethod,
    },
    /// All tilings of the N,M,N,N,M,N hexagon.
    Total {
        #[arg(long = "N")]
        n: u64,
        #[arg(long = "M")]
        m: u64,
        #[arg(long, value_enum, default_value = "formula")]
        method: FormulaOrOracle,
    },
    /// Tilings of a semi-hexagon with N dents on its long side.
    Dented {
        #[arg(long = "N")]
        n: u64,
        #[arg(long = "M")]
        m: u64,
        /// Comma-separated dent positions in `0..N+M`.
        #[arg(long, value_delimiter = ',')]
        dents: Vec<u64>,
        #[arg(long, value_enum, default_value = "formula")]
        method: FormulaOrOracle,
    },
    /// Hankel determinant of Bernoulli numbers with shifted-factorial weights.
    Hankel {
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        c: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long)]
        n: usize,
        /// The `(B−1)²` weight instead of `a, b, c, d`.
        #[arg(long)]
        extra: bool,
        #[arg(long, value_enum, default_value = "closed")]
        method: EvalMethod,
    },
    /// Hankel determinant of Bernoulli polynomials `B_{i+j}(x)`.
    Bernoulli {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: EvalMethod,
    },
    /// One of the six closed forms, checked against the determinant.
    Closed {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Near-center counts for nearly regular hexagons.
    Propp {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Disable the data-parallel path.
        #[arg(long)]
        sequential: bool,
    },
    /// Exploratory reports; nothing here is a pass/fail check.
    Explore {
        #[command(subcommand)]
        what: Explore,
    },
    /// Exact near-center proportions against the arcsine prediction.
    Asy {
        #[arg(long, allow_hyphen_values = true)]
        ratio: String,
        #[arg(long)]
        nmax: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Explore {
    /// Residuals of the Hankel determinants with `a = 0` (and optionally `b`).
    Conjecture {
        #[arg(long)]
        b: Option<i64>,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    Usage(String),
    /// A computation that could not complete; exit status 1.
    Failed(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Failed(s) => write!(f, "error: {s}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn default_mode() -> Mode {
    if lozenge_par::parallel_available() {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

/// The closed-form family, with its `(n, m)`, whose hexagon is `(N, M, l)`
/// or its mirror image.
pub fn closed_variant_for(big_n: u64, big_m: u64, l: u64) -> Option<(ClosedFormVariant, u64, u64)> {
    let mirror = (big_n + big_m).checked_sub(1 + l)?;
    ClosedFormVariant::ALL.into_iter().find_map(|v| {
        (v.min_n()..=big_n).find_map(|a| {
            (1..=big_m + 1).find_map(|b| {
                let (hn, hm, hl) = v.hexagon(a, b);
                (hn == big_n && hm == big_m && (hl == l || hl == mirror)).then_some((v, a, b))
            })
        })
    })
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Count { n, m, l, method } => count(*n, *m, *l, *method),
        Command::Total { n, m, method } => {
            if *n == 0 || *m == 0 {
                return Err(usage("N and M must be positive"));
            }
            let mut r = Report::new(method_name(*method)).param("N", n).param("M", m);
            r.value = match method {
                FormulaOrOracle::Formula => macmahon(*n, *m, *n).to_string(),
                FormulaOrOracle::Oracle => {
                    axis_profile(*n as usize, *m as usize, DEFAULT_BUDGET).map_err(failed)?.total.to_string()
                }
            };
            Ok(r)
        }
        Command::Dented { n, m, dents, method } => {
            let t = DentedTrapezoid::new(*n, *m, dents.clone()).map_err(usage)?;
            let dstr = dents.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            let mut r = Report::new(method_name(*method)).param("N", n).param("M", m).param("dents", dstr);
            r.value = match method {
                FormulaOrOracle::Formula => count_dented_trapezoid(&t).map_err(failed)?.to_string(),
                FormulaOrOracle::Oracle => {
                    let du: Vec<usize> = dents.iter().map(|&d| d as usize).collect();
                    count_dented_bruteforce(*n as usize, *m as usize, &du, DEFAULT_BUDGET).map_err(failed)?.to_string()
                }
            };
            Ok(r)
        }
        Command::Hankel { a, b, c, d, n, extra, method } => hankel(*a, *b, *c, *d, *n, *extra, *method),
        Command::Bernoulli { n, x, method } => bernoulli(*n, x, *method),
        Command::Closed { variant, n, m } => {
            let v: ClosedFormVariant = variant.parse().map_err(usage)?;
            if *n < v.min_n() || *m == 0 {
                return Err(usage(format!("{v} needs n ≥ {} and m ≥ 1", v.min_n())));
            }
            let cf = closed_form_detailed(v, *n, *m).map_err(failed)?;
            let (hn, hm, hl) = v.hexagon(*n, *m);
            let det = HexagonQuery::new(hn, hm, hl).and_then(count_fixed_rhombus).map_err(failed)?;
            let mut r = Report::new("closed").param("variant", v).param("n", n).param("m", m);
            r.value = cf.count.to_string();
            r.notes = vec![
                ("hexagon".into(), format!("N={hn} M={hm} l={hl}")),
                ("route".into(), cf.route.to_string()),
                ("proportion".into(), cf.proportion.to_string()),
            ];
            r.checks.push(Check::new("closed = det", cf.count == det));
            Ok(r)
        }
        Command::Propp { variant, n } => {
            let v: ProppVariant = variant.parse().map_err(usage)?;
            if *n < v.min_n() {
                return Err(usage(format!("{v} needs n ≥ {}", v.min_n())));
            }
            let closed = propp_closed_form(v, *n).map_err(failed)?;
            let via = propp_via_theorem(v, *n).map_err(failed)?;
            let mut r = Report::new("closed").param("variant", v).param("n", n);
            r.value = closed.to_string();
            let (sn, sm) = v.sides(*n);
            r.notes = vec![
                ("hexagon".into(), format!("N={sn} M={sm}")),
                ("proportion".into(), propp_proportion(v, *n).map_err(failed)?.to_string()),
            ];
            r.checks.push(Check::new("closed = theorem", closed == via));
            Ok(r)
        }
        Command::Verify { suite, sequential } => {
            let mode = if *sequential { Mode::Sequential } else { default_mode() };
            let checks = run_suite(*suite, mode);
            let passed = checks.iter().filter(|c| c.pass).count();
            let mut r = Report::new("verify").param("suite", suite.name());
            r.value = format!("{passed}/{}", checks.len());
            r.checks = checks;
            Ok(r)
        }
        Command::Explore { what: Explore::Conjecture { b, c, d, nmax } } => {
            let family = match b {
                Some(b) => ConjectureFamily::Rational { b: *b, c: *c, d: *d },
                None => ConjectureFamily::Polynomial { c: *c, d: *d },
            };
            let rep = conjecture_explore(family, *nmax).map_err(|e| match e {
                OrthoError::ParameterOutOfRange { .. } => usage(e),
                _ => failed(e),
            })?;
            let mut r = Report::new("exploration").param("family", family).param("nmax", nmax);
            r.value = rep.interpolant.to_string();
            r.table = Some(Table {
                header: vec!["n".into(), "residual".into()],
                rows: rep.residuals.iter().enumerate().map(|(k, v)| vec![(k + 1).to_string(), v.to_string()]).collect(),
            });
            let (p, q) = family.degree_bounds();
            r.notes = vec![
                ("interpolant".into(), rep.interpolant.to_string()),
                ("predicted degrees".into(), format!("{p}/{q}")),
                (
                    "consistent".into(),
                    match rep.bound_holds {
                        Some(true) => "yes",
                        Some(false) => "no",
                        None => "undetermined",
                    }
                    .into(),
                ),
            ];
            Ok(r)
        }
        Command::Asy { ratio, nmax } => asy(ratio, *nmax),
    }
}

fn method_name(m: FormulaOrOracle) -> &'static str {
    match m {
        FormulaOrOracle::Formula => "formula",
        FormulaOrOracle::Oracle => "oracle",
    }
}

fn count(n: u64, m: u64, l: u64, method: CountMethod) -> Result<Report, CliError> {
    let q = HexagonQuery::new(n, m, l).map_err(usage)?;
    let mut r = Report::new(match method {
        CountMethod::Det => "det",
        CountMethod::Closed => "closed",
        CountMethod::Oracle => "oracle",
    })
    .param("N", n)
    .param("M", m)
    .param("l", l);
    let value: BigInt = match method {
        CountMethod::Det => count_fixed_rhombus(q).map_err(failed)?,
        CountMethod::Closed => {
            let (v, a, b) = closed_variant_for(n, m, l)
                .ok_or_else(|| usage(format!("no closed form covers N={n} M={m} l={l}")))?;
            r.notes.push(("variant".into(), format!("{v} n={a} m={b}")));
            let cf = closed_form_detailed(v, a, b).map_err(failed)?;
            r.notes.push(("route".into(), cf.route.to_string()));
            cf.count
        }
        CountMethod::Oracle => {
            count_with_axis_rhombus(n as usize, m as usize, l as usize, DEFAULT_BUDGET).map_err(failed)?
        }
    };
    r.value = value.to_string();
    Ok(r)
}

fn hankel(
    a: Option<i64>,
    b: Option<i64>,
    c: Option<i64>,
    d: Option<i64>,
    n: usize,
    extra: bool,
    method: EvalMethod,
) -> Result<Report, CliError> {
    let mname = match method {
        EvalMethod::Closed => "closed",
        EvalMethod::Direct => "direct",
    };
    if extra {
        if n == 0 {
            return Err(usage("n ≥ 1"));
        }
        let closed = extra_bernoulli_closed(n);
        let direct = extra_bernoulli_direct(n);
        let mut r = Report::new(mname).param("weight", "(B-1)^2").param("n", n);
        r.value = if method == EvalMethod::Closed { &closed } else { &direct }.to_string();
        r.checks.push(Check::new("closed = direct", closed == direct));
        return Ok(r);
    }
    let (Some(a), Some(b), Some(c), Some(d)) = (a, b, c, d) else {
        return Err(usage("hankel needs --a --b --c --d, or --extra"));
    };
    let mut r = Report::new(mname).param("a", a).param("b", b).param("c", c).param("d", d).param("n", n);
    let closed = hankel_bernoulli_closed(a, b, c, d, n);
    let direct = hankel_bernoulli_direct(a, b, c, d, n);
    let as_usage = |e: OrthoError| match e {
        OrthoError::ParameterOutOfRange { .. } => usage(e),
        _ => failed(e),
    };
    r.value = match method {
        EvalMethod::Closed => closed.clone().map_err(as_usage)?.to_string(),
        EvalMethod::Direct => direct.clone().map_err(as_usage)?.to_string(),
    };
    if let (Ok(x), Ok(y)) = (&closed, &direct) {
        r.checks.push(Check::new("closed = direct", x == y));
    }
    Ok(r)
}

fn bernoulli(n: usize, x: &str, method: EvalMethod) -> Result<Report, CliError> {
    let x = parse_rational(x).map_err(usage)?;
    let direct = bernoulli_poly_hankel(n, &x);
    let closed = bernoulli_poly_hankel_closed(n, &x);
    let mut r = Report::new(match method {
        EvalMethod::Closed => "closed",
        EvalMethod::Direct => "direct",
    })
    .param("N", n)
    .param("x", &x);
    r.value = match method {
        EvalMethod::Direct => direct.to_string(),
        EvalMethod::Closed => closed.clone().map_err(usage)?.to_string(),
    };
    if let Ok(c) = &closed {
        r.checks.push(Check::new("closed = direct", *c == direct));
    }
    Ok(r)
}

fn round_half_up(r: &Rational) -> BigInt {
    (r + rat(1, 2)).floor().to_integer()
}

fn asy(ratio: &str, nmax: u64) -> Result<Report, CliError> {
    let a = parse_rational(ratio).map_err(usage)?;
    if a.is_negative() {
        return Err(usage("ratio must be nonnegative"));
    }
    if nmax == 0 {
        return Err(usage("nmax ≥ 1"));
    }
    let af = a.to_f64().unwrap_or(f64::NAN);
    let prediction = arcsine_prediction(af);
    let ns: Vec<u64> = (1..=nmax).collect();
    let rows = lozenge_par::try_map(default_mode(), &ns, |&n| {
        let m = round_half_up(&(&a * int(n as i64))).to_u64().unwrap_or(0).max(1);
        let q = HexagonQuery::new(2 * n, 2 * m, n + m)?;
        let p = Rational::new(count_fixed_rhombus(q)?, macmahon(2 * n, 2 * m, 2 * n));
        let pf = p.to_f64().unwrap_or(f64::NAN);
        Ok::<_, lozenge_tiling::TilingError>(vec![
            n.to_string(),
            m.to_string(),
            p.to_string(),
            format!("{pf:.12}"),
            format!("{prediction:.12}"),
        ])
    })
    .map_err(failed)?;
    let mut r = Report::new("det").param("ratio", &a).param("nmax", nmax);
    r.value = rows.last().map(|row| row[3].clone()).unwrap_or_default();
    r.table = Some(Table {
        header: ["n", "m", "proportion", "decimal", "prediction"].map(String::from).to_vec(),
        rows,
    });
    if a.is_zero() {
        r.notes.push(("note".into(), "m is clamped to at least 1".into()));
    }
    Ok(r)
}
