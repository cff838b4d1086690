mod output;
mod progress;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use abundancy::arith::abundancy_index_of;
use abundancy::cache::{enumerate_with_cache, Method};
use abundancy::outlaw::{classify_rational, family_2p, family_even_perfect, family_pq, find_index_witness};
use abundancy::perfect::even_perfect_numbers;
use abundancy::primes::primes_up_to;
use abundancy::ratio::parse_rational;
use abundancy::rh::{self, BoundInterval, LagariasReport, RobinReport, ScanSummary};
use abundancy::superabundant::{count_superabundant, superabundant_structured, SuperabundantRecord};
use abundancy::{abundancy_index, classify, factorize, index_bounds, sigma, ExactRatio, OutlawVerdict};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use output::{Emitter, Field, Format};
use progress::Progress;

#[derive(Parser)]
#[command(name = "abundancy", version, about = "Abundancy index, abundancy outlaws, superabundant numbers and Robin's inequality")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Decimal digits for certified bounds (10..=1000).
    #[arg(long, global = true, default_value_t = rh::DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(10..=1000))]
    precision: u32,
    /// Largest n tried when searching for an index witness.
    #[arg(long, global = true, default_value_t = abundancy::outlaw::DEFAULT_SEARCH_BOUND)]
    search_bound: u64,
    /// Superabundant cache file.
    #[arg(long, global = true, default_value = "./superabundant.cache")]
    cache_path: PathBuf,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// I(n) = σ(n)/n and its classification.
    Index { n: u64 },
    /// σ(n) with the factorization it came from.
    Sigma { n: u64 },
    /// Perfect, abundant or deficient; multiperfect order if I(n) is an integer.
    Classify { n: u64 },
    /// ∏ (p+1)/p <= I(n) < ∏ p/(p-1).
    Bounds { n: u64 },
    /// Decide whether a rational r/s > 1 is an index, an outlaw, or unknown.
    Outlaw { q: String },
    /// Outlaw families with closed-form certificates.
    OutlawFamily {
        #[command(subcommand)]
        family: Family,
    },
    /// Smallest n <= --search-bound with I(n) = q.
    Witness { q: String },
    /// Superabundant numbers up to a limit.
    Superabundant {
        #[arg(long, value_parser = parse_big)]
        limit: BigUint,
        #[arg(long, value_enum, default_value_t = MethodArg::Structured)]
        method: MethodArg,
        /// Continue from the cache file instead of starting over.
        #[arg(long)]
        resume: bool,
    },
    /// S(x), the number of superabundant n <= x, against ln x.
    Count {
        #[arg(value_parser = parse_big)]
        x: BigUint,
    },
    /// I(n) < e^γ ln ln n, certified.
    Robin { n: u64 },
    /// I(n) < e^γ ln ln n + 0.6483 / ln ln n, for one n or all of [3, limit].
    RobinUnconditional {
        #[arg(required_unless_present = "limit")]
        n: Option<u64>,
        #[arg(long, conflicts_with = "n")]
        limit: Option<u64>,
    },
    /// Every n in [3, threshold) violating Robin's inequality.
    Exceptions {
        #[arg(default_value_t = rh::ROBIN_THRESHOLD)]
        threshold: u64,
    },
    /// σ(n) <= e^{H_n} ln H_n + H_n, for one n or all of [1, limit].
    Lagarias {
        #[arg(required_unless_present = "limit")]
        n: Option<u64>,
        #[arg(long, conflicts_with = "n")]
        limit: Option<u64>,
    },
    /// I(n) / (e^γ ln ln n), for given n or every superabundant n in (2, limit].
    Gronwall {
        #[arg(required_unless_present = "superabundant_limit")]
        n: Vec<u64>,
        #[arg(long, value_parser = parse_big, conflicts_with = "n")]
        superabundant_limit: Option<BigUint>,
    },
    /// Robin checks on superabundant n in (5040, limit].
    AkbaryScan {
        #[arg(value_parser = parse_big)]
        limit: BigUint,
    },
    /// Even perfect numbers from Mersenne primes.
    EvenPerfect {
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// H_n, exact when n <= 10^4, always enclosed.
    Harmonic { n: u64 },
}

#[derive(Subcommand)]
enum Family {
    /// (σ(2p)+1)/2p for one prime p, or every prime 5 <= p <= --up-to.
    #[command(name = "2p")]
    TwoP {
        #[arg(required_unless_present = "up_to")]
        p: Option<u64>,
        #[arg(long, conflicts_with = "p")]
        up_to: Option<u64>,
    },
    /// (σ(pq)+1)/pq for primes p < q, or every prime q in (p, --up-to].
    Pq {
        p: u64,
        #[arg(required_unless_present = "up_to")]
        q: Option<u64>,
        #[arg(long, conflicts_with = "q")]
        up_to: Option<u64>,
        /// With --up-to, keep only q ≡ 1 (mod p).
        #[arg(long, requires = "up_to")]
        one_mod_p: bool,
    },
    /// (σ(2N)+1)/2N for an even perfect N, or the first --count of them.
    EvenPerfect {
        #[arg(required_unless_present = "count")]
        n: Option<u64>,
        #[arg(long, conflicts_with = "n")]
        count: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Structured,
    Both,
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))
}

enum Failure {
    Domain(String),
    Io(io::Error),
}

impl From<abundancy::Error> for Failure {
    fn from(e: abundancy::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = io::StdoutLock<'a>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn big(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn ratio_fields(num: &'static str, den: &'static str, q: &ExactRatio) -> [Field; 2] {
    [(num, big(q.numer())), (den, big(q.denom()))]
}

fn approx(q: &ExactRatio) -> String {
    format!("{:.4}", q.to_f64())
}

/// Reduces `s`, telling stderr when it was not in lowest terms. A malformed
/// rational is a usage error.
fn rational_arg(s: &str) -> ExactRatio {
    match parse_rational(s) {
        Ok((q, reduced)) => {
            if !reduced {
                eprintln!("note: {s} is not in lowest terms; using {q}");
            }
            q
        }
        Err(e) => Cli::command().error(ErrorKind::ValueValidation, format!("invalid rational `{s}`: {e}")).exit(),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let out = stdout.lock();
    let d = cli.precision;
    match &cli.command {
        Command::Index { n } => index(cli.format, out, *n),
        Command::Sigma { n } => sigma_cmd(cli.format, out, *n),
        Command::Classify { n } => classify_cmd(cli.format, out, *n),
        Command::Bounds { n } => bounds(cli.format, out, *n),
        Command::Outlaw { q } => {
            let q = rational_arg(q);
            let v = classify_rational(&q, cli.search_bound)?;
            let mut e = Emitter::new(cli.format, OUTLAW_COLUMNS, out)?;
            e.emit(&v.to_string(), &outlaw_fields(&q, &v, Value::Null))?;
            Ok(e.finish()?)
        }
        Command::OutlawFamily { family } => outlaw_family(cli.format, out, family),
        Command::Witness { q } => {
            let q = rational_arg(q);
            let w = find_index_witness(&q, cli.search_bound)?;
            let text = match w {
                Some(n) => format!("I({n}) = {q}"),
                None => format!("no n <= {} with I(n) = {q}", cli.search_bound),
            };
            let mut e = Emitter::new(cli.format, &["q_num", "q_den", "search_bound", "witness"], out)?;
            let [a, b] = ratio_fields("q_num", "q_den", &q);
            e.emit(&text, &[a, b, ("search_bound", json!(cli.search_bound)), ("witness", w.map_or(Value::Null, big))])?;
            Ok(e.finish()?)
        }
        Command::Superabundant { limit, method, resume } => {
            superabundant(cli.format, out, limit, *method, *resume, &cli.cache_path)
        }
        Command::Count { x } => {
            let c = count_superabundant(x)?;
            let text = format!(
                "S({x}) = {}; S(x) {} ln x",
                c.count,
                if c.log_lower_bound_holds { ">=" } else { "<" }
            );
            let mut e = Emitter::new(cli.format, &["x", "count", "log_lower_bound_holds"], out)?;
            e.emit(
                &text,
                &[("x", big(x)), ("count", json!(c.count)), ("log_lower_bound_holds", json!(c.log_lower_bound_holds))],
            )?;
            Ok(e.finish()?)
        }
        Command::Robin { n } => {
            let r = rh::robin_check(*n, d)?;
            let mut e = Emitter::new(cli.format, ROBIN_COLUMNS, out)?;
            e.emit(&r.verdict.to_string(), &robin_fields(&r))?;
            Ok(e.finish()?)
        }
        Command::RobinUnconditional { n: Some(n), .. } => {
            let r = rh::robin_unconditional_check(*n, d)?;
            let mut e = Emitter::new(cli.format, ROBIN_COLUMNS, out)?;
            e.emit(&r.verdict.to_string(), &robin_fields(&r))?;
            Ok(e.finish()?)
        }
        Command::RobinUnconditional { limit, .. } => {
            let limit = limit.expect("clap requires n or --limit");
            let mut p = Progress::new("robin-unconditional");
            let s = rh::robin_unconditional_scan_with(limit, d, &mut |n| p.tick(|| format!("n = {n} of {limit}")))?;
            emit_summary(cli.format, out, limit, d, &s)
        }
        Command::Exceptions { threshold } => {
            let mut p = Progress::new("exceptions");
            let t = *threshold;
            let found = rh::exceptions_below_with(t, d, &mut |n| p.tick(|| format!("n = {n} of {t}")))?;
            let mut e = Emitter::new(cli.format, ROBIN_COLUMNS, out)?;
            for n in found {
                let r = rh::robin_check(n, d)?;
                e.emit(&robin_text(&r), &robin_fields(&r))?;
            }
            Ok(e.finish()?)
        }
        Command::Lagarias { n: Some(n), .. } => {
            let r = rh::lagarias_check(*n, d)?;
            let mut e = Emitter::new(cli.format, LAGARIAS_COLUMNS, out)?;
            let text = if r.equality { format!("{} (equality)", r.verdict) } else { r.verdict.to_string() };
            e.emit(&text, &lagarias_fields(&r)?)?;
            Ok(e.finish()?)
        }
        Command::Lagarias { limit, .. } => {
            let limit = limit.expect("clap requires n or --limit");
            let mut p = Progress::new("lagarias");
            let s = rh::lagarias_scan_with(limit, d, &mut |n| p.tick(|| format!("n = {n} of {limit}")))?;
            emit_summary(cli.format, out, limit, d, &s)
        }
        Command::Gronwall { n, superabundant_limit } => {
            let mut e = Emitter::new(cli.format, &["n", "ratio_lo", "ratio_hi", "precision"], out)?;
            let targets: Vec<(BigUint, Option<SuperabundantRecord>)> = match superabundant_limit {
                Some(limit) => superabundant_structured(limit)
                    .into_iter()
                    .filter(|r| r.n > BigUint::from(2u32))
                    .map(|r| (r.n.clone(), Some(r)))
                    .collect(),
                None => n.iter().map(|&n| (BigUint::from(n), None)).collect(),
            };
            for (n, record) in targets {
                let g = match record {
                    Some(r) => rh::gronwall_ratio_factored(&r.factorization, d)?,
                    None => rh::gronwall_ratio(n.to_u64().expect("from u64"), d)?,
                };
                let text = format!("{n} {:.6} {g}", g.midpoint_f64());
                e.emit(&text, &interval_fields(&n, &g))?;
            }
            Ok(e.finish()?)
        }
        Command::AkbaryScan { limit } => {
            let reports = rh::akbary_scan(limit, d)?;
            let mut e = Emitter::new(cli.format, ROBIN_COLUMNS, out)?;
            for r in &reports {
                if r.verdict == rh::Verdict::Violates {
                    eprintln!("warning: n = {} violates Robin's inequality: Riemann Hypothesis counterexample candidate", r.n);
                }
                e.emit(&robin_text(r), &robin_fields(r))?;
            }
            Ok(e.finish()?)
        }
        Command::EvenPerfect { count } => {
            let mut e = Emitter::new(cli.format, &["exponent", "n"], out)?;
            for p in even_perfect_numbers(*count) {
                e.emit(&format!("2^{}(2^{}-1) = {}", p.exponent - 1, p.exponent, p.n), &[("exponent", json!(p.exponent)), ("n", big(&p.n))])?;
            }
            Ok(e.finish()?)
        }
        Command::Harmonic { n } => {
            let h = rh::harmonic(*n, d)?;
            let mut e = Emitter::new(cli.format, &["n", "exact_num", "exact_den", "lo", "hi", "precision"], out)?;
            let text = match &h.exact {
                Some(q) => format!("{q} ∈ {}", h.enclosure),
                None => format!("∈ {}", h.enclosure),
            };
            let (num, den) = match &h.exact {
                Some(q) => (big(q.numer()), big(q.denom())),
                None => (Value::Null, Value::Null),
            };
            e.emit(
                &text,
                &[
                    ("n", big(n)),
                    ("exact_num", num),
                    ("exact_den", den),
                    ("lo", big(h.enclosure.lo_decimal())),
                    ("hi", big(h.enclosure.hi_decimal())),
                    ("precision", json!(h.enclosure.precision_digits())),
                ],
            )?;
            Ok(e.finish()?)
        }
    }
}

fn index(format: Format, out: Out, n: u64) -> Result<(), Failure> {
    let f = factorize(n)?;
    let q = abundancy_index(&f);
    let c = classify(&f);
    let mut e = Emitter::new(
        format,
        &["n", "factorization", "sigma", "index_num", "index_den", "classification", "multiperfect_order"],
        out,
    )?;
    let [a, b] = ratio_fields("index_num", "index_den", &q);
    e.emit(
        &format!("{q} ≈ {}, {}", approx(&q), c.tag),
        &[
            ("n", big(n)),
            ("factorization", big(&f)),
            ("sigma", big(sigma(&f))),
            a,
            b,
            ("classification", big(c.tag)),
            ("multiperfect_order", c.multiperfect_order.map_or(Value::Null, |k| json!(k))),
        ],
    )?;
    Ok(e.finish()?)
}

fn sigma_cmd(format: Format, out: Out, n: u64) -> Result<(), Failure> {
    let f = factorize(n)?;
    let s = sigma(&f);
    let mut e = Emitter::new(format, &["n", "factorization", "sigma"], out)?;
    e.emit(&s.to_string(), &[("n", big(n)), ("factorization", big(&f)), ("sigma", big(&s))])?;
    Ok(e.finish()?)
}

fn classify_cmd(format: Format, out: Out, n: u64) -> Result<(), Failure> {
    let c = classify(&factorize(n)?);
    let text = match c.multiperfect_order {
        Some(k) => format!("{} (multiperfect of order {k})", c.tag),
        None => c.tag.to_string(),
    };
    let mut e = Emitter::new(format, &["n", "classification", "multiperfect_order"], out)?;
    e.emit(
        &text,
        &[
            ("n", big(n)),
            ("classification", big(c.tag)),
            ("multiperfect_order", c.multiperfect_order.map_or(Value::Null, |k| json!(k))),
        ],
    )?;
    Ok(e.finish()?)
}

fn bounds(format: Format, out: Out, n: u64) -> Result<(), Failure> {
    let f = factorize(n)?;
    let (lo, hi) = index_bounds(&f);
    let q = abundancy_index(&f);
    let mut e = Emitter::new(
        format,
        &["n", "factorization", "lower_num", "lower_den", "index_num", "index_den", "upper_num", "upper_den"],
        out,
    )?;
    let text = format!("{lo} <= {q} < {hi}  ({} <= {} < {})", approx(&lo), approx(&q), approx(&hi));
    let [a, b] = ratio_fields("lower_num", "lower_den", &lo);
    let [c, d] = ratio_fields("index_num", "index_den", &q);
    let [g, h] = ratio_fields("upper_num", "upper_den", &hi);
    e.emit(&text, &[("n", big(n)), ("factorization", big(&f)), a, b, c, d, g, h])?;
    Ok(e.finish()?)
}

const OUTLAW_COLUMNS: &[&str] = &["q_num", "q_den", "family_params", "status", "rule", "witness", "certificate", "search_bound"];

fn outlaw_fields(q: &ExactRatio, v: &OutlawVerdict, params: Value) -> Vec<Field> {
    let [a, b] = ratio_fields("q_num", "q_den", q);
    let (witness, certificate, bound) = match v {
        OutlawVerdict::Index { witness } => (big(witness), Value::Null, Value::Null),
        OutlawVerdict::Outlaw(c) => (Value::Null, big(c), Value::Null),
        OutlawVerdict::Unknown { search_bound } => (Value::Null, Value::Null, json!(search_bound)),
    };
    vec![
        a,
        b,
        ("family_params", params),
        ("status", big(v.status())),
        ("rule", v.rule().map_or(Value::Null, big)),
        ("witness", witness),
        ("certificate", certificate),
        ("search_bound", bound),
    ]
}

fn outlaw_family(format: Format, out: Out, family: &Family) -> Result<(), Failure> {
    let mut e = Emitter::new(format, OUTLAW_COLUMNS, out)?;
    let mut emit = |q: &ExactRatio, v: &OutlawVerdict, params: String| -> Result<(), Failure> {
        e.emit(&format!("{q}  {v}"), &outlaw_fields(q, v, big(params)))?;
        Ok(())
    };
    match family {
        Family::TwoP { p: Some(p), .. } => {
            let (q, v) = family_2p(*p)?;
            emit(&q, &v, format!("p={p}"))?;
        }
        Family::TwoP { up_to, .. } => {
            for p in primes_up_to(up_to.expect("clap requires p or --up-to")).into_iter().filter(|&p| p >= 5) {
                let (q, v) = family_2p(p)?;
                emit(&q, &v, format!("p={p}"))?;
            }
        }
        Family::Pq { p, q: Some(q), .. } => match family_pq(*p, *q)? {
            Some((value, v)) => emit(&value, &v, format!("p={p} q={q}"))?,
            None => return Err(Failure::Domain(format!("p={p}, q={q} is outside the family (twin primes or a shared factor)"))),
        },
        Family::Pq { p, up_to, one_mod_p, .. } => {
            let up_to = up_to.expect("clap requires q or --up-to");
            for q in primes_up_to(up_to).into_iter().filter(|&q| q > *p && (!one_mod_p || q % p == 1)) {
                if let Some((value, v)) = family_pq(*p, q)? {
                    emit(&value, &v, format!("p={p} q={q}"))?;
                }
            }
        }
        Family::EvenPerfect { n: Some(n), .. } => {
            let (q, v) = family_even_perfect(*n)?;
            emit(&q, &v, format!("N={n}"))?;
        }
        Family::EvenPerfect { count, .. } => {
            for p in even_perfect_numbers(count.expect("clap requires n or --count")) {
                let Some(n) = p.n.to_u64() else {
                    return Err(Failure::Domain(format!("{} exceeds 64 bits", p.n)));
                };
                let (q, v) = family_even_perfect(n)?;
                emit(&q, &v, format!("N={n}"))?;
            }
        }
    }
    Ok(e.finish()?)
}

fn superabundant(
    format: Format,
    out: Out,
    limit: &BigUint,
    method: MethodArg,
    resume: bool,
    cache: &std::path::Path,
) -> Result<(), Failure> {
    let cached = match method {
        MethodArg::Structured => Method::Structured,
        MethodArg::Brute | MethodArg::Both => Method::BruteForce,
    };
    if cached == Method::BruteForce {
        // Reject before touching the cache file.
        let small = limit.to_u64().filter(|&l| l <= abundancy::superabundant::BRUTEFORCE_MAX);
        if small.is_none() {
            return Err(abundancy::Error::LimitTooLarge {
                limit: limit.to_u64().unwrap_or(u64::MAX),
                max: abundancy::superabundant::BRUTEFORCE_MAX,
            }
            .into());
        }
    }
    let mut p = Progress::new("superabundant");
    let mut found = 0usize;
    let records = enumerate_with_cache(limit, cached, cache, resume, &mut |r| {
        found += 1;
        p.tick(|| format!("{found} new records, latest n = {}", r.n));
    })?;
    if method == MethodArg::Both {
        let other = superabundant_structured(limit);
        if let Some(i) = (0..records.len().max(other.len())).find(|&i| records.get(i) != other.get(i)) {
            return Err(Failure::Domain(format!("brute-force and structured enumeration disagree at record {}", i + 1)));
        }
        eprintln!("brute-force and structured enumeration agree ({} records)", records.len());
    }
    let mut e = Emitter::new(format, &["n", "factorization", "sigma", "index_num", "index_den"], out)?;
    for r in &records {
        let s = r.index.numer() * &r.n / r.index.denom();
        let [a, b] = ratio_fields("index_num", "index_den", &r.index);
        e.emit(
            &abundancy::cache::format_record(r),
            &[("n", big(&r.n)), ("factorization", big(&r.factorization)), ("sigma", big(s)), a, b],
        )?;
    }
    Ok(e.finish()?)
}

const ROBIN_COLUMNS: &[&str] = &["n", "sigma", "index_num", "index_den", "bound_lo", "bound_hi", "verdict", "precision"];

fn robin_fields(r: &RobinReport) -> Vec<Field> {
    let [a, b] = ratio_fields("index_num", "index_den", &r.index);
    vec![
        ("n", big(&r.n)),
        ("sigma", big(&r.sigma)),
        a,
        b,
        ("bound_lo", big(r.bound.lo_decimal())),
        ("bound_hi", big(r.bound.hi_decimal())),
        ("verdict", big(r.verdict)),
        ("precision", json!(r.precision_digits())),
    ]
}

fn robin_text(r: &RobinReport) -> String {
    format!("{} {} ≈ {} vs {:.4} {}", r.n, r.index, approx(&r.index), r.bound.midpoint_f64(), r.verdict)
}

const LAGARIAS_COLUMNS: &[&str] =
    &["n", "sigma", "index_num", "index_den", "bound_lo", "bound_hi", "verdict", "precision", "equality"];

fn lagarias_fields(r: &LagariasReport) -> Result<Vec<Field>, Failure> {
    let q = abundancy_index_of(r.n)?;
    let [a, b] = ratio_fields("index_num", "index_den", &q);
    Ok(vec![
        ("n", big(r.n)),
        ("sigma", big(&r.sigma)),
        a,
        b,
        ("bound_lo", big(r.bound.lo_decimal())),
        ("bound_hi", big(r.bound.hi_decimal())),
        ("verdict", big(r.verdict)),
        ("precision", json!(r.bound.precision_digits())),
        ("equality", json!(r.equality)),
    ])
}

fn interval_fields(n: &BigUint, g: &BoundInterval) -> [Field; 4] {
    [
        ("n", big(n)),
        ("ratio_lo", big(g.lo_decimal())),
        ("ratio_hi", big(g.hi_decimal())),
        ("precision", json!(g.precision_digits())),
    ]
}

fn emit_summary(format: Format, out: Out, limit: u64, d: u32, s: &ScanSummary) -> Result<(), Failure> {
    let mut e = Emitter::new(format, &["limit", "checked", "holds", "violates", "undecided", "precision"], out)?;
    let text = format!(
        "checked {} up to {limit}: {} Holds, {} Violates {:?}, {} Undecided {:?}",
        s.checked,
        s.holds,
        s.violates.len(),
        s.violates,
        s.undecided.len(),
        s.undecided
    );
    let list = |v: &[u64]| Value::Array(v.iter().map(big).collect());
    e.emit(
        &text,
        &[
            ("limit", big(limit)),
            ("checked", json!(s.checked)),
            ("holds", json!(s.holds)),
            ("violates", list(&s.violates)),
            ("undecided", list(&s.undecided)),
            ("precision", json!(d)),
        ],
    )?;
    Ok(e.finish()?)
}
