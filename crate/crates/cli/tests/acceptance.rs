//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use abundancy::arith::{
    abundancy_index_of, harmonic_exact, index_of_reciprocal_sum, sigma_by_divisor_enumeration, sigma_sieve,
};
use abundancy::outlaw::{classify_rational, family_2p, family_pq, weiner_outlaw_check};
use abundancy::primes::{gcd, is_prime, primes_up_to};
use abundancy::rh::{self, Verdict};
use abundancy::superabundant::{count_superabundant, superabundant_bruteforce, superabundant_structured};
use abundancy::{abundancy_index, factorize, index_bounds, sigma, ExactRatio, OutlawRule, OutlawVerdict};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn r(n: u64, d: u64) -> ExactRatio {
    ExactRatio::new(n, d).unwrap()
}

fn list(s: &str) -> Vec<ExactRatio> {
    s.split(',').map(|x| x.trim().parse().unwrap()).collect()
}

fn superabundant_golden() -> Check {
    let t = Instant::now();
    let brute: Vec<u64> = superabundant_bruteforce(200).unwrap().iter().map(|r| r.n.to_u64().unwrap()).collect();
    let structured: Vec<u64> =
        superabundant_structured(&BigUint::from(200u32)).iter().map(|r| r.n.to_u64().unwrap()).collect();
    let elapsed = t.elapsed();
    let golden = [1, 2, 4, 6, 12, 24, 36, 48, 60, 120, 180];
    ensure(brute == golden, || format!("brute force gave {brute:?}"))?;
    ensure(structured == golden, || format!("structured gave {structured:?}"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("11 records in {elapsed:.2?}"))
}

fn oracle_equivalence() -> Check {
    let t = Instant::now();
    let brute = superabundant_bruteforce(1_000_000).unwrap();
    let structured = superabundant_structured(&BigUint::from(1_000_000u32));
    ensure(brute == structured, || "superabundant lists differ".into())?;
    let sieve = sigma_sieve(1_000_000);
    for n in 1..=1_000_000u64 {
        let multiplicative = sigma(&factorize(n).unwrap());
        let walked = sigma_by_divisor_enumeration(n);
        ensure(multiplicative == walked && walked == BigUint::from(sieve[n as usize]), || {
            format!("σ({n}): {multiplicative} vs {walked} vs {}", sieve[n as usize])
        })?;
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{} superabundant records, 10^6 σ values, {elapsed:.2?}", brute.len()))
}

fn outlaw_golden() -> Check {
    let weiner = list("5/4,7/6,9/8,10/9,11/6,11/8,11/9,11/10,13/8,13/10,13/12,15/14,16/15");
    for q in &weiner {
        ensure(weiner_outlaw_check(q).unwrap(), || format!("{q} fails the Weiner test"))?;
        let v = classify_rational(q, 1_000_000).unwrap();
        ensure(v.rule() == Some(OutlawRule::WeinerRange), || format!("{q} -> {v}"))?;
    }
    let published_2p = list(
        "19/10,25/14,37/22,43/26,55/34,61/38,73/46,91/58,97/62,115/74,127/82,133/86,145/94,163/106,181/118,187/122",
    );
    let ours: Vec<ExactRatio> =
        primes_up_to(61).into_iter().filter(|&p| p >= 5).map(|p| family_2p(p).unwrap().0).collect();
    ensure(ours == published_2p, || format!("2p family: {ours:?}"))?;
    let pq: Vec<ExactRatio> = [11u64, 31, 41, 61].iter().map(|&q| family_pq(5, q).unwrap().unwrap().0).collect();
    ensure(pq == [r(73, 55), r(193, 155), r(253, 205), r(373, 305)], || format!("pq family p=5: {pq:?}"))?;
    for (p, w) in [(2u64, 6u64), (3, 18)] {
        let (q, v) = family_2p(p).unwrap();
        ensure(v == OutlawVerdict::Index { witness: w }, || format!("p={p}: {v}"))?;
        ensure(abundancy_index_of(w).unwrap() == q, || format!("I({w}) != {q}"))?;
    }
    Ok(format!("{} Weiner, {} 2p, 4 pq, 2 witnesses", weiner.len(), published_2p.len()))
}

fn robin_threshold() -> Check {
    let v5040 = rh::robin_check(5040, 50).unwrap().verdict;
    let v5041 = rh::robin_check(5041, 50).unwrap().verdict;
    ensure(v5040 == Verdict::Violates, || format!("5040: {v5040}"))?;
    ensure(v5041 == Verdict::Holds, || format!("5041: {v5041}"))?;
    let below = rh::exceptions_below(5041, 50).unwrap();
    ensure(!below.is_empty(), || "no exceptions below 5041".into())?;
    let t = Instant::now();
    let all = rh::exceptions_below(1_000_000, 50).unwrap();
    let elapsed = t.elapsed();
    ensure(all.iter().all(|&n| n < 5041), || format!("exception above threshold: {all:?}"))?;
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!("{} exceptions, largest {}, scan to 10^6 in {elapsed:.2?}", all.len(), all.last().unwrap()))
}

fn unconditional() -> Check {
    let s = rh::robin_unconditional_scan(100_000, 50).unwrap();
    ensure(s.checked == 99_998 && s.holds == s.checked, || {
        format!("violates {:?}, undecided {:?}", s.violates, s.undecided)
    })?;
    Ok(format!("{} Holds, 0 Undecided", s.holds))
}

fn lagarias() -> Check {
    let one = rh::lagarias_check(1, 50).unwrap();
    ensure(one.equality && one.verdict == Verdict::Holds, || "n = 1 not exact equality".into())?;
    let s = rh::lagarias_scan(100_000, 50).unwrap();
    ensure(s.checked == 100_000 && s.holds == s.checked, || {
        format!("violates {:?}, undecided {:?}", s.violates, s.undecided)
    })?;
    Ok(format!("{} Holds, equality at n = 1", s.holds))
}

fn property_suites() -> Check {
    let index = |n: u64| abundancy_index_of(n).unwrap();
    let mut counts = Vec::new();

    let mut cases = 0;
    for m in 1..=200u64 {
        for n in m..=200u64 {
            if gcd(m, n) == 1 {
                ensure(index(m * n) == &index(m) * &index(n), || format!("I({m}·{n})"))?;
                cases += 1;
            }
        }
    }
    counts.push(("multiplicativity", cases));

    let sieve = sigma_sieve(50 * 10_000);
    let mut cases = 0;
    for n in 1..=10_000u64 {
        for k in 2..=50u64 {
            ensure(sieve[(k * n) as usize] as u128 > k as u128 * sieve[n as usize] as u128, || {
                format!("I({k}·{n}) <= I({n})")
            })?;
            cases += 1;
        }
    }
    counts.push(("monotonicity", cases));

    let mut cases = 0;
    for n in 1..=100_000u64 {
        let f = factorize(n).unwrap();
        let (lo, hi) = index_bounds(&f);
        let i = abundancy_index(&f);
        // Both products are empty at n = 1.
        ensure(lo <= i && (i < hi || n == 1), || format!("bounds for {n}"))?;
        cases += 1;
    }
    counts.push(("bound containment", cases));

    // I(m · lcm(1..N)) >= I(lcm(1..N)) >= H_N; the multiples m <= 10 widen the suite.
    let mut cases = 0;
    for n in 1..=100u64 {
        let h = harmonic_exact(n);
        let base = index_of_reciprocal_sum(n).unwrap();
        ensure(base >= h, || format!("N = {n}"))?;
        let lcm = abundancy::arith::lcm_up_to(n);
        for m in 1..=10u64 {
            let f = lcm.mul(&factorize(m).unwrap());
            ensure(abundancy_index(&f) >= h, || format!("{m}·lcm(1..{n})"))?;
            cases += 1;
        }
    }
    counts.push(("lcm vs harmonic", cases));

    let mut cases = 0;
    for k in 2..=10_000u64 {
        let v = classify_rational(&r(k + 1, k), 1_000_000).unwrap();
        let is_index = matches!(v, OutlawVerdict::Index { .. });
        ensure(is_index == is_prime(k) && (is_index || v.is_outlaw()), || format!("({}/{k}) -> {v}", k + 1))?;
        cases += 1;
    }
    counts.push(("(k+1)/k", cases));

    ensure(counts.iter().all(|&(_, c)| c >= 1000), || format!("{counts:?}"))?;
    Ok(counts.iter().map(|(name, c)| format!("{name} {c}")).collect::<Vec<_>>().join(", "))
}

fn superabundant_count() -> Check {
    let mut parts = Vec::new();
    for e in 2..=6u32 {
        let x = BigUint::from(10u32).pow(e);
        let c = count_superabundant(&x).unwrap();
        ensure(c.log_lower_bound_holds, || format!("S(10^{e}) = {} < ln 10^{e}", c.count))?;
        parts.push(format!("S(10^{e})={}", c.count));
    }
    Ok(parts.join(" "))
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("sa.cache");
    let cache = cache.to_str().unwrap();
    let scans: &[&[&str]] = &[
        &["superabundant", "--limit", "1000000", "--method", "both"],
        &["count", "1000000"],
        &["exceptions", "100000"],
        &["robin-unconditional", "--limit", "20000"],
        &["lagarias", "--limit", "20000"],
        &["akbary-scan", "1000000"],
        &["gronwall", "--superabundant-limit", "1000000"],
        &["outlaw-family", "2p", "--up-to", "1000"],
        &["outlaw-family", "pq", "5", "--up-to", "3000"],
        &["even-perfect", "--count", "10"],
    ];
    for args in scans {
        let mut full = vec!["--format", "json", "--cache-path", cache];
        full.extend_from_slice(args);
        let a = common::run(&full);
        let b = common::run(&full);
        ensure(a.status.success(), || format!("{args:?}: {}", String::from_utf8_lossy(&a.stderr)))?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} scan subcommands", scans.len()))
}

fn main() {
    let criteria: &[Criterion] = &[
        ("superabundant golden list", superabundant_golden),
        ("oracle equivalence", oracle_equivalence),
        ("outlaw golden lists", outlaw_golden),
        ("robin threshold", robin_threshold),
        ("unconditional bound", unconditional),
        ("lagarias inequality", lagarias),
        ("property suites", property_suites),
        ("S(x) >= log x", superabundant_count),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
