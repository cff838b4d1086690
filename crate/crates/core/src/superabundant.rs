//! Superabundant numbers: `n` with `I(m) < I(n)` for every `m < n`.
//!
//! Two independent enumerators:
//!
//! - [`superabundant_bruteforce`] sweeps `1..=limit` with a σ sieve and a
//!   running maximum of the index.
//! - [`superabundant_structured`] only visits `∏ p_i^{a_i}` over the first
//!   `k` primes with `a_1 >= a_2 >= ... >= a_k >= 1` (the Alaoglu–Erdős shape
//!   every superabundant number has), sorts them, and runs the same sweep.
//!
//! The sweep over candidates is exact because the running maximum of `I` on
//! `[1, c)` is always attained at a superabundant number, and those are all
//! candidates.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::arith::{abundancy_index, sigma, sigma_sieve};
use crate::ball::{self, Ball};
use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization};
use crate::primes::primes;
use crate::ratio::ExactRatio;

pub const BRUTEFORCE_MAX: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperabundantRecord {
    pub n: BigUint,
    pub factorization: Factorization,
    pub index: ExactRatio,
}

impl SuperabundantRecord {
    pub fn from_factorization(factorization: Factorization) -> Self {
        SuperabundantRecord {
            n: factorization.value(),
            index: abundancy_index(&factorization),
            factorization,
        }
    }

    /// `(σ(n), n)` recovered from the stored index.
    fn sigma_and_n(&self) -> (BigUint, BigUint) {
        (&self.index.numer().clone() * (&self.n / self.index.denom()), self.n.clone())
    }
}

/// Running maximum of `σ(n)/n`, compared by cross-multiplication.
struct Sweep {
    best_sigma: BigUint,
    best_n: BigUint,
}

impl Sweep {
    fn new(resume: Option<&SuperabundantRecord>) -> Self {
        match resume {
            Some(r) => {
                let (s, n) = r.sigma_and_n();
                Sweep { best_sigma: s, best_n: n }
            }
            // I(0) := 0 so that n = 1 is the first record.
            None => Sweep { best_sigma: BigUint::from(0u32), best_n: BigUint::one() },
        }
    }

    fn beats(&mut self, sigma_n: &BigUint, n: &BigUint) -> bool {
        if sigma_n * &self.best_n > &self.best_sigma * n {
            self.best_sigma = sigma_n.clone();
            self.best_n = n.clone();
            true
        } else {
            false
        }
    }
}

/// Brute-force sweep of `1..=limit`, continuing after `resume` if given.
pub fn superabundant_bruteforce_from(
    limit: u64,
    resume: Option<&SuperabundantRecord>,
    sink: &mut dyn FnMut(SuperabundantRecord) -> Result<()>,
) -> Result<()> {
    if limit > BRUTEFORCE_MAX {
        return Err(Error::LimitTooLarge { limit, max: BRUTEFORCE_MAX });
    }
    let start = match resume {
        Some(r) => r.n.to_u64().ok_or_else(|| Error::TooLarge(r.n.to_string()))? + 1,
        None => 1,
    };
    if start > limit {
        return Ok(());
    }
    let sig = sigma_sieve(limit as usize);
    // u128 cross-multiplication: σ(n) < 5n for n <= 10^7.
    let (mut best_s, mut best_n) = match resume {
        Some(r) => {
            let (s, n) = r.sigma_and_n();
            (s.to_u128().expect("small"), n.to_u128().expect("small"))
        }
        None => (0u128, 1u128),
    };
    for n in start..=limit {
        let s = sig[n as usize] as u128;
        if s * best_n > best_s * n as u128 {
            best_s = s;
            best_n = n as u128;
            sink(SuperabundantRecord::from_factorization(factorize(n)?))?;
        }
    }
    Ok(())
}

/// All superabundant `n <= limit` by direct sweep; `limit <= 10^7`.
pub fn superabundant_bruteforce(limit: u64) -> Result<Vec<SuperabundantRecord>> {
    let mut out = Vec::new();
    superabundant_bruteforce_from(limit, None, &mut |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// A candidate `∏ p_i^{a_i}` with non-increasing exponents over a prime prefix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub n: BigUint,
    pub exponents: Vec<u32>,
}

/// Every `n <= limit` of the form `2^{a_1} 3^{a_2} ... p_k^{a_k}` with
/// `a_1 >= ... >= a_k >= 1`, including `n = 1`, sorted by value.
pub fn structured_candidates(limit: &BigUint) -> Vec<Candidate> {
    let mut ps: Vec<BigUint> = Vec::new();
    let mut primorial = BigUint::one();
    for p in primes() {
        primorial *= p;
        if &primorial > limit {
            break;
        }
        ps.push(BigUint::from(p));
    }
    let mut out = vec![Candidate { n: BigUint::one(), exponents: Vec::new() }];
    let mut exps = Vec::new();
    descend(&ps, 0, u32::MAX, BigUint::one(), limit, &mut exps, &mut out);
    out.sort_unstable();
    out
}

fn descend(
    ps: &[BigUint],
    idx: usize,
    max_exp: u32,
    current: BigUint,
    limit: &BigUint,
    exps: &mut Vec<u32>,
    out: &mut Vec<Candidate>,
) {
    let Some(p) = ps.get(idx) else { return };
    let mut value = current;
    for a in 1..=max_exp {
        value *= p;
        if &value > limit {
            break;
        }
        exps.push(a);
        out.push(Candidate { n: value.clone(), exponents: exps.clone() });
        descend(ps, idx + 1, a, value.clone(), limit, exps, out);
        exps.pop();
    }
}

/// Structured sweep over [`structured_candidates`], continuing after
/// `resume` if given.
pub fn superabundant_structured_from(
    limit: &BigUint,
    resume: Option<&SuperabundantRecord>,
    sink: &mut dyn FnMut(SuperabundantRecord) -> Result<()>,
) -> Result<()> {
    let mut sweep = Sweep::new(resume);
    let floor = resume.map(|r| r.n.clone());
    for c in structured_candidates(limit) {
        if floor.as_ref().is_some_and(|f| &c.n <= f) {
            continue;
        }
        let f = Factorization::from_prime_prefix(&c.exponents)?;
        let s = sigma(&f);
        if sweep.beats(&s, &c.n) {
            let index = ExactRatio::new(s, c.n.clone())?;
            sink(SuperabundantRecord { n: c.n, factorization: f, index })?;
        }
    }
    Ok(())
}

/// All superabundant `n <= limit`.
pub fn superabundant_structured(limit: &BigUint) -> Vec<SuperabundantRecord> {
    let mut out = Vec::new();
    superabundant_structured_from(limit, None, &mut |r| {
        out.push(r);
        Ok(())
    })
    .expect("in-memory sink cannot fail");
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperabundantCount {
    pub count: u64,
    /// `count >= ln x`, decided exactly as `x <= e^count`.
    pub log_lower_bound_holds: bool,
}

/// `S(x)`, the number of superabundant `n <= x`.
pub fn count_superabundant(x: &BigUint) -> Result<SuperabundantCount> {
    if x < &BigUint::one() {
        return Err(Error::Zero);
    }
    let count = superabundant_structured(x).len() as u64;
    Ok(SuperabundantCount { count, log_lower_bound_holds: at_most_exp(x, count) })
}

/// `x <= e^k`, certified. `e^k` is irrational for `k >= 1`, so escalating
/// precision always separates it from the integer `x`.
pub fn at_most_exp(x: &BigUint, k: u64) -> bool {
    if k == 0 {
        return x <= &BigUint::one();
    }
    let mut prec = 64 + (k as f64 * std::f64::consts::LOG2_E).ceil() as u32;
    loop {
        let e = ball::exp(&Ball::exact_int(k, prec));
        match e.cmp_ratio(x, &BigUint::one()) {
            std::cmp::Ordering::Greater => return true,
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => prec *= 2,
        }
    }
}

/// Checks the structural shape of a factorization: prime support is a
/// prefix of the primes and exponents are non-increasing.
pub fn has_superabundant_shape(f: &Factorization) -> bool {
    let v = f.exponent_vector();
    v.iter().all(|&a| a >= 1) && v.windows(2).all(|w| w[0] >= w[1])
}
