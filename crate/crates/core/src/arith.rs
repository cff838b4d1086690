//! Divisor sums, the abundancy index and its classical bounds.
//!
//! Everything here is exact: σ is built from the prime-power closed form
//! `(p^(a+1) - 1) / (p - 1)` and every comparison is a rational comparison.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::factor::{factorize, Factorization};
use crate::primes::primes;
use crate::ratio::ExactRatio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Perfect,
    Abundant,
    Deficient,
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tag::Perfect => "Perfect",
            Tag::Abundant => "Abundant",
            Tag::Deficient => "Deficient",
        })
    }
}

/// Perfect/abundant/deficient by exact comparison of `I(n)` with 2.
///
/// `multiperfect_order` is `I(n)` when that is an integer `>= 2`. For
/// `n = 1` the index is the integer 1, which is not a multiperfect order,
/// so the field stays empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tag: Tag,
    pub multiperfect_order: Option<u64>,
}

/// `σ(p^a)` via the geometric closed form.
pub fn sigma_prime_power(p: u64, a: u32) -> BigUint {
    let p = BigUint::from(p);
    (p.pow(a + 1) - 1u32) / (p - 1u32)
}

/// Sum of divisors from a factorization.
pub fn sigma(f: &Factorization) -> BigUint {
    f.pairs()
        .iter()
        .map(|&(p, a)| sigma_prime_power(p, a))
        .fold(BigUint::one(), |acc, s| acc * s)
}

/// σ(n) for `u64` inputs where the result fits `u128`.
pub fn sigma_u64(n: u64) -> Result<u128> {
    let f = factorize(n)?;
    Ok(f
        .pairs()
        .iter()
        .map(|&(p, a)| {
            let p = p as u128;
            // (p^(a+1) - 1)/(p - 1) by Horner: 1 + p(1 + p(...)).
            (0..a).fold(1u128, |acc, _| acc * p + 1)
        })
        .product())
}

/// Oracle: σ(n) by walking divisor pairs `(d, n/d)` with `d <= sqrt(n)`.
pub fn sigma_by_divisor_enumeration(n: u64) -> BigUint {
    let mut total: u128 = 0;
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            total += d as u128;
            if e != d {
                total += e as u128;
            }
        }
        d += 1;
    }
    BigUint::from(total)
}

/// `Σ_{d | n} 1/d`, computed directly over the divisors of `n`.
pub fn reciprocal_divisor_sum(n: u64) -> ExactRatio {
    let mut numer = BigUint::zero();
    let nn = BigUint::from(n);
    // Over the common denominator n: 1/d = (n/d)/n.
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            numer += n / d;
            if n / d != d {
                numer += d;
            }
        }
        d += 1;
    }
    ExactRatio::new(numer, nn).expect("n >= 1")
}

/// Divisor-sum sieve: `out[n] = σ(n)` for `0 <= n <= limit` (`out[0] = 0`).
pub fn sigma_sieve(limit: usize) -> Vec<u64> {
    let mut out = vec![0u64; limit + 1];
    for d in 1..=limit {
        for m in (d..=limit).step_by(d) {
            out[m] += d as u64;
        }
    }
    out
}

/// `I(n) = σ(n)/n`, reduced.
pub fn abundancy_index(f: &Factorization) -> ExactRatio {
    ExactRatio::new(sigma(f), f.value()).expect("value is positive")
}

pub fn abundancy_index_of(n: u64) -> Result<ExactRatio> {
    Ok(abundancy_index(&factorize(n)?))
}

pub fn classify(f: &Factorization) -> Classification {
    let index = abundancy_index(f);
    let two = ExactRatio::from_integer(2u32);
    let tag = match index.cmp(&two) {
        std::cmp::Ordering::Equal => Tag::Perfect,
        std::cmp::Ordering::Greater => Tag::Abundant,
        std::cmp::Ordering::Less => Tag::Deficient,
    };
    let multiperfect_order = index
        .is_integer()
        .then(|| index.numer().to_u64())
        .flatten()
        .filter(|&k| k >= 2);
    Classification { tag, multiperfect_order }
}

/// `(∏ (p+1)/p, ∏ p/(p-1))` over the distinct primes of `n`; these bracket `I(n)`.
pub fn index_bounds(f: &Factorization) -> (ExactRatio, ExactRatio) {
    let lower = f
        .primes()
        .map(|p| ExactRatio::new(p + 1, p).expect("p > 0"))
        .product();
    let upper = f
        .primes()
        .map(|p| ExactRatio::new(p, p - 1).expect("p > 1"))
        .product();
    (lower, upper)
}

/// Factorization of `lcm(1, 2, ..., n)`: each prime `p <= n` to its largest
/// power not exceeding `n`.
pub fn lcm_up_to(n: u64) -> Factorization {
    let pairs = primes()
        .take_while(|&p| p <= n)
        .map(|p| {
            let mut a = 1;
            let mut pk = p;
            while pk <= n / p {
                pk *= p;
                a += 1;
            }
            (p, a)
        })
        .collect();
    Factorization::from_pairs(pairs).expect("consecutive primes")
}

/// `I(lcm(1..n))`, the first unboundedness witness: it dominates `H_n`
/// because every `1/i`, `i <= n`, appears among the reciprocal divisors.
pub fn index_of_reciprocal_sum(n: u64) -> Result<ExactRatio> {
    if n == 0 {
        return Err(crate::error::Error::Zero);
    }
    Ok(abundancy_index(&lcm_up_to(n)))
}

/// Product of the first `k` primes.
pub fn primorial(k: usize) -> Factorization {
    Factorization::from_pairs(primes().take(k).map(|p| (p, 1)).collect()).expect("consecutive primes")
}

/// `H_n = Σ_{i=1}^n 1/i`, exactly. Summed over the common denominator
/// `lcm(1..n)` and reduced once.
pub fn harmonic_exact(n: u64) -> ExactRatio {
    if n == 0 {
        return ExactRatio::from_integer(0u32);
    }
    let l = lcm_up_to(n).value();
    let numer: BigUint = (1..=n).map(|i| &l / i).sum();
    ExactRatio::new(numer, l).expect("lcm positive")
}
