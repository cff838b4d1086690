//! Even perfect numbers `2^(p-1) (2^p - 1)` from Mersenne primes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::primes::primes;

/// Lucas–Lehmer test: is `2^p - 1` prime? `p` must itself be prime.
pub fn lucas_lehmer(p: u32) -> bool {
    if p == 2 {
        return true;
    }
    let m = (BigUint::one() << p) - 1u32;
    let mut s = BigUint::from(4u32);
    for _ in 0..p - 2 {
        s = &s * &s + &m - 2u32;
        // x mod 2^p - 1 by folding the high bits onto the low bits.
        while s.bits() > p as u64 {
            s = (&s & &m) + (&s >> p);
        }
        if s == m {
            s = BigUint::zero();
        }
    }
    s.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenPerfect {
    /// Mersenne exponent `p`.
    pub exponent: u32,
    pub n: BigUint,
}

/// The first `count` even perfect numbers in increasing order.
pub fn even_perfect_numbers(count: usize) -> Vec<EvenPerfect> {
    primes()
        .map(|p| p as u32)
        .filter(|&p| lucas_lehmer(p))
        .take(count)
        .map(|p| EvenPerfect {
            exponent: p,
            n: (BigUint::one() << (p - 1)) * ((BigUint::one() << p) - 1u32),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_mersenne_exponents() {
        let found: Vec<u32> = primes().take_while(|&p| p < 700).map(|p| p as u32).filter(|&p| lucas_lehmer(p)).collect();
        assert_eq!(found, vec![2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607]);
    }

    #[test]
    fn first_four() {
        let got: Vec<(u32, u64)> = even_perfect_numbers(4)
            .into_iter()
            .map(|e| (e.exponent, u64::try_from(e.n).unwrap()))
            .collect();
        assert_eq!(got, vec![(2, 6), (3, 28), (5, 496), (7, 8128)]);
        assert_eq!(even_perfect_numbers(1)[0].n, BigUint::from(6u32));
    }
}
