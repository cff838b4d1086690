//! Prime factorizations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::primes::{is_prime, pollard_brent, small_primes, TRIAL_LIMIT};

/// `n = ∏ p_i^{a_i}` as `(p_i, a_i)` pairs with strictly increasing primes.
/// The empty list is `n = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Factorization { pairs: Vec::new() }
    }

    /// Validates and wraps `(prime, exponent)` pairs.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for (i, &(p, a)) in pairs.iter().enumerate() {
            if a == 0 {
                return Err(Error::InvalidFactorization(format!("exponent of {p} is 0")));
            }
            if !is_prime(p) {
                return Err(Error::InvalidFactorization(format!("{p} is not prime")));
            }
            if i > 0 && pairs[i - 1].0 >= p {
                return Err(Error::InvalidFactorization("primes not strictly increasing".into()));
            }
        }
        Ok(Factorization { pairs })
    }

    /// Factorization over the first `exponents.len()` primes; trailing zero
    /// exponents are dropped, interior zeros are not allowed.
    pub fn from_prime_prefix(exponents: &[u32]) -> Result<Self> {
        let pairs = crate::primes::primes()
            .zip(exponents.iter().copied())
            .filter(|&(_, a)| a > 0)
            .collect::<Vec<_>>();
        Factorization::from_pairs(pairs)
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `∏ p^a`, exactly.
    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, &(p, a)| acc * BigUint::from(p).pow(a))
    }

    pub fn value_u64(&self) -> Option<u64> {
        self.value().to_u64()
    }

    /// Exponents over consecutive primes 2, 3, 5, ... up to the largest
    /// prime present, with zeros for gaps.
    pub fn exponent_vector(&self) -> Vec<u32> {
        let Some(&(largest, _)) = self.pairs.last() else {
            return Vec::new();
        };
        let mut it = self.pairs.iter().peekable();
        crate::primes::primes()
            .take_while(|&p| p <= largest)
            .map(|p| match it.peek() {
                Some(&&(q, a)) if q == p => {
                    it.next();
                    a
                }
                _ => 0,
            })
            .collect()
    }

    /// Multiplies two factorizations (exponents of shared primes add).
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() || j < other.pairs.len() {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (Some(&(p, a)), Some(&(q, b))) if p == q => {
                    pairs.push((p, a + b));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, a)), Some(&(q, _))) if p < q => {
                    pairs.push((p, a));
                    i += 1;
                }
                (Some(&(p, a)), None) => {
                    pairs.push((p, a));
                    i += 1;
                }
                (_, Some(&(q, b))) => {
                    pairs.push((q, b));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Factorization { pairs }
    }
}

/// `"2^4*3^2*5*7"`; `"1"` for the empty factorization.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, a)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFactorization(s.to_string());
        if s == "1" {
            return Ok(Factorization::one());
        }
        let pairs = s
            .split('*')
            .map(|term| {
                let (p, a) = term.split_once('^').unwrap_or((term, "1"));
                Ok((p.parse().map_err(|_| bad())?, a.parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Factorization::from_pairs(pairs)
    }
}

/// Factors `n >= 1`: trial division by primes below 10^6, then Pollard–Brent
/// on the remaining cofactor. Every reported prime passes [`is_prime`].
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut pairs = Vec::new();
    let mut m = n;
    for &p in small_primes() {
        if p * p > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
    }
    if m > 1 {
        if m < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(m) {
            // Either trial division exhausted sqrt(m), or m is certified prime.
            pairs.push((m, 1));
        } else {
            let mut big = Vec::new();
            split_large(m, &mut big);
            big.sort_unstable();
            for p in big {
                match pairs.last_mut() {
                    Some((q, a)) if *q == p => *a += 1,
                    _ => pairs.push((p, 1)),
                }
            }
        }
    }
    Ok(Factorization { pairs })
}

fn split_large(m: u64, out: &mut Vec<u64>) {
    if is_prime(m) {
        out.push(m);
        return;
    }
    let d = pollard_brent(m);
    split_large(d, out);
    split_large(m / d, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert!(factorize(1).unwrap().is_one());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        let f = factorize(5040).unwrap();
        assert_eq!(f.pairs(), &[(2, 4), (3, 2), (5, 1), (7, 1)]);
        assert_eq!(f.value_u64(), Some(5040));
        assert_eq!(factorize(0), Err(Error::Zero));
    }

    #[test]
    fn large_inputs() {
        let n = 1_000_003u64 * 1_000_033 * 7;
        let f = factorize(n).unwrap();
        assert_eq!(f.pairs(), &[(7, 1), (1_000_003, 1), (1_000_033, 1)]);
        let n = 1_000_003u64 * 1_000_003 * 1_000_003;
        assert_eq!(factorize(n).unwrap().pairs(), &[(1_000_003, 3)]);
        let f = factorize(u64::MAX).unwrap();
        assert_eq!(f.value_u64(), Some(u64::MAX));
        assert_eq!(f.to_string(), "3*5*17*257*641*65537*6700417");
    }

    #[test]
    fn display_parse() {
        let f = factorize(5040).unwrap();
        assert_eq!(f.to_string(), "2^4*3^2*5*7");
        assert_eq!("2^4*3^2*5*7".parse::<Factorization>().unwrap(), f);
        assert_eq!("1".parse::<Factorization>().unwrap(), Factorization::one());
        assert!("4^2".parse::<Factorization>().is_err());
        assert!("3*2".parse::<Factorization>().is_err());
        assert!("2^0".parse::<Factorization>().is_err());
    }

    #[test]
    fn exponent_vector_has_gaps() {
        assert_eq!(factorize(2 * 2 * 7).unwrap().exponent_vector(), vec![2, 0, 0, 1]);
        assert!(Factorization::one().exponent_vector().is_empty());
        assert_eq!(Factorization::from_prime_prefix(&[4, 2, 1, 1]).unwrap(), factorize(5040).unwrap());
    }

    #[test]
    fn multiply() {
        let a = factorize(12).unwrap();
        let b = factorize(45).unwrap();
        assert_eq!(a.mul(&b), factorize(540).unwrap());
    }
}
