//! Fixed workloads shared by the benches, so numbers stay comparable
//! between runs.

use abundancy::primes::next_prime;
use abundancy::ExactRatio;

/// Products of two primes of about `bits / 2` bits each: the slow path of
/// factorization (trial division fails, rho has to split).
pub fn semiprimes(bits: u32, count: usize) -> Vec<u64> {
    assert!((8..=64).contains(&bits));
    let half = bits / 2;
    let mut p = 1u64 << (half - 1);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        p = next_prime(p);
        let q = next_prime(p + (p >> 3));
        match p.checked_mul(q) {
            Some(n) => out.push(n),
            None => break,
        }
    }
    out
}

/// A mix for the outlaw classifier: Weiner outlaws, family members,
/// indices with small witnesses, and `(p+2)/p` cases that end as Unknown.
pub fn outlaw_mix() -> Vec<ExactRatio> {
    ["5/4", "16/15", "19/10", "187/122", "73/55", "7/3", "2", "3", "9/7", "5/3"]
        .iter()
        .map(|s| s.parse().expect("valid rational"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use abundancy::primes::is_prime;

    #[test]
    fn semiprimes_have_two_prime_factors() {
        let v = semiprimes(60, 8);
        assert_eq!(v.len(), 8);
        for n in v {
            let f = abundancy::factorize(n).unwrap();
            assert_eq!(f.pairs().len(), 2);
            assert!(f.primes().all(is_prime));
            assert!(n >= 1 << 56);
        }
    }

    #[test]
    fn mix_parses() {
        assert_eq!(outlaw_mix().len(), 10);
    }
}
