use abundancy::arith::{
    abundancy_index_of, harmonic_exact, index_of_reciprocal_sum, primorial, reciprocal_divisor_sum,
    sigma_by_divisor_enumeration, sigma_prime_power, sigma_u64,
};
use abundancy::perfect::even_perfect_numbers;
use abundancy::primes::{gcd, is_prime, primes_up_to};
use abundancy::{abundancy_index, classify, factorize, index_bounds, sigma, ExactRatio, Tag};
use num_bigint::BigUint;
use proptest::prelude::*;

fn index(n: u64) -> ExactRatio {
    abundancy_index_of(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn multiplicative_on_coprime_pairs(m in 1u64..1_000_000, mut n in 1u64..1_000_000) {
        // strip the primes n shares with m
        let mut g = gcd(m, n);
        while g > 1 {
            n /= g;
            g = gcd(m, n);
        }
        prop_assert_eq!(index(m * n), &index(m) * &index(n));
    }

    #[test]
    fn proper_multiples_raise_the_index(n in 1u64..10_000_000, k in 2u64..1000) {
        prop_assert!(index(k * n) > index(n));
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..u64::MAX) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.value_u64(), Some(n));
        prop_assert!(f.primes().all(is_prime));
        prop_assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn factorization_text_roundtrip(n in 1u64..u64::MAX) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.to_string().parse::<abundancy::Factorization>().unwrap(), f);
    }
}

#[test]
fn multiplicativity_exhaustive_small() {
    let mut cases = 0;
    for m in 1..=300u64 {
        for n in m..=300u64 {
            if gcd(m, n) == 1 {
                assert_eq!(index(m * n), &index(m) * &index(n), "{m} {n}");
                cases += 1;
            }
        }
    }
    assert!(cases >= 1000);
}

#[test]
fn monotonicity_sweep() {
    let sig: Vec<u128> = (0..=500_000u64).map(|n| if n == 0 { 0 } else { sigma_u64(n).unwrap() }).collect();
    for n in 1..=10_000u64 {
        assert_eq!(index(n), index(n));
        for k in 2..=50u64 {
            let kn = k * n;
            // σ(kn)/(kn) > σ(n)/n  <=>  σ(kn) > k σ(n)
            assert!(sig[kn as usize] > k as u128 * sig[n as usize], "{k} * {n}");
        }
    }
}

#[test]
fn divisor_reciprocal_identity() {
    for n in 1..=100_000u64 {
        let s = reciprocal_divisor_sum(n);
        let scaled = &s * &ExactRatio::from_integer(n);
        assert!(scaled.is_integer());
        assert_eq!(scaled.numer(), &BigUint::from(sigma_u64(n).unwrap()), "{n}");
    }
}

#[test]
fn bounds_contain_index() {
    for n in 1..=100_000u64 {
        let f = factorize(n).unwrap();
        let (lo, hi) = index_bounds(&f);
        let i = abundancy_index(&f);
        assert!(lo <= i && i <= hi, "{n}");
    }
}

#[test]
fn prime_power_bounds() {
    for p in primes_up_to(100) {
        let lo = ExactRatio::new(p + 1, p).unwrap();
        let hi = ExactRatio::new(p, p - 1).unwrap();
        for a in 1..=20u32 {
            let i = ExactRatio::new(sigma_prime_power(p, a), BigUint::from(p).pow(a)).unwrap();
            assert!(lo <= i && i < hi, "{p}^{a}");
            assert_eq!(i == lo, a == 1);
        }
    }
}

#[test]
fn unboundedness_witnesses() {
    for n in 1..=100u64 {
        assert!(index_of_reciprocal_sum(n).unwrap() >= harmonic_exact(n), "{n}");
    }
    for k in 1..=15 {
        let f = primorial(k);
        let reciprocal_sum: ExactRatio = f.primes().map(|p| ExactRatio::new(1u32, p).unwrap()).sum();
        let product: ExactRatio = f.primes().map(|p| ExactRatio::new(p + 1, p).unwrap()).product();
        assert_eq!(abundancy_index(&f), product);
        assert!(product > reciprocal_sum);
    }
}

#[test]
fn sigma_matches_divisor_walk_to_100k() {
    for n in 1..=100_000u64 {
        assert_eq!(sigma(&factorize(n).unwrap()), sigma_by_divisor_enumeration(n), "{n}");
    }
}

#[test]
fn classification_consistent_with_sigma() {
    for n in 1..=20_000u64 {
        let s = sigma_u64(n).unwrap();
        let c = classify(&factorize(n).unwrap());
        let expected = match s.cmp(&(2 * n as u128)) {
            std::cmp::Ordering::Equal => Tag::Perfect,
            std::cmp::Ordering::Greater => Tag::Abundant,
            std::cmp::Ordering::Less => Tag::Deficient,
        };
        assert_eq!(c.tag, expected, "{n}");
        let integral = s.is_multiple_of(n as u128) && n > 1;
        assert_eq!(c.multiperfect_order, integral.then(|| (s / n as u128) as u64));
        if is_prime(n) {
            assert_eq!(c.tag, Tag::Deficient);
        }
    }
}

#[test]
fn even_perfect_numbers_are_perfect() {
    for e in even_perfect_numbers(7) {
        let n = u64::try_from(e.n.clone()).unwrap();
        let c = classify(&factorize(n).unwrap());
        assert_eq!((c.tag, c.multiperfect_order), (Tag::Perfect, Some(2)), "{n}");
    }
    let big = even_perfect_numbers(12);
    assert_eq!(big.iter().map(|e| e.exponent).collect::<Vec<_>>(), [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127]);
}
