//! Abundancy outlaws: rationals `q > 1` that are `I(n)` for no `n`.
//!
//! A verdict is either a witness `n` with `I(n) = q`, a re-checkable outlaw
//! certificate, or an honest "unknown up to this search bound".
//!
//! Search-space lemma: if `q = r/s` in lowest terms and `I(n) = q`, then
//! `s σ(n) = r n`, and `gcd(r, s) = 1` forces `s | n`. Witness searches
//! therefore only visit multiples of `s`.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::arith::{abundancy_index, classify, sigma_u64, Tag};
use crate::error::{Error, Result};
use crate::factor::factorize;
use crate::primes::{gcd, is_prime};
use crate::ratio::ExactRatio;

pub const DEFAULT_SEARCH_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutlawRule {
    WeinerRange,
    Family2p,
    FamilyPQ,
    FamilyEvenPerfect,
}

impl fmt::Display for OutlawRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutlawRule::WeinerRange => "WeinerRange",
            OutlawRule::Family2p => "Family2p",
            OutlawRule::FamilyPQ => "FamilyPQ",
            OutlawRule::FamilyEvenPerfect => "FamilyEvenPerfect",
        })
    }
}

/// The data a rule needs to be re-checked independently of how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutlawCertificate {
    /// `gcd(k, m) = 1` and `k < σ(m)`. Since `s | n` for any solution and
    /// `I(n) >= I(m)` for multiples of `m`, no `n` reaches `k/m < I(m)`.
    WeinerRange { k: u64, m: u64, sigma_m: u128 },
    /// `(σ(2p) + 1) / 2p` with `p > 3` prime.
    Family2p { p: u64 },
    /// `(σ(pq) + 1) / pq` with primes `p < q`, `q > 3`,
    /// `gcd(p, q + 2) = gcd(q, p + 2) = 1`.
    FamilyPQ { p: u64, q: u64 },
    /// `(σ(2N) + 1) / 2N` for the even perfect `N = 2^(e-1) (2^e - 1)`.
    FamilyEvenPerfect { perfect: u64, exponent: u32 },
}

impl OutlawCertificate {
    pub fn rule(&self) -> OutlawRule {
        match self {
            OutlawCertificate::WeinerRange { .. } => OutlawRule::WeinerRange,
            OutlawCertificate::Family2p { .. } => OutlawRule::Family2p,
            OutlawCertificate::FamilyPQ { .. } => OutlawRule::FamilyPQ,
            OutlawCertificate::FamilyEvenPerfect { .. } => OutlawRule::FamilyEvenPerfect,
        }
    }

    /// Re-derives the rule's preconditions from scratch and checks that the
    /// certified rational is `q`.
    pub fn verify(&self, q: &ExactRatio) -> bool {
        match *self {
            OutlawCertificate::WeinerRange { k, m, sigma_m } => {
                let Ok(s) = sigma_u64(m) else { return false };
                gcd(k, m) == 1
                    && m < k
                    && (k as u128) < s
                    && s == sigma_m
                    && ExactRatio::new(k, m).as_ref() == Ok(q)
            }
            OutlawCertificate::Family2p { p } => {
                p > 3 && is_prime(p) && family_value(2, p).as_ref() == Some(q)
            }
            OutlawCertificate::FamilyPQ { p, q: qq } => {
                pq_conditions(p, qq) && family_value(p, qq).as_ref() == Some(q)
            }
            OutlawCertificate::FamilyEvenPerfect { perfect, exponent } => {
                even_perfect_exponent(perfect) == Some(exponent)
                    && even_perfect_value(perfect).as_ref() == Some(q)
            }
        }
    }
}

impl fmt::Display for OutlawCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutlawCertificate::WeinerRange { k, m, sigma_m } => {
                write!(f, "Weiner: {m} < {k} < σ({m})={sigma_m}")
            }
            OutlawCertificate::Family2p { p } => write!(f, "(σ(2p)+1)/2p family, p={p}"),
            OutlawCertificate::FamilyPQ { p, q } => write!(f, "(σ(pq)+1)/pq family, p={p}, q={q}"),
            OutlawCertificate::FamilyEvenPerfect { perfect, exponent } => {
                write!(f, "(σ(2N)+1)/2N family, N={perfect}=2^{}(2^{exponent}-1)", exponent - 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutlawVerdict {
    Index { witness: u64 },
    Outlaw(OutlawCertificate),
    Unknown { search_bound: u64 },
}

impl OutlawVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            OutlawVerdict::Index { .. } => "Index",
            OutlawVerdict::Outlaw(_) => "Outlaw",
            OutlawVerdict::Unknown { .. } => "Unknown",
        }
    }

    pub fn rule(&self) -> Option<OutlawRule> {
        match self {
            OutlawVerdict::Outlaw(c) => Some(c.rule()),
            _ => None,
        }
    }

    pub fn is_outlaw(&self) -> bool {
        matches!(self, OutlawVerdict::Outlaw(_))
    }
}

impl fmt::Display for OutlawVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutlawVerdict::Index { witness } => write!(f, "Index (I({witness}))"),
            OutlawVerdict::Outlaw(c) => write!(f, "Outlaw ({c})"),
            OutlawVerdict::Unknown { search_bound } => {
                write!(f, "Unknown (no witness up to {search_bound})")
            }
        }
    }
}

fn require_above_one(q: &ExactRatio) -> Result<()> {
    if q <= &ExactRatio::one() {
        return Err(Error::NotAboveOne(q.to_string()));
    }
    Ok(())
}

/// Weiner's criterion for `q = k/m` in lowest terms: `m < k < σ(m)`.
pub fn weiner_outlaw_check(q: &ExactRatio) -> Result<bool> {
    require_above_one(q)?;
    let (k, m) = q.to_u64_parts()?;
    Ok(m < k && (k as u128) < sigma_u64(m)?)
}

/// `(σ(pq) + 1) / pq = ((p+1)(q+1) + 1) / pq` for distinct primes.
fn family_value(p: u64, q: u64) -> Option<ExactRatio> {
    let pq = p.checked_mul(q)?;
    let numer = (p as u128 + 1) * (q as u128 + 1) + 1;
    ExactRatio::new(BigUint::from(numer), pq).ok()
}

fn pq_conditions(p: u64, q: u64) -> bool {
    is_prime(p)
        && is_prime(q)
        && q > 3
        && q > p
        && q.checked_add(2).is_some_and(|q2| gcd(p, q2) == 1)
        && p.checked_add(2).is_some_and(|p2| gcd(q, p2) == 1)
}

/// `(σ(2p)+1)/2p` for a prime `p`. Outlaw for `p > 3`; for `p = 2, 3` the
/// value is `I(6)` and `I(18)` respectively.
pub fn family_2p(p: u64) -> Result<(ExactRatio, OutlawVerdict)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let two_p = p.checked_mul(2).ok_or_else(|| Error::TooLarge(p.to_string()))?;
    let value = ExactRatio::new(BigUint::from(sigma_u64(two_p)? + 1), two_p)?;
    let verdict = match p {
        2 => OutlawVerdict::Index { witness: 6 },
        3 => OutlawVerdict::Index { witness: 18 },
        _ => OutlawVerdict::Outlaw(OutlawCertificate::Family2p { p }),
    };
    Ok((value, verdict))
}

/// `(σ(pq)+1)/pq` when `q > 3`, `q > p` and `gcd(p, q+2) = gcd(q, p+2) = 1`;
/// `None` when those conditions fail (twin primes `q = p + 2` among them).
pub fn family_pq(p: u64, q: u64) -> Result<Option<(ExactRatio, OutlawVerdict)>> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if !pq_conditions(p, q) {
        return Ok(None);
    }
    let value = family_value(p, q).ok_or_else(|| Error::TooLarge(format!("{p}*{q}")))?;
    Ok(Some((value, OutlawVerdict::Outlaw(OutlawCertificate::FamilyPQ { p, q }))))
}

/// Returns `e` when `n = 2^(e-1) (2^e - 1)` with `2^e - 1` prime.
fn even_perfect_exponent(n: u64) -> Option<u32> {
    if n == 0 || !n.is_multiple_of(2) {
        return None;
    }
    let e = n.trailing_zeros() + 1;
    let m = n >> (e - 1);
    (e < 64 && m == (1u64 << e) - 1 && is_prime(m)).then_some(e)
}

fn even_perfect_value(n: u64) -> Option<ExactRatio> {
    let two_n = n.checked_mul(2)?;
    let s = sigma_u64(two_n).ok()?;
    ExactRatio::new(BigUint::from(s + 1), two_n).ok()
}

/// `(σ(2N)+1)/2N` for an even perfect `N`.
pub fn family_even_perfect(n: u64) -> Result<(ExactRatio, OutlawVerdict)> {
    let perfect = n.is_multiple_of(2) && n > 0 && classify(&factorize(n)?).tag == Tag::Perfect;
    let exponent = even_perfect_exponent(n).filter(|_| perfect).ok_or(Error::NotEvenPerfect(n))?;
    let value = even_perfect_value(n).ok_or_else(|| Error::TooLarge(n.to_string()))?;
    Ok((value, OutlawVerdict::Outlaw(OutlawCertificate::FamilyEvenPerfect { perfect: n, exponent })))
}

/// Recognizes `q` as a member of one of the three outlaw families by
/// solving for the parameters from the denominator.
pub fn recognize_family(q: &ExactRatio) -> Option<OutlawCertificate> {
    let (r, s) = q.to_u64_parts().ok()?;
    let hit = |c: OutlawCertificate| c.verify(q).then_some(c);
    if s % 2 == 0 {
        let p = s / 2;
        if p > 3 && is_prime(p) && r as u128 == 3 * p as u128 + 4 {
            return hit(OutlawCertificate::Family2p { p });
        }
    }
    let f = factorize(s).ok()?;
    if let [(p, 1), (qq, 1)] = *f.pairs() {
        if let Some(c) = hit(OutlawCertificate::FamilyPQ { p, q: qq }) {
            return Some(c);
        }
    }
    if s % 2 == 0 {
        if let Some(exponent) = even_perfect_exponent(s / 2) {
            return hit(OutlawCertificate::FamilyEvenPerfect { perfect: s / 2, exponent });
        }
    }
    None
}

/// Smallest `n <= bound` with `I(n) = q`, scanning multiples of the
/// reduced denominator only.
pub fn find_index_witness(q: &ExactRatio, bound: u64) -> Result<Option<u64>> {
    if q < &ExactRatio::one() {
        return Ok(None);
    }
    let (r, s) = q.to_u64_parts()?;
    let (r, s) = (r as u128, s as u128);
    let steps = bound / s as u64;
    let found = (1..steps + 1).into_par_iter().find_first(|&j| {
        let n = j * s as u64;
        sigma_u64(n).is_ok_and(|sig| sig.checked_mul(s) == (n as u128).checked_mul(r))
    });
    Ok(found.map(|j| j * s as u64))
}

/// Cheap certificates first (Weiner range, family shapes), then a bounded
/// witness search; `Unknown` otherwise.
///
/// `(p+2)/p` for twin primes `p, p+2` matches no certificate, so it can only
/// come back as `Index` or `Unknown`.
pub fn classify_rational(q: &ExactRatio, bound: u64) -> Result<OutlawVerdict> {
    require_above_one(q)?;
    let (k, m) = q.to_u64_parts()?;
    let sigma_m = sigma_u64(m)?;
    // q > 1 gives m < k, so k < σ(m) is the whole Weiner condition and also
    // the "r >= σ(s)" necessary condition for indices.
    if (k as u128) < sigma_m {
        return Ok(OutlawVerdict::Outlaw(OutlawCertificate::WeinerRange { k, m, sigma_m }));
    }
    if let Some(cert) = recognize_family(q) {
        return Ok(OutlawVerdict::Outlaw(cert));
    }
    Ok(match find_index_witness(q, bound)? {
        Some(witness) => {
            debug_assert_eq!(abundancy_index(&factorize(witness)?), *q);
            OutlawVerdict::Index { witness }
        }
        None => OutlawVerdict::Unknown { search_bound: bound },
    })
}
