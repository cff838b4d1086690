//! Exact, always-reduced non-negative rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction `numerator / denominator` with arbitrary-precision parts.
///
/// `num_rational` normalizes on construction, so `gcd(numer, denom) = 1`
/// holds for every value. Ordering and arithmetic are exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(Ratio<BigUint>);

impl ExactRatio {
    pub fn new(numer: impl Into<BigUint>, denom: impl Into<BigUint>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRatio(Ratio::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        ExactRatio(Ratio::from_integer(n.into()))
    }

    pub fn one() -> Self {
        ExactRatio(Ratio::one())
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        let (n, d) = (self.numer(), self.denom());
        // Shift both sides down so the quotient survives conversion of huge parts.
        let shift = n.bits().max(d.bits()).saturating_sub(1000);
        let n = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
        let d = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
        n / d
    }

    /// Numerator and denominator as `u64`, if both fit.
    pub fn to_u64_parts(&self) -> Result<(u64, u64)> {
        match (self.numer().to_u64(), self.denom().to_u64()) {
            (Some(n), Some(d)) => Ok((n, d)),
            _ => Err(Error::TooLarge(self.to_string())),
        }
    }

    pub fn as_ratio(&self) -> &Ratio<BigUint> {
        &self.0
    }
}

impl From<Ratio<BigUint>> for ExactRatio {
    fn from(r: Ratio<BigUint>) -> Self {
        ExactRatio(r)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Parses `"r/s"` or a bare integer. The result is reduced; use
/// [`parse_rational`] to learn whether the input already was.
impl FromStr for ExactRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(|(q, _)| q)
    }
}

/// Parses a rational and reports whether the text was in lowest terms.
pub fn parse_rational(s: &str) -> Result<(ExactRatio, bool)> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n: BigUint = n.parse().map_err(|_| bad())?;
    let d: BigUint = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let reduced = num_integer::Integer::gcd(&n, &d).is_one();
    Ok((ExactRatio(Ratio::new(n, d)), reduced))
}

impl<'a> Add<&'a ExactRatio> for &'a ExactRatio {
    type Output = ExactRatio;
    fn add(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 + &rhs.0)
    }
}

impl<'a> Mul<&'a ExactRatio> for &'a ExactRatio {
    type Output = ExactRatio;
    fn mul(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 * &rhs.0)
    }
}

impl<'a> Div<&'a ExactRatio> for &'a ExactRatio {
    type Output = ExactRatio;
    fn div(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 / &rhs.0)
    }
}

/// Panics if the result would be negative.
impl<'a> Sub<&'a ExactRatio> for &'a ExactRatio {
    type Output = ExactRatio;
    fn sub(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 - &rhs.0)
    }
}

impl Add for ExactRatio {
    type Output = ExactRatio;
    fn add(self, rhs: ExactRatio) -> ExactRatio {
        ExactRatio(self.0 + rhs.0)
    }
}

impl Mul for ExactRatio {
    type Output = ExactRatio;
    fn mul(self, rhs: ExactRatio) -> ExactRatio {
        ExactRatio(self.0 * rhs.0)
    }
}

impl std::iter::Product for ExactRatio {
    fn product<I: Iterator<Item = ExactRatio>>(iter: I) -> Self {
        iter.fold(ExactRatio::one(), |a, b| a * b)
    }
}

impl std::iter::Sum for ExactRatio {
    fn sum<I: Iterator<Item = ExactRatio>>(iter: I) -> Self {
        iter.fold(ExactRatio::from_integer(0u32), |a, b| a + b)
    }
}
