//! Certified checks of Robin's inequality `I(n) < e^γ ln ln n`, its
//! unconditional relaxation, Lagarias's harmonic-number inequality and the
//! Gronwall ratio.
//!
//! Every bound is a [`BoundInterval`] that provably contains the true value.
//! Verdicts compare the exact rational `I(n)` (or σ(n)) against the interval
//! ends, so a `Holds` or `Violates` answer is a proof; anything else is
//! `Undecided`, and the checks retry at doubled precision up to
//! [`PRECISION_CAP`] digits before giving up.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::{abundancy_index, harmonic_exact, sigma, sigma_sieve};
use crate::ball::{self, Ball};
use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization};
use crate::ratio::ExactRatio;
use crate::superabundant::superabundant_structured;

pub const DEFAULT_PRECISION: u32 = 50;
pub const PRECISION_CAP: u32 = 400;
pub const MIN_PRECISION: u32 = 10;
pub const MAX_PRECISION: u32 = 1000;
/// Largest `n` with an exact harmonic value attached.
pub const HARMONIC_EXACT_LIMIT: u64 = 10_000;
/// Smallest `n` for which Robin's inequality is claimed.
pub const ROBIN_THRESHOLD: u64 = 5041;

const GUARD_BITS: u32 = 64;

/// Working precision in bits for `digits` decimal digits plus guard bits.
fn bits_for(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

fn check_precision(digits: u32) -> Result<()> {
    if (MIN_PRECISION..=MAX_PRECISION).contains(&digits) {
        Ok(())
    } else {
        Err(Error::PrecisionOutOfRange(digits))
    }
}

/// Closed interval `[lo, hi] / 2^scale_bits` known to contain a real quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInterval {
    lo: BigInt,
    hi: BigInt,
    scale_bits: u32,
    precision_digits: u32,
}

impl BoundInterval {
    fn from_ball(b: &Ball, precision_digits: u32) -> Self {
        BoundInterval { lo: b.lo(), hi: b.hi(), scale_bits: b.prec(), precision_digits }
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    /// Where the exact rational `p/q` sits relative to the interval:
    /// `Less` below `lo`, `Greater` above `hi`, `Equal` inside.
    pub fn locate(&self, p: &BigUint, q: &BigUint) -> Ordering {
        let lhs = BigInt::from(p << self.scale_bits);
        let q = BigInt::from(q.clone());
        if lhs < &self.lo * &q {
            Ordering::Less
        } else if lhs > &self.hi * &q {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    pub fn contains_ratio(&self, r: &ExactRatio) -> bool {
        self.locate(r.numer(), r.denom()) == Ordering::Equal
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &BoundInterval) -> bool {
        let (a, b) = (self.scale_bits, other.scale_bits);
        let lift = |x: &BigInt, by: u32| x << by;
        let s = a.max(b);
        lift(&self.lo, s - a) <= lift(&other.lo, s - b) && lift(&other.hi, s - b) <= lift(&self.hi, s - a)
    }

    pub fn intersects(&self, other: &BoundInterval) -> bool {
        let (a, b) = (self.scale_bits, other.scale_bits);
        let s = a.max(b);
        (&self.lo << (s - a)) <= (&other.hi << (s - b)) && (&other.lo << (s - b)) <= (&self.hi << (s - a))
    }

    /// `hi - lo <= 10^-(precision_digits - 2)`, checked exactly.
    pub fn width_within_precision(&self) -> bool {
        let width = BigInt::from(10u32).pow(self.precision_digits.saturating_sub(2)) * (&self.hi - &self.lo);
        width <= BigInt::one() << self.scale_bits
    }

    /// `lo` rounded down to `precision_digits` decimals.
    pub fn lo_decimal(&self) -> String {
        to_decimal(&self.lo, self.scale_bits, self.precision_digits, false)
    }

    /// `hi` rounded up to `precision_digits` decimals.
    pub fn hi_decimal(&self) -> String {
        to_decimal(&self.hi, self.scale_bits, self.precision_digits, true)
    }

    pub fn midpoint_f64(&self) -> f64 {
        let sum = &self.lo + &self.hi;
        let shift = sum.bits().saturating_sub(60);
        (&sum >> shift).to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32 - self.scale_bits as i32 - 1)
    }
}

fn to_decimal(x: &BigInt, scale_bits: u32, digits: u32, round_up: bool) -> String {
    let ten = BigInt::from(10u32).pow(digits);
    let num = x * &ten;
    let mut q = &num >> scale_bits; // floor
    if round_up && (&q << scale_bits) != num {
        q += 1;
    }
    let neg = q.is_negative();
    let mag = q.magnitude().to_str_radix(10);
    let mag = format!("{mag:0>width$}", width = digits as usize + 1);
    let (int, frac) = mag.split_at(mag.len() - digits as usize);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_decimal(), self.hi_decimal())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violates,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::Violates => "Violates",
            Verdict::Undecided => "Undecided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobinReport {
    pub n: BigUint,
    pub sigma: BigUint,
    pub index: ExactRatio,
    pub bound: BoundInterval,
    pub verdict: Verdict,
}

impl RobinReport {
    pub fn precision_digits(&self) -> u32 {
        self.bound.precision_digits
    }
}

/// Certified enclosure of `γ`.
pub fn euler_gamma(precision_digits: u32) -> Result<BoundInterval> {
    check_precision(precision_digits)?;
    Ok(BoundInterval::from_ball(&ball::euler_gamma(bits_for(precision_digits)), precision_digits))
}

fn big_ball(n: &BigUint, prec: u32) -> Ball {
    Ball::exact_int(BigInt::from_biguint(Sign::Plus, n.clone()), prec)
}

/// `ln ln n` as a ball; `None` when it is not positive (n < 3).
fn ln_ln(n: &BigUint, prec: u32) -> Option<Ball> {
    if n < &BigUint::from(3u32) {
        return None;
    }
    ball::ln(&ball::ln(&big_ball(n, prec))?)
}

fn robin_ball(n: &BigUint, prec: u32) -> Option<(Ball, Ball)> {
    let ll = ln_ln(n, prec)?;
    Some((ball::exp_gamma(prec).mul(&ll), ll))
}

fn domain_error(n: &BigUint) -> Error {
    Error::DomainTooSmall(n.to_u64().unwrap_or(u64::MAX))
}

/// Certified enclosure of `e^γ ln ln n` for `n >= 3`.
pub fn robin_bound(n: u64, precision_digits: u32) -> Result<BoundInterval> {
    robin_bound_big(&BigUint::from(n), precision_digits)
}

pub fn robin_bound_big(n: &BigUint, precision_digits: u32) -> Result<BoundInterval> {
    check_precision(precision_digits)?;
    let (b, _) = robin_ball(n, bits_for(precision_digits)).ok_or_else(|| domain_error(n))?;
    Ok(BoundInterval::from_ball(&b, precision_digits))
}

fn verdict_strict(value: &ExactRatio, bound: &BoundInterval) -> Verdict {
    match bound.locate(value.numer(), value.denom()) {
        Ordering::Less => Verdict::Holds,
        Ordering::Greater => Verdict::Violates,
        Ordering::Equal => Verdict::Undecided,
    }
}

/// Evaluates `check` at `digits`, doubling up to [`PRECISION_CAP`] while
/// the verdict is undecided.
fn escalate<T>(digits: u32, mut check: impl FnMut(u32) -> Result<(Verdict, T)>) -> Result<(Verdict, T)> {
    let mut d = digits;
    loop {
        let (v, t) = check(d)?;
        if v != Verdict::Undecided || d >= PRECISION_CAP {
            return Ok((v, t));
        }
        d = (d * 2).min(PRECISION_CAP).min(MAX_PRECISION);
    }
}

fn robin_report(
    f: &Factorization,
    precision_digits: u32,
    bound_at: impl Fn(&BigUint, u32) -> Option<Ball>,
) -> Result<RobinReport> {
    check_precision(precision_digits)?;
    let n = f.value();
    if n < BigUint::from(3u32) {
        return Err(domain_error(&n));
    }
    let index = abundancy_index(f);
    let (verdict, bound) = escalate(precision_digits, |d| {
        let b = bound_at(&n, bits_for(d)).ok_or_else(|| domain_error(&n))?;
        let bound = BoundInterval::from_ball(&b, d);
        Ok((verdict_strict(&index, &bound), bound))
    })?;
    Ok(RobinReport { sigma: sigma(f), n, index, bound, verdict })
}

/// Robin's inequality `I(n) < e^γ ln ln n`, certified.
pub fn robin_check(n: u64, precision_digits: u32) -> Result<RobinReport> {
    robin_check_factored(&factorize(n)?, precision_digits)
}

pub fn robin_check_factored(f: &Factorization, precision_digits: u32) -> Result<RobinReport> {
    robin_report(f, precision_digits, |n, prec| robin_ball(n, prec).map(|(b, _)| b))
}

/// The unconditional form `I(n) < e^γ ln ln n + 0.6483 / ln ln n`.
pub fn robin_unconditional_check(n: u64, precision_digits: u32) -> Result<RobinReport> {
    robin_report(&factorize(n)?, precision_digits, |n, prec| {
        let (b, ll) = robin_ball(n, prec)?;
        let c = Ball::ratio(&BigInt::from(6483u32), &BigUint::from(10_000u32), prec);
        Some(b.add(&c.div(&ll)?))
    })
}

/// Lower bound on `e^γ ln ln m` for every `m >= n` (the bound increases
/// with `m`), at 128-bit working precision; used to certify `Holds` cheaply in range scans.
fn robin_floor(n: u64) -> Option<Ball> {
    robin_ball(&BigUint::from(n), 128).map(|(b, _)| b)
}

/// All `n` in `[3, threshold)` for which [`robin_check`] returns `Violates`.
///
/// Scans in blocks: `e^γ ln ln n` is increasing, so any `n` whose exact
/// index is below the certified lower bound at the block start satisfies
/// the inequality and needs no individual bound. Every other `n` gets a
/// full [`robin_check`].
pub fn exceptions_below(threshold: u64, precision_digits: u32) -> Result<Vec<u64>> {
    exceptions_below_with(threshold, precision_digits, &mut |_| {})
}

/// [`exceptions_below`], reporting the start of every block to `progress`.
pub fn exceptions_below_with(
    threshold: u64,
    precision_digits: u32,
    progress: &mut dyn FnMut(u64),
) -> Result<Vec<u64>> {
    check_precision(precision_digits)?;
    if threshold > 1_000_000 {
        return Err(Error::LimitTooLarge { limit: threshold, max: 1_000_000 });
    }
    if threshold <= 3 {
        return Ok(Vec::new());
    }
    let sig = sigma_sieve(threshold as usize - 1);
    const BLOCK: u64 = 1024;
    let mut out = Vec::new();
    let mut start = 3u64;
    while start < threshold {
        progress(start);
        let end = (start + BLOCK).min(threshold);
        let floor = robin_floor(start).expect("start >= 3");
        let floor_lo = floor.lo();
        for n in start..end {
            // σ(n)/n < floor_lo / 2^prec
            let lhs = BigInt::from(sig[n as usize]) << floor.prec();
            if lhs < &floor_lo * BigInt::from(n) {
                continue;
            }
            let report = robin_check(n, precision_digits)?;
            if report.verdict == Verdict::Violates {
                out.push(n);
            }
        }
        start = end;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicValue {
    pub n: u64,
    pub exact: Option<ExactRatio>,
    pub enclosure: BoundInterval,
}

fn harmonic_ball(n: u64, prec: u32) -> Ball {
    if n < 64 {
        let h = harmonic_exact(n);
        Ball::ratio(&BigInt::from(h.numer().clone()), h.denom(), prec)
    } else {
        ball::harmonic_asymptotic(n, prec)
    }
}

/// `H_n`, exact for `n <= 10^4` and always with a certified enclosure.
pub fn harmonic(n: u64, precision_digits: u32) -> Result<HarmonicValue> {
    check_precision(precision_digits)?;
    if n == 0 {
        return Err(Error::Zero);
    }
    let prec = bits_for(precision_digits);
    let exact = (n <= HARMONIC_EXACT_LIMIT).then(|| harmonic_exact(n));
    let b = match &exact {
        Some(h) => Ball::ratio(&BigInt::from(h.numer().clone()), h.denom(), prec),
        None => harmonic_ball(n, prec),
    };
    Ok(HarmonicValue { n, exact, enclosure: BoundInterval::from_ball(&b, precision_digits) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagariasReport {
    pub n: u64,
    pub sigma: BigUint,
    pub bound: BoundInterval,
    pub verdict: Verdict,
    /// Set when σ(n) equals the bound exactly (only `n = 1`).
    pub equality: bool,
}

/// `e^H ln H + H` from a ball enclosing `H >= 1`.
fn lagarias_bound_ball(h: &Ball) -> Option<Ball> {
    Some(ball::exp(h).mul(&ball::ln(h)?).add(h))
}

/// Extra bits so the absolute width survives the `e^H` magnitude.
fn lagarias_bits(n: u64, digits: u32) -> u32 {
    let h_upper = (n as f64).ln() + 1.0;
    bits_for(digits) + (h_upper / std::f64::consts::LN_2).ceil() as u32 + 8
}

fn lagarias_from_ball(n: u64, sigma_n: BigUint, digits: u32, h: &Ball) -> LagariasReport {
    let b = lagarias_bound_ball(h).expect("H_n >= 1");
    let bound = BoundInterval::from_ball(&b, digits);
    let verdict = match bound.locate(&sigma_n, &BigUint::one()) {
        Ordering::Less => Verdict::Holds,
        Ordering::Greater => Verdict::Violates,
        Ordering::Equal => Verdict::Undecided,
    };
    LagariasReport { n, sigma: sigma_n, bound, verdict, equality: false }
}

/// `σ(n) <= e^{H_n} ln H_n + H_n`, certified. `n = 1` is decided exactly:
/// `H_1 = 1` and `ln 1 = 0` make both sides equal to 1.
pub fn lagarias_check(n: u64, precision_digits: u32) -> Result<LagariasReport> {
    check_precision(precision_digits)?;
    let f = factorize(n)?;
    let sigma_n = sigma(&f);
    if n == 1 {
        let prec = bits_for(precision_digits);
        let bound = BoundInterval::from_ball(&Ball::exact_int(1, prec), precision_digits);
        return Ok(LagariasReport { n, sigma: sigma_n, bound, verdict: Verdict::Holds, equality: true });
    }
    let (_, report) = escalate(precision_digits, |d| {
        let h = harmonic_ball(n, lagarias_bits(n, d));
        let r = lagarias_from_ball(n, sigma_n.clone(), d, &h);
        Ok((r.verdict, r))
    })?;
    Ok(report)
}

/// Result of a full-range scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub checked: u64,
    pub holds: u64,
    pub violates: Vec<u64>,
    pub undecided: Vec<u64>,
}

impl ScanSummary {
    fn record(&mut self, n: u64, v: Verdict) {
        self.checked += 1;
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Violates => self.violates.push(n),
            Verdict::Undecided => self.undecided.push(n),
        }
    }
}

/// Lagarias's inequality for every `n` in `[1, limit]`. `H_n` is carried
/// forward as a ball, one rounded reciprocal per step; `n` whose verdict is
/// undecided at that radius are rechecked individually with escalation.
pub fn lagarias_scan(limit: u64, precision_digits: u32) -> Result<ScanSummary> {
    lagarias_scan_with(limit, precision_digits, &mut |_| {})
}

/// [`lagarias_scan`], reporting each `n` to `progress` before checking it.
pub fn lagarias_scan_with(limit: u64, precision_digits: u32, progress: &mut dyn FnMut(u64)) -> Result<ScanSummary> {
    check_precision(precision_digits)?;
    let mut summary = ScanSummary::default();
    if limit == 0 {
        return Ok(summary);
    }
    summary.record(1, lagarias_check(1, precision_digits)?.verdict);
    let sig = sigma_sieve(limit as usize);
    let prec = lagarias_bits(limit, precision_digits);
    let mut h = Ball::exact_int(1, prec);
    for n in 2..=limit {
        progress(n);
        h = h.add(&Ball::ratio(&BigInt::one(), &BigUint::from(n), prec));
        let r = lagarias_from_ball(n, BigUint::from(sig[n as usize]), precision_digits, &h);
        let v = match r.verdict {
            Verdict::Undecided => lagarias_check(n, precision_digits)?.verdict,
            v => v,
        };
        summary.record(n, v);
    }
    Ok(summary)
}

/// Unconditional Robin bound for every `n` in `[3, limit]`.
pub fn robin_unconditional_scan(limit: u64, precision_digits: u32) -> Result<ScanSummary> {
    robin_unconditional_scan_with(limit, precision_digits, &mut |_| {})
}

pub fn robin_unconditional_scan_with(
    limit: u64,
    precision_digits: u32,
    progress: &mut dyn FnMut(u64),
) -> Result<ScanSummary> {
    check_precision(precision_digits)?;
    let mut summary = ScanSummary::default();
    for n in 3..=limit {
        progress(n);
        summary.record(n, robin_unconditional_check(n, precision_digits)?.verdict);
    }
    Ok(summary)
}

/// Certified enclosure of `I(n) / (e^γ ln ln n)`.
pub fn gronwall_ratio(n: u64, precision_digits: u32) -> Result<BoundInterval> {
    gronwall_ratio_factored(&factorize(n)?, precision_digits)
}

pub fn gronwall_ratio_factored(f: &Factorization, precision_digits: u32) -> Result<BoundInterval> {
    check_precision(precision_digits)?;
    let n = f.value();
    let prec = bits_for(precision_digits);
    let (b, _) = robin_ball(&n, prec).ok_or_else(|| domain_error(&n))?;
    let index = abundancy_index(f);
    let i = Ball::ratio(&BigInt::from(index.numer().clone()), index.denom(), prec);
    let ratio = i.div(&b).ok_or_else(|| domain_error(&n))?;
    Ok(BoundInterval::from_ball(&ratio, precision_digits))
}

/// Robin checks restricted to superabundant `n` in `(5040, limit]`. If
/// Robin's inequality ever fails past 5040, the least failure is
/// superabundant, so this scan is enough to find it.
pub fn akbary_scan(limit: &BigUint, precision_digits: u32) -> Result<Vec<RobinReport>> {
    check_precision(precision_digits)?;
    let floor = BigUint::from(ROBIN_THRESHOLD - 1);
    superabundant_structured(limit)
        .into_iter()
        .filter(|r| r.n > floor)
        .map(|r| robin_check_factored(&r.factorization, precision_digits))
        .collect()
}

/// Smallest `n` in `[from, to]` violating Robin's inequality, by a full scan.
pub fn first_violation_in(from: u64, to: u64, precision_digits: u32) -> Result<Option<u64>> {
    let lo = from.max(3);
    if to < lo {
        return Ok(None);
    }
    // exceptions_below covers [3, to]; keep the part at or above `from`.
    Ok(exceptions_below(to + 1, precision_digits)?.into_iter().find(|&n| n >= lo))
}

impl Verdict {
    pub fn is_decided(self) -> bool {
        self != Verdict::Undecided
    }
}
