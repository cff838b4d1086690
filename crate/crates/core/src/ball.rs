//! Fixed-point ball arithmetic with rigorous error radii.
//!
//! A [`Ball`] at precision `prec` stands for every real in
//! `[(mid - rad) / 2^prec, (mid + rad) / 2^prec]`. Each operation rounds its
//! midpoint and widens the radius by at least the rounding error, so the
//! true value of any expression stays inside the ball computed for it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigUint,
    prec: u32,
}

fn ceil_shr(x: BigUint, k: u32) -> BigUint {
    let down = &x >> k;
    if (&down << k) == x {
        down
    } else {
        down + 1u32
    }
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

impl Ball {
    pub fn exact_int(n: impl Into<BigInt>, prec: u32) -> Ball {
        Ball { mid: n.into() << prec, rad: BigUint::zero(), prec }
    }

    /// Encloses `numer / denom`; `denom` must be non-zero.
    pub fn ratio(numer: &BigInt, denom: &BigUint, prec: u32) -> Ball {
        let scaled = numer << prec;
        let d = BigInt::from_biguint(Sign::Plus, denom.clone());
        let (q, r) = scaled.div_mod_floor(&d);
        let rad = if r.is_zero() { BigUint::zero() } else { BigUint::one() };
        Ball { mid: q, rad, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mid(&self) -> &BigInt {
        &self.mid
    }

    pub fn rad(&self) -> &BigUint {
        &self.rad
    }

    /// Lower endpoint numerator over `2^prec`.
    pub fn lo(&self) -> BigInt {
        &self.mid - BigInt::from(self.rad.clone())
    }

    /// Upper endpoint numerator over `2^prec`.
    pub fn hi(&self) -> BigInt {
        &self.mid + BigInt::from(self.rad.clone())
    }

    pub fn is_positive(&self) -> bool {
        self.lo().is_positive()
    }

    pub fn add_rad(mut self, extra: &BigUint) -> Ball {
        self.rad += extra;
        self
    }

    pub fn add(&self, other: &Ball) -> Ball {
        debug_assert_eq!(self.prec, other.prec);
        Ball { mid: &self.mid + &other.mid, rad: &self.rad + &other.rad, prec: self.prec }
    }

    pub fn sub(&self, other: &Ball) -> Ball {
        debug_assert_eq!(self.prec, other.prec);
        Ball { mid: &self.mid - &other.mid, rad: &self.rad + &other.rad, prec: self.prec }
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: -&self.mid, rad: self.rad.clone(), prec: self.prec }
    }

    pub fn mul(&self, other: &Ball) -> Ball {
        debug_assert_eq!(self.prec, other.prec);
        let p = self.prec;
        let prod = &self.mid * &other.mid;
        let mid = &prod >> p;
        let exact = (&mid << p) == prod;
        let a = self.mid.magnitude();
        let b = other.mid.magnitude();
        let spread = a * &other.rad + b * &self.rad + &self.rad * &other.rad;
        let mut rad = ceil_shr(spread, p);
        if !exact {
            rad += 1u32;
        }
        Ball { mid, rad, prec: p }
    }

    pub fn mul_int(&self, k: i64) -> Ball {
        Ball { mid: &self.mid * k, rad: &self.rad * k.unsigned_abs(), prec: self.prec }
    }

    pub fn div_int(&self, k: u64) -> Ball {
        let (q, r) = self.mid.div_mod_floor(&BigInt::from(k));
        let rad = ceil_div(&self.rad, &BigUint::from(k)) + if r.is_zero() { 0u32 } else { 1u32 };
        Ball { mid: q, rad, prec: self.prec }
    }

    /// Exact multiplication by `2^k` for `k >= 0`, rounded division otherwise.
    pub fn mul_pow2(&self, k: i64) -> Ball {
        if k >= 0 {
            let k = k as u32;
            Ball { mid: &self.mid << k, rad: &self.rad << k, prec: self.prec }
        } else {
            let k = (-k) as u32;
            let mid = &self.mid >> k;
            Ball { mid, rad: ceil_shr(self.rad.clone(), k) + 1u32, prec: self.prec }
        }
    }

    /// `self / other`; `None` if `other` may contain zero.
    pub fn div(&self, other: &Ball) -> Option<Ball> {
        debug_assert_eq!(self.prec, other.prec);
        let b = other.mid.magnitude();
        if b <= &other.rad {
            return None;
        }
        let p = self.prec;
        let mid = (&self.mid << p).div_floor(&other.mid);
        // |x/y - mx/my| <= (rx |my| + |mx| ry) / (|my| (|my| - ry)), scaled by 2^p.
        let a = self.mid.magnitude();
        let num = (&self.rad * b + a * &other.rad) << p;
        let den = b * (b - &other.rad);
        let rad = ceil_div(&num, &den) + 1u32;
        Some(Ball { mid, rad, prec: p })
    }

    /// Upper bound on `|x|` as a ball numerator.
    pub fn abs_upper(&self) -> BigUint {
        self.mid.magnitude() + &self.rad
    }

    /// Approximate value, for display and argument reduction only.
    pub fn to_f64(&self) -> f64 {
        let shift = self.mid.bits().saturating_sub(60);
        let m = (&self.mid >> shift).to_f64().unwrap_or(0.0);
        m * 2f64.powi(shift as i32 - self.prec as i32)
    }

    /// Compares the whole ball against an exact rational `p/q`:
    /// `Less` if every point is below, `Greater` if every point is above,
    /// `Equal` if `p/q` lies inside.
    pub fn cmp_ratio(&self, p: &BigUint, q: &BigUint) -> Ordering {
        let target = BigInt::from(p << self.prec);
        let q = BigInt::from(q.clone());
        if self.hi() * &q < target {
            Ordering::Less
        } else if self.lo() * &q > target {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }
}

/// `Σ_{j>=0} z^(2j+1)/(2j+1)` for `|z| <= 1/2`, with the truncation tail
/// folded into the radius.
fn atanh_series(z: &Ball) -> Ball {
    let prec = z.prec;
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut j = 1u64;
    loop {
        power = power.mul(&z2);
        let bound = power.abs_upper();
        // Rounding keeps a few ulps of radius on every power, so stop once the
        // whole ball is within 16 ulps of zero.
        if bound.bits() <= 4 {
            // Remaining tail <= |z|^(2j+1) / (1 - z^2) <= 4/3 |power|.
            return sum.add_rad(&(bound * 2u32));
        }
        sum = sum.add(&power.div_int(2 * j + 1));
        j += 1;
        debug_assert!(j < 10 * prec as u64 + 100);
    }
}

fn ln2_uncached(prec: u32) -> Ball {
    // ln 2 = 2 atanh(1/3)
    let third = Ball::ratio(&BigInt::one(), &BigUint::from(3u32), prec);
    atanh_series(&third).mul_int(2)
}

fn cached(table: &'static OnceLock<Mutex<HashMap<u32, Ball>>>, prec: u32, f: impl FnOnce(u32) -> Ball) -> Ball {
    let map = table.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = map.lock().expect("cache poisoned").get(&prec) {
        return b.clone();
    }
    let b = f(prec);
    map.lock().expect("cache poisoned").insert(prec, b.clone());
    b
}

pub fn ln2(prec: u32) -> Ball {
    static CACHE: OnceLock<Mutex<HashMap<u32, Ball>>> = OnceLock::new();
    cached(&CACHE, prec, ln2_uncached)
}

/// Natural logarithm of a positive point value `mid / 2^prec`.
fn ln_point(mid: &BigUint, prec: u32) -> Ball {
    // mid / 2^prec = 2^k y with y in [3/4, 3/2).
    let b = mid.bits() as i64;
    let mut k = b - 1 - prec as i64;
    let top_two = (mid >> (b - 2).max(0) as u64).to_u32().unwrap_or(0);
    let mut shift = b - 1; // y = mid / 2^shift in [1, 2)
    if b >= 2 && top_two == 3 {
        shift += 1;
        k += 1;
    }
    let y = if shift as u32 >= prec {
        let extra = shift as u32 - prec;
        let m = mid >> extra;
        let exact = (&m << extra) == *mid;
        let rad = if exact { BigUint::zero() } else { BigUint::one() };
        Ball { mid: BigInt::from(m), rad, prec }
    } else {
        Ball { mid: BigInt::from(mid << (prec - shift as u32)), rad: BigUint::zero(), prec }
    };
    let one = Ball::exact_int(1, prec);
    let z = y.sub(&one).div(&y.add(&one)).expect("y + 1 >= 7/4");
    atanh_series(&z).mul_int(2).add(&ln2(prec).mul_int(k))
}

/// `ln x` for a ball lying entirely in `(0, ∞)`.
pub fn ln(x: &Ball) -> Option<Ball> {
    if !x.is_positive() {
        return None;
    }
    let m = x.mid.magnitude();
    let point = ln_point(m, x.prec);
    if x.rad.is_zero() {
        return Some(point);
    }
    // |ln(m ± r) - ln m| <= r / (m - r)
    let extra = ceil_div(&(&x.rad << x.prec), &(m - &x.rad));
    Some(point.add_rad(&extra))
}

/// `e^x`. Argument reduction `x = k ln 2 + 2^8 r`, Taylor series for `e^r`,
/// then eight squarings.
pub fn exp(x: &Ball) -> Ball {
    const SQUARINGS: i64 = 8;
    let prec = x.prec;
    let k = (x.to_f64() / std::f64::consts::LN_2).round() as i64;
    let reduced = x.sub(&ln2(prec).mul_int(k)).mul_pow2(-SQUARINGS);
    // |reduced| < 1/256 for any sane input, so the tail after a term t is <= 2|t|.
    let mut term = Ball::exact_int(1, prec);
    let mut sum = term.clone();
    let mut j = 1u64;
    loop {
        term = term.mul(&reduced).div_int(j);
        let bound = term.abs_upper();
        if bound.bits() <= 4 {
            sum = sum.add_rad(&(bound * 2u32));
            break;
        }
        sum = sum.add(&term);
        j += 1;
    }
    let mut out = sum;
    for _ in 0..SQUARINGS {
        out = out.mul(&out);
    }
    out.mul_pow2(k)
}

/// Tangent numbers `T_1..=T_count` (1, 2, 16, 272, ...), from which
/// `B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1))`.
pub fn tangent_numbers(count: usize) -> Vec<BigUint> {
    if count == 0 {
        return Vec::new();
    }
    let mut t = vec![BigUint::zero(); count + 1];
    t[1] = BigUint::one();
    for k in 2..=count {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=count {
        for j in k..=count {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t.remove(0);
    t
}

fn tangent_cached(count: usize) -> Vec<BigUint> {
    static CACHE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    let cell = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cell.lock().expect("cache poisoned");
    if guard.len() < count {
        *guard = tangent_numbers(count.max(2 * guard.len()));
    }
    guard[..count].to_vec()
}

/// Euler–Maclaurin correction `H_N - ln N - γ` for `N = 2^j`:
/// `1/(2N) - Σ_{k>=1} B_2k / (2k N^2k)`. The error after the last term kept
/// is below the first omitted term in absolute value.
fn harmonic_correction_pow2(j: u32, prec: u32) -> Ball {
    let n_bits = j as u64;
    // 1/(2N) = 2^-(j+1)
    let mut acc = Ball::exact_int(1, prec).mul_pow2(-(n_bits as i64 + 1));
    let mut count = 16usize;
    loop {
        let t = tangent_cached(count);
        for (idx, tk) in t.iter().enumerate() {
            let k = idx as u64 + 1;
            // |B_2k| / (2k N^2k) = T_k / ((2^2k - 1) 2^(2k + 2kj))
            let denom = ((BigUint::one() << (2 * k)) - 1u32) << (2 * k + 2 * k * n_bits);
            let term = Ball::ratio(&BigInt::from(tk.clone()), &denom, prec);
            if term.abs_upper().bits() <= 1 {
                return acc.add_rad(&term.abs_upper());
            }
            // Terms must still be shrinking: 2k well below 2πN.
            assert!(((2 * k) as f64) < std::f64::consts::PI * (1u64 << j) as f64, "N too small for precision");
            acc = if k % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
        }
        // Not converged yet; redo with more tangent numbers.
        acc = Ball::exact_int(1, prec).mul_pow2(-(n_bits as i64 + 1));
        count *= 2;
    }
}

fn gamma_uncached(prec: u32) -> Ball {
    // N = 2^j with N comparable to the bit precision keeps the
    // Bernoulli tail short; ln N = j ln 2.
    let j = (64 - (prec as u64 / 4 + 32).leading_zeros()).max(5);
    let n = 1u64 << j;
    let mut h = Ball::exact_int(0, prec);
    for i in 1..=n {
        h = h.add(&Ball::ratio(&BigInt::one(), &BigUint::from(i), prec));
    }
    h.sub(&ln2(prec).mul_int(j as i64)).sub(&harmonic_correction_pow2(j, prec))
}

/// Euler–Mascheroni constant `γ = lim (H_n - ln n)`.
pub fn euler_gamma(prec: u32) -> Ball {
    static CACHE: OnceLock<Mutex<HashMap<u32, Ball>>> = OnceLock::new();
    cached(&CACHE, prec, gamma_uncached)
}

/// `e^γ`.
pub fn exp_gamma(prec: u32) -> Ball {
    static CACHE: OnceLock<Mutex<HashMap<u32, Ball>>> = OnceLock::new();
    cached(&CACHE, prec, |p| exp(&euler_gamma(p)))
}

/// `H_n` for large `n` via `ln n + γ + 1/(2n) - Σ B_2k/(2k n^2k)`.
pub fn harmonic_asymptotic(n: u64, prec: u32) -> Ball {
    assert!(n >= 64, "asymptotic expansion needs a large argument");
    let nb = BigUint::from(n);
    let ln_n = ln(&Ball::exact_int(n, prec)).expect("n positive");
    let mut acc = ln_n.add(&euler_gamma(prec)).add(&Ball::ratio(&BigInt::one(), &(&nb * 2u32), prec));
    let n2 = &nb * &nb;
    let mut count = 16usize;
    'outer: loop {
        let t = tangent_cached(count);
        let mut partial = acc.clone();
        let mut n_pow = n2.clone();
        for (idx, tk) in t.iter().enumerate() {
            let k = idx as u64 + 1;
            // |B_2k| / (2k n^2k) = T_k / (2^2k (2^2k - 1) n^2k)
            let denom = (((BigUint::one() << (2 * k)) - 1u32) << (2 * k)) * &n_pow;
            let term = Ball::ratio(&BigInt::from(tk.clone()), &denom, prec);
            if term.abs_upper().bits() <= 1 {
                acc = partial.add_rad(&term.abs_upper());
                break 'outer;
            }
            partial = if k % 2 == 1 { partial.sub(&term) } else { partial.add(&term) };
            n_pow *= &n2;
        }
        count *= 2;
    }
    acc
}
