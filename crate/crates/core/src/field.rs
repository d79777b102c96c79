//! Prime-field arithmetic.
//!
//! Every scalar carries the prime it lives under, so mixing elements of two
//! different fields is caught at the first operation instead of producing a
//! silently wrong residue.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use thiserror::Error;

/// The Mersenne prime 2^61 - 1.
pub const DEFAULT_PRIME: u64 = (1u64 << 61) - 1;

/// Largest prime accepted; keeps `a + b` inside a `u64`.
const MAX_PRIME_BITS: u32 = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported range (< 2^63)")]
    PrimeTooLarge(u64),
}

/// Configuration of the ground field F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    prime: u64,
    tag: String,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { prime: DEFAULT_PRIME, tag: "mersenne61".to_string() }
    }
}

impl FieldConfig {
    pub fn new(prime: u64) -> Result<Self, FieldError> {
        Self::with_tag(prime, format!("p{prime}"))
    }

    pub fn with_tag(prime: u64, tag: impl Into<String>) -> Result<Self, FieldError> {
        if prime >= 1u64 << MAX_PRIME_BITS {
            return Err(FieldError::PrimeTooLarge(prime));
        }
        if !is_prime(prime) {
            return Err(FieldError::NotPrime(prime));
        }
        Ok(FieldConfig { prime, tag: tag.into() })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.prime)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.prime)
    }

    /// Canonical image of a nonnegative integer.
    pub fn elem(&self, v: u64) -> Scalar {
        Scalar::new(v, self.prime)
    }

    /// Canonical image of a signed integer.
    pub fn from_i64(&self, v: i64) -> Scalar {
        Scalar::from_i64(v, self.prime)
    }

    pub fn elems(&self, vs: &[i64]) -> Vec<Scalar> {
        vs.iter().map(|&v| self.from_i64(v)).collect()
    }
}

/// An element of F_p, stored canonically in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u64,
    prime: u64,
}

impl Scalar {
    #[inline]
    pub fn new(v: u64, prime: u64) -> Self {
        Scalar { value: v % prime, prime }
    }

    pub fn from_i64(v: i64, prime: u64) -> Self {
        let r = (v as i128).rem_euclid(prime as i128) as u64;
        Scalar { value: r, prime }
    }

    #[inline]
    pub fn zero(prime: u64) -> Self {
        Scalar { value: 0, prime }
    }

    #[inline]
    pub fn one(prime: u64) -> Self {
        Scalar { value: 1, prime }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> u64 {
        self.prime
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.value == 1
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn centered(self) -> i128 {
        if self.value > self.prime / 2 {
            self.value as i128 - self.prime as i128
        } else {
            self.value as i128
        }
    }

    #[inline]
    fn check(self, other: Scalar) {
        assert_eq!(self.prime, other.prime, "arithmetic between scalars of different fields");
    }

    pub fn pow(self, mut exp: u64) -> Scalar {
        let mut base = self;
        let mut acc = Scalar::one(self.prime);
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Scalar, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse);
        }
        // extended Euclid on (value, prime)
        let (mut r0, mut r1) = (self.prime as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Scalar { value: t0.rem_euclid(self.prime as i128) as u64, prime: self.prime })
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    let prod = a as u128 * b as u128;
    if p == DEFAULT_PRIME {
        let lo = (prod as u64) & DEFAULT_PRIME;
        let hi = (prod >> 61) as u64;
        let s = lo + hi;
        if s >= DEFAULT_PRIME {
            s - DEFAULT_PRIME
        } else {
            s
        }
    } else {
        (prod % p as u128) as u64
    }
}

impl Add for Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        let s = self.value + rhs.value;
        Scalar { value: if s >= self.prime { s - self.prime } else { s }, prime: self.prime }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        let value = if self.value >= rhs.value { self.value - rhs.value } else { self.value + self.prime - rhs.value };
        Scalar { value, prime: self.prime }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, rhs: Scalar) -> Scalar {
        self.check(rhs);
        Scalar { value: mul_mod(self.value, rhs.value, self.prime), prime: self.prime }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    #[inline]
    fn neg(self) -> Scalar {
        Scalar { value: if self.value == 0 { 0 } else { self.prime - self.value }, prime: self.prime }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by representative in `[0, p)`.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.prime, self.value).cmp(&(other.prime, other.value))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `(1, gamma, gamma^2, ..., gamma^(length-1))`.
pub fn vandermonde_row(gamma: Scalar, length: usize) -> Vec<Scalar> {
    let mut row = Vec::with_capacity(length);
    let mut acc = Scalar::one(gamma.prime());
    for _ in 0..length {
        row.push(acc);
        acc *= gamma;
    }
    row
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, b);
            }
            b = mulm(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for &a in &SMALL {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
