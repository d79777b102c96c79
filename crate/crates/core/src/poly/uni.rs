use std::fmt;

use super::PolyError;
use crate::field::Scalar;

/// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    prime: u64,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    /// Panics on an empty coefficient list; use [`UniPoly::zero`] instead.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let prime = coeffs.first().expect("use UniPoly::zero").prime();
        let mut p = UniPoly { prime, coeffs };
        p.trim();
        p
    }

    pub fn zero(prime: u64) -> Self {
        UniPoly { prime, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t^e`.
    pub fn monomial(e: usize, prime: u64) -> Self {
        let mut coeffs = vec![Scalar::zero(prime); e + 1];
        coeffs[e] = Scalar::one(prime);
        UniPoly { prime, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Scalar> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.prime);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Scalar::zero(self.prime);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(z) + other.coeffs.get(i).copied().unwrap_or(z))
            .collect();
        let mut p = UniPoly { prime: self.prime, coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut p = UniPoly { prime: self.prime, coeffs: self.coeffs.iter().map(|&x| x * c).collect() };
        p.trim();
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-Scalar::one(self.prime)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prime);
        }
        let mut coeffs = vec![Scalar::zero(self.prime); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = UniPoly { prime: self.prime, coeffs };
        p.trim();
        p
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.prime), self.clone());
        }
        let mut quot = vec![Scalar::zero(self.prime); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = rem[i] * lead_inv;
            if q.is_zero() {
                continue;
            }
            quot[i - dd] = q;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= q * b;
            }
        }
        rem.truncate(dd);
        let mut r = UniPoly { prime: self.prime, coeffs: rem };
        r.trim();
        let mut q = UniPoly { prime: self.prime, coeffs: quot };
        q.trim();
        (q, r)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(l.inv().expect("nonzero leading coefficient")),
        }
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd_univariate(a: &UniPoly, b: &UniPoly) -> Result<UniPoly, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
