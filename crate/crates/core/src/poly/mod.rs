//! Sparse multivariate and dense univariate polynomials over F_p.

mod parse;
mod uni;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::Scalar;

pub use parse::parse_poly;
pub use uni::{gcd_univariate, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable x{index} out of range (allowed x{first}..x{last})")]
    UnknownVariable { index: usize, first: usize, last: usize },
}

/// Exponent vector.
pub type Monomial = Vec<u32>;

/// Graded reverse lexicographic comparison of exponent vectors.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Sparse polynomial in `num_vars` variables; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    prime: u64,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize, prime: u64) -> Self {
        MultiPoly { num_vars, prime, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, num_vars: usize) -> Self {
        let mut p = Self::zero(num_vars, c.prime());
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn var(i: usize, num_vars: usize, prime: u64) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut p = Self::zero(num_vars, prime);
        p.add_term(e, Scalar::one(prime));
        p
    }

    pub fn from_terms(num_vars: usize, prime: u64, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(num_vars, prime);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `c_0 x_0 + ... + c_{m-1} x_{m-1}`.
    pub fn from_linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let prime = coeffs[0].prime();
        Self::from_terms(
            n,
            prime,
            coeffs.iter().enumerate().map(|(i, &c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c)
            }),
        )
    }

    /// `c + a_1 x_1 + ... + a_n x_n` from `(c, a_1, ..., a_n)`, in `n`
    /// variables.
    pub fn from_affine_linear(form: &[Scalar]) -> Self {
        let n = form.len() - 1;
        let mut p = Self::constant(form[0], n);
        for (i, &a) in form[1..].iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, a);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.len(), self.num_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Terms in descending graded reverse lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m, *c)).collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }

    pub fn coeff(&self, m: &[u32]) -> Scalar {
        self.terms.get(m).copied().unwrap_or_else(|| Scalar::zero(self.prime))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.num_vars, "evaluation point length");
        let mut acc = Scalar::zero(self.prime);
        for (m, &c) in &self.terms {
            let mut t = c;
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t *= x.pow(e as u64);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn scale(&self, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars, self.prime);
        }
        MultiPoly {
            num_vars: self.num_vars,
            prime: self.prime,
            terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-Scalar::one(self.prime)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Self::zero(self.num_vars, self.prime);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Scalar::one(self.prime), self.num_vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Homogenizes with a new leading variable `x0`: the result has
    /// `num_vars + 1` variables and `f^h(1, x) = f(x)`.
    pub fn homogenize(&self) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let mut out = Self::zero(self.num_vars + 1, self.prime);
        for (m, &c) in &self.terms {
            let deg: u32 = m.iter().sum();
            let mut e = Vec::with_capacity(m.len() + 1);
            e.push(d - deg);
            e.extend_from_slice(m);
            out.add_term(e, c);
        }
        out
    }

    /// Sets the leading variable to 1 and drops it.
    pub fn dehomogenize(&self) -> Self {
        assert!(self.num_vars >= 1);
        let mut out = Self::zero(self.num_vars - 1, self.prime);
        for (m, &c) in &self.terms {
            out.add_term(m[1..].to_vec(), c);
        }
        out
    }

    /// Re-embeds into `new_num_vars` variables, sending variable `i` to
    /// `map[i]`.
    pub fn remap_vars(&self, map: &[usize], new_num_vars: usize) -> Self {
        assert_eq!(map.len(), self.num_vars);
        let mut out = Self::zero(new_num_vars, self.prime);
        for (m, &c) in &self.terms {
            let mut e = vec![0; new_num_vars];
            for (i, &x) in m.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(e, c);
        }
        out
    }

    /// `f(g_1(t), ..., g_m(t))`.
    pub fn substitute_univariate(&self, subs: &[UniPoly]) -> UniPoly {
        assert_eq!(subs.len(), self.num_vars, "one substitution per variable");
        let mut acc = UniPoly::zero(self.prime);
        for (m, &c) in &self.terms {
            let mut t = UniPoly::constant(c);
            for (g, &e) in subs.iter().zip(m) {
                for _ in 0..e {
                    t = t.mul(g);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// `f(g_1, ..., g_m)` for multivariate `g_i` sharing one variable count.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.num_vars, "one image per variable");
        let nv = images.first().map_or(0, |g| g.num_vars);
        let one = Self::constant(Scalar::one(self.prime), nv);
        // powers[i][e] = g_i^e, grown on demand
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![one.clone()]; images.len()];
        let mut acc = Self::zero(nv, self.prime);
        for (m, &c) in &self.terms {
            let mut t = one.scale(c);
            for (i, &e) in m.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Text form with variables named `x{first_index}`, `x{first_index+1}`, ...
    pub fn to_text(&self, first_index: usize) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let v = c.centered();
            let (neg, mag) = if v < 0 { (true, -v) } else { (false, v) };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (j, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", j + first_index)),
                    _ => factors.push(format!("x{}^{}", j + first_index, e)),
                }
            }
            if factors.is_empty() || mag != 1 {
                factors.insert(0, mag.to_string());
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

/// `substitute_linear_forms` as a free function.
pub fn substitute_linear_forms(f: &MultiPoly, subs: &[UniPoly]) -> UniPoly {
    f.substitute_univariate(subs)
}

pub fn homogenize(f: &MultiPoly) -> MultiPoly {
    f.homogenize()
}

pub fn eval(f: &MultiPoly, point: &[Scalar]) -> Scalar {
    f.eval(point)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(0))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.to_text(0))
    }
}
