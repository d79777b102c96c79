//! Buchberger's algorithm with sugar pair selection and the
//! Gebauer–Möller criteria.

use std::cmp::Ordering;

use super::{GroebnerError, MonomialOrder};
use crate::field::Scalar;
use crate::poly::{Monomial, MultiPoly};

/// Default cap on the number of S-pairs reduced by one call.
pub const DEFAULT_PAIR_BUDGET: usize = 50_000;

/// Polynomial with terms sorted in descending order.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    terms: Vec<(Monomial, Scalar)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

impl SortedPoly {
    fn from_multi(f: &MultiPoly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Scalar)> = f.terms().map(|(m, c)| (m.clone(), *c)).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    fn to_multi(&self, num_vars: usize, prime: u64) -> MultiPoly {
        MultiPoly::from_terms(num_vars, prime, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u32] {
        &self.terms[0].0
    }

    fn lc(&self) -> Scalar {
        self.terms[0].1
    }

    fn make_monic(&mut self) {
        if let Some(&(_, lc)) = self.terms.first() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for t in &mut self.terms {
                t.1 *= inv;
            }
        }
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }
}

/// `tail - c * shift * g`, where `tail` and `g` are sorted descending.
fn sub_mul(
    tail: &[(Monomial, Scalar)],
    c: Scalar,
    shift: &[u32],
    g: &[(Monomial, Scalar)],
    order: MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(tail.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |t: &(Monomial, Scalar)| -> (Monomial, Scalar) {
        (t.0.iter().zip(shift).map(|(a, b)| a + b).collect(), -(c * t.1))
    };
    let mut pending = g.first().map(shifted);
    while i < tail.len() || pending.is_some() {
        match (&tail.get(i), &pending) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push((*a).clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = g.get(j).map(shifted);
                }
                Ordering::Equal => {
                    let s = a.1 + b.1;
                    if !s.is_zero() {
                        out.push((a.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    pending = g.get(j).map(shifted);
                }
            },
            (Some(a), None) => {
                out.push((*a).clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = g.get(j).map(shifted);
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Full normal form of `f` modulo the polynomials `basis` (all monic).
fn normal_form(f: &SortedPoly, basis: &[&SortedPoly], order: MonomialOrder) -> SortedPoly {
    let mut done: Vec<(Monomial, Scalar)> = Vec::new();
    let mut tail = f.terms.clone();
    let mut start = 0;
    while start < tail.len() {
        let (m, c) = (&tail[start].0, tail[start].1);
        match basis.iter().find(|g| divides(g.lm(), m)) {
            Some(g) => {
                let shift: Monomial = m.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                let coef = c * g.lc().inv().expect("monic basis");
                // leading terms cancel exactly; skip them
                tail = sub_mul(&tail[start + 1..], coef, &shift, &g.terms[1..], order);
                start = 0;
            }
            None => {
                done.push(tail[start].clone());
                start += 1;
            }
        }
    }
    SortedPoly { terms: done }
}

fn s_poly(f: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let l = lcm(f.lm(), g.lm());
    let sf: Monomial = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
    let sg: Monomial = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
    // f, g monic: (l/lm f) f - (l/lm g) g, dropping the cancelled leads
    let one = Scalar::one(f.lc().prime());
    let a = sub_mul(&[], -one, &sf, &f.terms[1..], order);
    SortedPoly { terms: sub_mul(&a, one, &sg, &g.terms[1..], order) }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Entry {
    poly: SortedPoly,
    sugar: u64,
    active: bool,
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by ascending
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    num_vars: usize,
    prime: u64,
    sorted: Vec<SortedPoly>,
    polys: Vec<MultiPoly>,
    pairs_reduced: usize,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    /// Number of S-pairs reduced while computing this basis.
    pub fn pairs_reduced(&self) -> usize {
        self.pairs_reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|p| p.lm().to_vec()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0].is_constant()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        let sp = SortedPoly::from_multi(f, self.order);
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        normal_form(&sp, &refs, self.order).to_multi(self.num_vars, self.prime)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let s = s_poly(&self.sorted[i], &self.sorted[j], self.order);
                if !normal_form(&s, &refs, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks monic leads and that no term of any element is divisible by
    /// another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        for (i, p) in self.sorted.iter().enumerate() {
            if !p.lc().is_one() {
                return false;
            }
            for (j, q) in self.sorted.iter().enumerate() {
                if i != j && p.terms.iter().any(|(m, _)| divides(q.lm(), m)) {
                    return false;
                }
            }
        }
        true
    }
}

fn pair_cmp(a: &Pair, b: &Pair, order: MonomialOrder) -> Ordering {
    a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

fn make_pair(g: &[Entry], i: usize, j: usize) -> Pair {
    let (a, b) = (&g[i], &g[j]);
    let l = lcm(a.poly.lm(), b.poly.lm());
    let dl = degree(&l);
    let sugar = (a.sugar + dl - degree(a.poly.lm())).max(b.sugar + dl - degree(b.poly.lm()));
    Pair { i, j, lcm: l, sugar }
}

/// Gebauer–Möller update after appending entry `t` to `g`.
fn update(g: &mut [Entry], pairs: &mut Vec<Pair>, t: usize) {
    let h_lm = g[t].poly.lm().to_vec();
    let mut c: Vec<Pair> = (0..t).filter(|&i| g[i].active).map(|i| make_pair(g, i, t)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = (!c.is_empty()).then(|| c.remove(0)) {
        let disjoint = coprime(g[p.i].poly.lm(), &h_lm);
        let dominated = c.iter().chain(d.iter()).any(|q| divides(&q.lcm, &p.lcm));
        if disjoint || !dominated {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d.into_iter().filter(|p| !coprime(g[p.i].poly.lm(), &h_lm)).collect();
    pairs.retain(|p| {
        if !divides(&h_lm, &p.lcm) {
            return true;
        }
        let l_it = lcm(g[p.i].poly.lm(), &h_lm);
        let l_jt = lcm(g[p.j].poly.lm(), &h_lm);
        l_it == p.lcm || l_jt == p.lcm
    });
    pairs.extend(e);
    for gi in g.iter_mut().take(t) {
        if gi.active && divides(&h_lm, gi.poly.lm()) {
            gi.active = false;
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`, all in
/// `num_vars` variables over F_prime.
pub fn buchberger_with_budget(
    num_vars: usize,
    prime: u64,
    generators: &[MultiPoly],
    order: MonomialOrder,
    budget: usize,
) -> Result<GroebnerBasis, GroebnerError> {
    for f in generators {
        if f.num_vars() != num_vars {
            return Err(GroebnerError::NumVarsMismatch { expected: num_vars, found: f.num_vars() });
        }
    }
    let unit = |pairs_reduced| {
        let one = MultiPoly::constant(Scalar::one(prime), num_vars);
        GroebnerBasis {
            order,
            num_vars,
            prime,
            sorted: vec![SortedPoly::from_multi(&one, order)],
            polys: vec![one],
            pairs_reduced,
        }
    };

    let mut g: Vec<Entry> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for f in generators {
        let sp = SortedPoly::from_multi(f, order);
        let active: Vec<&SortedPoly> = g.iter().filter(|e| e.active).map(|e| &e.poly).collect();
        let mut h = normal_form(&sp, &active, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant() {
            return Ok(unit(0));
        }
        let sugar = f.total_degree().unwrap_or(0) as u64;
        g.push(Entry { poly: h, sugar, active: true });
        let t = g.len() - 1;
        update(&mut g, &mut pairs, t);
    }

    let mut reduced = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len()).min_by(|&a, &b| pair_cmp(&pairs[a], &pairs[b], order)).unwrap();
        let pair = pairs.swap_remove(best);
        reduced += 1;
        if reduced > budget {
            return Err(GroebnerError::BudgetExceeded { budget });
        }
        let s = s_poly(&g[pair.i].poly, &g[pair.j].poly, order);
        let active: Vec<&SortedPoly> = g.iter().filter(|e| e.active).map(|e| &e.poly).collect();
        let mut h = normal_form(&s, &active, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant() {
            return Ok(unit(reduced));
        }
        g.push(Entry { poly: h, sugar: pair.sugar, active: true });
        let t = g.len() - 1;
        update(&mut g, &mut pairs, t);
    }

    // The active set is minimal; inter-reduce tails.
    let minimal: Vec<SortedPoly> = g.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
    let mut out: Vec<SortedPoly> = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<&SortedPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
        let tail = SortedPoly { terms: p.terms[1..].to_vec() };
        let mut r = normal_form(&tail, &others, order);
        r.terms.insert(0, p.terms[0].clone());
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let polys = out.iter().map(|p| p.to_multi(num_vars, prime)).collect();
    Ok(GroebnerBasis { order, num_vars, prime, sorted: out, polys, pairs_reduced: reduced })
}

/// [`buchberger_with_budget`] with the default pair budget; the generator
/// list must be nonempty.
pub fn buchberger(generators: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let first = generators.first().ok_or(GroebnerError::NoGenerators)?;
    buchberger_with_budget(first.num_vars(), first.prime(), generators, order, DEFAULT_PAIR_BUDGET)
}

/// Krull dimension of `k[x]/I` from the leading-term ideal: the largest
/// set of variables containing the support of no leading monomial.
/// Returns -1 for the unit ideal.
pub fn ideal_dimension(g: &GroebnerBasis) -> i64 {
    if g.is_unit() {
        return -1;
    }
    let supports: Vec<u64> = g
        .leading_monomials()
        .iter()
        .map(|m| m.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1 << i)))
        .collect();
    max_independent_set(g.num_vars(), &supports)
}

/// Largest `U ⊆ {0..n}` with no support contained in `U`.
pub(crate) fn max_independent_set(n: usize, supports: &[u64]) -> i64 {
    assert!(n < 64);
    fn search(n: usize, supports: &[u64], idx: usize, current: u64, size: i64, best: &mut i64) {
        if size + (n - idx) as i64 <= *best {
            return;
        }
        if idx == n {
            *best = size;
            return;
        }
        let with = current | (1 << idx);
        if supports.iter().all(|&s| s & !with != 0) {
            search(n, supports, idx + 1, with, size + 1, best);
        }
        search(n, supports, idx + 1, current, size, best);
    }
    if supports.contains(&0) {
        return -1;
    }
    let mut best = -1;
    search(n, supports, 0, 0, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str, nv: usize) -> MultiPoly {
        parse_poly(s, nv, 0, 101).unwrap()
    }

    fn gb(gens: &[&str], nv: usize, order: MonomialOrder) -> GroebnerBasis {
        let gens: Vec<MultiPoly> = gens.iter().map(|s| p(s, nv)).collect();
        let g = buchberger(&gens, order).unwrap();
        assert!(g.is_groebner());
        assert!(g.is_reduced());
        g
    }

    #[test]
    fn buchberger_examples() {
        let g = gb(&["x0^2", "x0*x1"], 2, MonomialOrder::GrevLex);
        assert_eq!(g.polys(), &[p("x0*x1", 2), p("x0^2", 2)]);

        let g = gb(&["x0 - 1"], 1, MonomialOrder::GrevLex);
        assert_eq!(g.polys(), &[p("x0 - 1", 1)]);

        let g = gb(&["x0", "x0 + 1"], 1, MonomialOrder::GrevLex);
        assert!(g.is_unit());
        assert_eq!(g.polys(), &[p("1", 1)]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(ideal_dimension(&gb(&["x1"], 3, MonomialOrder::GrevLex)), 2);
        assert_eq!(ideal_dimension(&gb(&["x0", "x0 + 1"], 2, MonomialOrder::GrevLex)), -1);
        assert_eq!(ideal_dimension(&gb(&["x0^2", "x0*x1"], 2, MonomialOrder::GrevLex)), 1);
    }

    #[test]
    fn twisted_cubic_lex_and_grevlex() {
        let gens = ["x1 - x0^2", "x2 - x0^3"];
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let g = gb(&gens, 3, order);
            assert_eq!(ideal_dimension(&g), 1);
            assert!(g.contains(&p("x0*x2 - x1^2", 3)));
        }
    }

    #[test]
    fn cyclic3_is_zero_dimensional() {
        let g = gb(&["x0 + x1 + x2", "x0*x1 + x1*x2 + x2*x0", "x0*x1*x2 - 1"], 3, MonomialOrder::GrevLex);
        assert_eq!(ideal_dimension(&g), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let gens: Vec<MultiPoly> = ["x0^3 - x1*x2", "x1^3 - x0*x2", "x2^3 - x0*x1"].iter().map(|s| p(s, 3)).collect();
        let err = buchberger_with_budget(3, 101, &gens, MonomialOrder::Lex, 1).unwrap_err();
        assert_eq!(err, GroebnerError::BudgetExceeded { budget: 1 });
    }

    fn random_poly() -> impl proptest::strategy::Strategy<Value = MultiPoly> {
        use proptest::prelude::*;
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), 1u64..101), 1..4)
            .prop_map(|terms| MultiPoly::from_terms(3, 101, terms.into_iter().map(|(m, c)| (m, Scalar::new(c, 101)))))
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn bases_are_sound_and_order_independent(gens in proptest::collection::vec(random_poly(), 1..4)) {
            let a = buchberger(&gens, MonomialOrder::GrevLex).unwrap();
            let b = buchberger(&gens, MonomialOrder::Lex).unwrap();
            proptest::prop_assert!(a.is_groebner() && a.is_reduced());
            proptest::prop_assert!(b.is_groebner() && b.is_reduced());
            for g in &gens {
                proptest::prop_assert!(a.contains(g) && b.contains(g));
            }
            // same ideal under both orders
            for g in b.polys() {
                proptest::prop_assert!(a.contains(g));
            }
            for g in a.polys() {
                proptest::prop_assert!(b.contains(g));
            }
            proptest::prop_assert_eq!(ideal_dimension(&a), ideal_dimension(&b));
        }
    }

    #[test]
    fn independent_sets() {
        // supports {0}, {0,1}
        assert_eq!(max_independent_set(2, &[0b01, 0b11]), 1);
        assert_eq!(max_independent_set(3, &[]), 3);
        // constant monomial has empty support: nothing is independent
        assert_eq!(max_independent_set(2, &[0]), -1);
    }
}
