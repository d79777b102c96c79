//! Test-variety generators and family-level failure counting.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64`, whose output stream is
//! fixed across platforms and crate versions, with field elements drawn
//! uniformly from `[0, p)` by `gen_range`.

use std::fmt::{self, Write as _};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::constructions::{Eps, Kind, Subspace, SubspaceFamily};
use crate::field::{FieldConfig, Scalar};
use crate::groebner::{
    evades_with_budget, strongly_evades_with_budget, Ambient, Component, GroebnerError, VarietySpec,
    DEFAULT_PAIR_BUDGET,
};
use crate::linalg::{subspace_intersection_dim, AffineSubspace, LinearForm, MatrixFp, ProjSubspace};
use crate::poly::{gcd_univariate, MultiPoly, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("oracle not applicable: {0}")]
    OracleMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Which exact oracle decided a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Oracle {
    Linalg,
    Curve,
    Groebner,
}

impl Oracle {
    pub fn as_str(self) -> &'static str {
        match self {
            Oracle::Linalg => "linalg",
            Oracle::Curve => "curve",
            Oracle::Groebner => "groebner",
        }
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Oracle {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linalg" => Ok(Oracle::Linalg),
            "curve" => Ok(Oracle::Curve),
            "groebner" => Ok(Oracle::Groebner),
            _ => Err(VerifyError::InvalidInput(format!("unknown oracle {s:?}"))),
        }
    }
}

fn random_scalar(rng: &mut ChaCha8Rng, field: &FieldConfig) -> Scalar {
    field.elem(rng.gen_range(0..field.prime()))
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng, field: &FieldConfig) -> Vec<Vec<Scalar>> {
    (0..rows).map(|_| (0..cols).map(|_| random_scalar(rng, field)).collect()).collect()
}

fn full_rank(rows: &[Vec<Scalar>], cols: usize, prime: u64) -> bool {
    rows.is_empty() || MatrixFp::from_rows(rows, cols, prime).rank() == rows.len()
}

/// Uniformly random `dim`-dimensional subspace of `P^n` (rejection
/// sampling on the `n - dim` defining forms).
pub fn random_subspace(n: usize, dim: usize, rng: &mut ChaCha8Rng, field: &FieldConfig) -> ProjSubspace {
    assert!(dim <= n);
    if dim == n {
        return ProjSubspace::ambient(n, field.prime());
    }
    loop {
        let rows = random_matrix(n - dim, n + 1, rng, field);
        if full_rank(&rows, n + 1, field.prime()) {
            let forms: Vec<LinearForm> = rows.into_iter().map(LinearForm).collect();
            return ProjSubspace::from_forms(&forms, n).expect("full rank forms");
        }
    }
}

/// Random affine subspace of `A^n` of dimension `dim`, cut out by forms
/// `(c, a_1..a_n)` with independent linear parts.
pub fn random_affine_subspace(n: usize, dim: usize, rng: &mut ChaCha8Rng, field: &FieldConfig) -> AffineSubspace {
    assert!(dim < n);
    loop {
        let rows = random_matrix(n - dim, n + 1, rng, field);
        let linear: Vec<Vec<Scalar>> = rows.iter().map(|r| r[1..].to_vec()).collect();
        if full_rank(&linear, n, field.prime()) {
            return AffineSubspace::from_affine_forms(&rows, n).expect("independent linear parts");
        }
    }
}

/// Union of `count` distinct random `dim`-dimensional linear subspaces of
/// `P^n`, one component each (degree 1), deterministic in `seed`.
pub fn gen_linear_arrangement(n: usize, dim: usize, count: usize, seed: u64, field: &FieldConfig) -> VarietySpec {
    assert!(count >= 1 && dim < n, "need count >= 1 and dim <= n - 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spaces: Vec<ProjSubspace> = Vec::with_capacity(count);
    while spaces.len() < count {
        let s = random_subspace(n, dim, &mut rng, field);
        if !spaces.iter().any(|t| t.contains_subspace(&s)) {
            spaces.push(s);
        }
    }
    let comps = spaces
        .iter()
        .map(|s| {
            let gens = s.forms().iter().map(|f| MultiPoly::from_linear(f.coeffs())).collect();
            Component::new(gens, dim as i64, 1).with_points(vec![s.basis()[0].clone()])
        })
        .collect();
    VarietySpec::new(Ambient::Projective(n), field.prime(), comps)
        .expect("linear components are well formed")
        .with_name(format!("linear-arrangement-n{n}-dim{dim}-c{count}-s{seed}"))
}

/// Union of `count` distinct random `dim`-dimensional affine subspaces of
/// `A^n`, deterministic in `seed`.
pub fn gen_affine_arrangement(n: usize, dim: usize, count: usize, seed: u64, field: &FieldConfig) -> VarietySpec {
    assert!(count >= 1 && dim < n, "need count >= 1 and dim <= n - 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spaces: Vec<AffineSubspace> = Vec::with_capacity(count);
    while spaces.len() < count {
        let s = random_affine_subspace(n, dim, &mut rng, field);
        if !spaces.iter().any(|t| t.closure().contains_subspace(&s.closure())) {
            spaces.push(s);
        }
    }
    let comps = spaces
        .iter()
        .map(|s| {
            let gens = s.affine_forms().iter().map(|f| MultiPoly::from_affine_linear(f)).collect();
            Component::new(gens, dim as i64, 1).with_points(vec![s.base_point().to_vec()])
        })
        .collect();
    VarietySpec::new(Ambient::Affine(n), field.prime(), comps)
        .expect("linear components are well formed")
        .with_name(format!("affine-arrangement-n{n}-dim{dim}-c{count}-s{seed}"))
}

/// The rational normal curve `[1 : t : ... : t^n]` with its 2×2 minors.
pub fn gen_rational_normal_curve(n: usize, field: &FieldConfig) -> VarietySpec {
    VarietySpec::rational_normal_curve(n, field.prime())
}

/// Exact emptiness test for `W ∩ C`, `C` the stored rational normal curve:
/// the affine part is empty iff the forms restricted to `(1, t, ..., t^n)`
/// have constant gcd, and the point at infinity `[0 : ... : 0 : 1]` lies on
/// `W` iff every form has zero last coefficient.
pub fn curve_miss_oracle(curve: &VarietySpec, w: &ProjSubspace) -> Result<bool, VerifyError> {
    let n = curve
        .curve_degree()
        .ok_or_else(|| VerifyError::OracleMismatch("variety has no rational normal curve parametrization".into()))?;
    if w.ambient_n() != n {
        return Err(VerifyError::InvalidInput(format!("subspace lives in P^{}, curve in P^{n}", w.ambient_n())));
    }
    let prime = curve.prime();
    let mut g = UniPoly::zero(prime);
    for f in w.forms() {
        let restricted = UniPoly::new(f.coeffs().to_vec());
        g = gcd_univariate(&g, &restricted).unwrap_or_else(|_| UniPoly::zero(prime));
    }
    // g = 0 means the curve lies inside W
    let affine_empty = g.degree() == Some(0);
    let infinity_on_w = w.forms().iter().all(|f| f.coeffs()[n].is_zero());
    Ok(affine_empty && !infinity_on_w)
}

/// Evasion verdict of one member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberVerdict {
    pub index: Vec<u64>,
    pub evades: bool,
    pub degenerate: bool,
    pub oracle: Oracle,
}

/// Exact failure count of a family against one variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureReport {
    pub family_id: String,
    pub variety_id: String,
    pub oracle: Oracle,
    pub eps: Option<Eps>,
    pub verdicts: Vec<MemberVerdict>,
}

impl FailureReport {
    pub fn total(&self) -> usize {
        self.verdicts.len()
    }

    pub fn evading(&self) -> usize {
        self.verdicts.iter().filter(|v| v.evades).count()
    }

    pub fn failing(&self) -> usize {
        self.total() - self.evading()
    }

    /// `failing / total`, reduced.
    pub fn fraction(&self) -> Ratio<u64> {
        Ratio::new(self.failing() as u64, self.total().max(1) as u64)
    }

    /// For an eps-family: fraction at most eps. For an exact family: at
    /// least one member evades.
    pub fn meets_guarantee(&self) -> bool {
        match self.eps {
            Some(e) => self.fraction() <= e,
            None => self.evading() >= 1,
        }
    }

    /// Structured text; the fraction is printed unreduced as
    /// `failing/total`.
    pub fn to_text(&self) -> String {
        let mut s = String::from("format=1\n");
        let _ = writeln!(s, "family {}", self.family_id);
        let _ = writeln!(s, "variety {}", self.variety_id);
        let _ = writeln!(s, "oracle {}", self.oracle);
        let _ = writeln!(s, "eps {}", self.eps.map_or_else(|| "none".to_string(), |e| e.to_string()));
        let _ = writeln!(s, "total {}", self.total());
        let _ = writeln!(s, "evading {}", self.evading());
        let _ = writeln!(s, "failing {}", self.failing());
        let _ = writeln!(s, "fraction {}/{}", self.failing(), self.total());
        let _ = writeln!(s, "guarantee {}", if self.meets_guarantee() { "met" } else { "violated" });
        for (i, v) in self.verdicts.iter().enumerate() {
            let index: Vec<String> = v.index.iter().map(u64::to_string).collect();
            let status = match (v.degenerate, v.evades) {
                (true, _) => "degenerate",
                (false, true) => "evades",
                (false, false) => "fails",
            };
            let _ = writeln!(s, "verdict {i} index {} {status} {}", index.join(","), v.oracle);
        }
        s
    }
}

/// Identifier recorded in reports: construction and parameters.
pub fn family_id(h: &SubspaceFamily) -> String {
    let p = h.params();
    let eps = p.eps.map_or_else(|| "none".to_string(), |e| e.to_string());
    format!("{}[{} n={} d={} k={} eps={} p={}]", h.construction(), p.kind.as_str(), p.n, p.d, p.k, eps, h.prime())
}

fn linear_components(v: &VarietySpec) -> Result<Vec<(ProjSubspace, i64)>, VerifyError> {
    if !v.ambient().is_projective() || !v.is_linear() {
        return Err(VerifyError::OracleMismatch(
            "the linalg oracle needs a projective variety with linear components".into(),
        ));
    }
    let n = v.ambient().n();
    v.components()
        .iter()
        .map(|c| {
            let forms: Vec<LinearForm> = c
                .generators
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| {
                    LinearForm(
                        (0..=n)
                            .map(|i| {
                                let mut e = vec![0; n + 1];
                                e[i] = 1;
                                g.coeff(&e)
                            })
                            .collect(),
                    )
                })
                .collect();
            let s = if forms.is_empty() {
                ProjSubspace::ambient(n, v.prime())
            } else {
                ProjSubspace::from_forms(&forms, n).map_err(|e| VerifyError::InvalidInput(e.to_string()))?
            };
            Ok((s, c.claimed_dim))
        })
        .collect()
}

/// Linear-algebra evasion verdict against linear components.
pub fn linalg_evades(comps: &[(ProjSubspace, i64)], w: &ProjSubspace) -> bool {
    let n = w.ambient_n() as i64;
    let k = w.dim() as i64;
    comps.iter().all(|(c, dim)| subspace_intersection_dim(w, c) <= (dim + k - n).max(-1))
}

/// Per-member evasion verdicts of `h` against `v`, with the exact failure
/// fraction. Degenerate members always count as failures.
pub fn family_failure_fraction(
    h: &SubspaceFamily,
    v: &VarietySpec,
    oracle: Oracle,
) -> Result<FailureReport, VerifyError> {
    family_failure_fraction_with_budget(h, v, oracle, DEFAULT_PAIR_BUDGET)
}

pub fn family_failure_fraction_with_budget(
    h: &SubspaceFamily,
    v: &VarietySpec,
    oracle: Oracle,
    budget: usize,
) -> Result<FailureReport, VerifyError> {
    if v.components().is_empty() {
        return Err(VerifyError::InvalidInput("the variety has no components".into()));
    }
    if h.is_empty() {
        return Err(VerifyError::InvalidInput("the family has no members".into()));
    }
    let p = h.params();
    let (kind_ok, n) = match v.ambient() {
        Ambient::Projective(n) => (p.kind == Kind::Projective, n),
        Ambient::Affine(n) => (p.kind == Kind::Affine, n),
    };
    if !kind_ok || n != p.n || v.prime() != h.prime() {
        return Err(VerifyError::InvalidInput(format!(
            "family lives in {} space of dimension {} over F_{}, variety in {:?} over F_{}",
            p.kind.as_str(),
            p.n,
            h.prime(),
            v.ambient(),
            v.prime()
        )));
    }
    let linear = match oracle {
        Oracle::Linalg => Some(linear_components(v)?),
        Oracle::Curve => {
            if v.curve_degree().is_none() || p.kind != Kind::Projective {
                return Err(VerifyError::OracleMismatch(
                    "the curve oracle needs a stored rational normal curve".into(),
                ));
            }
            if 1 + p.k as i64 - p.n as i64 > -1 {
                return Err(VerifyError::OracleMismatch(format!(
                    "the curve oracle decides emptiness only, but k = {} allows a {}-dimensional intersection",
                    p.k,
                    1 + p.k as i64 - p.n as i64
                )));
            }
            None
        }
        Oracle::Groebner => None,
    };
    let verdicts: Result<Vec<MemberVerdict>, VerifyError> = h
        .members()
        .par_iter()
        .map(|m| {
            let evades = !m.degenerate
                && match (&m.subspace, oracle) {
                    (Subspace::Projective(w), Oracle::Linalg) => linalg_evades(linear.as_ref().unwrap(), w),
                    (Subspace::Projective(w), Oracle::Curve) => curve_miss_oracle(v, w)?,
                    (Subspace::Projective(w), Oracle::Groebner) => evades_with_budget(v, w, budget)?,
                    (Subspace::Affine(w), Oracle::Groebner) => strongly_evades_with_budget(v, w, budget)?,
                    (Subspace::Affine(_), _) => {
                        return Err(VerifyError::OracleMismatch(
                            "affine families are checked for strong evasion by the groebner oracle".into(),
                        ))
                    }
                };
            Ok(MemberVerdict { index: m.index.clone(), evades, degenerate: m.degenerate, oracle })
        })
        .collect();
    Ok(FailureReport {
        family_id: family_id(h),
        variety_id: if v.name().is_empty() { "unnamed".into() } else { v.name().into() },
        oracle,
        eps: p.eps,
        verdicts: verdicts?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{basic_family, chow_family, FamilyParams};
    use crate::groebner::evades;

    fn f101() -> FieldConfig {
        FieldConfig::new(101).unwrap()
    }

    fn proj(f: &FieldConfig, forms: &[&[i64]], n: usize) -> ProjSubspace {
        let forms: Vec<LinearForm> = forms.iter().map(|c| LinearForm(f.elems(c))).collect();
        ProjSubspace::from_forms(&forms, n).unwrap()
    }

    #[test]
    fn arrangements_are_deterministic_and_distinct() {
        let f = f101();
        let a = gen_linear_arrangement(4, 2, 3, 7, &f);
        assert_eq!(a, gen_linear_arrangement(4, 2, 3, 7, &f));
        assert_ne!(a, gen_linear_arrangement(4, 2, 3, 8, &f));
        assert_eq!(a.components().len(), 3);
        assert_eq!(a.total_degree(), 3);
        let line = gen_linear_arrangement(2, 1, 1, 0, &f);
        assert_eq!(line.components()[0].generators.len(), 1);
        for seed in 0..100 {
            let v = gen_linear_arrangement(3, 1, 2, seed, &f);
            let comps = linear_components(&v).unwrap();
            assert_ne!(comps[0].0.forms().len(), 0);
            assert!(!comps[0].0.contains_subspace(&comps[1].0));
        }
        let aff = gen_affine_arrangement(3, 1, 2, 5, &f);
        assert!(aff.claims_hold().unwrap());
    }

    #[test]
    fn curve_oracle_examples() {
        let f = f101();
        let cubic = gen_rational_normal_curve(3, &f);
        assert!(curve_miss_oracle(&cubic, &proj(&f, &[&[1, 0, 0, 0], &[0, 0, 0, 1]], 3)).unwrap());
        let conic = gen_rational_normal_curve(2, &f);
        assert!(!curve_miss_oracle(&conic, &proj(&f, &[&[0, 1, 0]], 2)).unwrap());
        // W through [1:1:1:1]
        assert!(!curve_miss_oracle(&cubic, &proj(&f, &[&[1, -1, 0, 0], &[0, 0, 1, -1]], 3)).unwrap());
        // W through the point at infinity [0:0:0:1]
        assert!(!curve_miss_oracle(&cubic, &proj(&f, &[&[1, 0, 0, 0], &[0, 1, 0, 0]], 3)).unwrap());
        // t^2 - 2 is irreducible over F_101 (101 = 5 mod 8): a common factor
        // without rational roots still means the curve meets W over the closure
        let w = proj(&f, &[&[-2, 0, 1, 0], &[0, -2, 0, 1]], 3);
        assert!(!curve_miss_oracle(&cubic, &w).unwrap());
        assert!(!evades(&cubic, &w).unwrap());
    }

    #[test]
    fn basic_family_against_random_lines() {
        let f = f101();
        let fam = basic_family(&FamilyParams::new(2, 1, 1).unwrap(), &f).unwrap();
        for seed in 0..20 {
            let v = gen_linear_arrangement(2, 1, 1, seed, &f);
            let r = family_failure_fraction(&fam, &v, Oracle::Linalg).unwrap();
            assert!(r.failing() <= 1);
            assert!(r.meets_guarantee());
            let g = family_failure_fraction(&fam, &v, Oracle::Groebner).unwrap();
            assert_eq!(
                r.verdicts.iter().map(|x| x.evades).collect::<Vec<_>>(),
                g.verdicts.iter().map(|x| x.evades).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let f = f101();
        let fam = basic_family(&FamilyParams::new(2, 1, 1).unwrap(), &f).unwrap();
        let empty = VarietySpec::new(Ambient::Projective(2), 101, Vec::new()).unwrap();
        assert!(matches!(family_failure_fraction(&fam, &empty, Oracle::Groebner), Err(VerifyError::InvalidInput(_))));
        let conic = gen_rational_normal_curve(2, &f);
        assert!(matches!(family_failure_fraction(&fam, &conic, Oracle::Linalg), Err(VerifyError::OracleMismatch(_))));
        // lines in P^2 may meet the conic in points: the curve oracle does not apply
        assert!(matches!(family_failure_fraction(&fam, &conic, Oracle::Curve), Err(VerifyError::OracleMismatch(_))));
    }

    #[test]
    fn chow_family_report_text() {
        let f = FieldConfig::default();
        let fam = chow_family(&FamilyParams::new(2, 1, 0).unwrap().with_eps(Eps::new(1, 2)).unwrap(), &f).unwrap();
        let v = gen_linear_arrangement(2, 1, 1, 3, &f);
        let r = family_failure_fraction(&fam, &v, Oracle::Linalg).unwrap();
        assert!(r.meets_guarantee());
        let text = r.to_text();
        assert!(text.starts_with("format=1\nfamily chow[projective n=2 d=1 k=0 eps=1/2"));
        assert!(text.contains(&format!("fraction {}/{}\n", r.failing(), r.total())));
    }
}
