use rayon::prelude::*;

use super::hitting::div_eps_ceil;
use super::{
    epsilon_hitting_set, sample_sets, vandermonde_form, Branch, ConstructionError, Eps, FamilyParams, Kind, Member,
    Subspace, SubspaceFamily,
};
use crate::field::{FieldConfig, Scalar};
use crate::linalg::{AffineSubspace, LinearForm, MatrixFp, ProjSubspace};

fn require_eps(params: &FamilyParams, what: &str) -> Result<Eps, ConstructionError> {
    params.eps.ok_or_else(|| ConstructionError::InvalidParams(format!("{what} needs eps")))
}

fn require_projective(params: &FamilyParams, what: &str) -> Result<(), ConstructionError> {
    match params.kind {
        Kind::Projective => Ok(()),
        Kind::Affine => Err(ConstructionError::InvalidParams(format!(
            "{what} is projective; use the affine restriction for affine families"
        ))),
    }
}

fn member_from_forms(
    index: Vec<u64>,
    forms: &[LinearForm],
    params: &FamilyParams,
) -> Result<Member, ConstructionError> {
    let h = ProjSubspace::from_forms(forms, params.n)?;
    let subspace = match params.kind {
        Kind::Projective => Subspace::Projective(h),
        Kind::Affine => match AffineSubspace::from_projective(&h) {
            Some(a) => Subspace::Affine(a),
            None => {
                return Err(ConstructionError::ShapeMismatch(format!(
                    "member {index:?} lies in the hyperplane at infinity"
                )))
            }
        },
    };
    let degenerate = subspace.dim() != params.k;
    Ok(Member { index, subspace, degenerate })
}

/// Members `V(L_γ1, ..., L_γ(n-k))` for `γ ∈ B_1 × ... × B_(n-k)` in
/// lexicographic order; exactly `(nd+1)^(n-k)` of them. Affine families
/// restrict each member to the chart `x0 = 1`, which never loses a member
/// because `0 ∉ B_i`.
pub fn basic_family(params: &FamilyParams, field: &FieldConfig) -> Result<SubspaceFamily, ConstructionError> {
    if params.eps.is_some() {
        return Err(ConstructionError::InvalidParams("the basic family takes no eps".into()));
    }
    let c = params.codim();
    let sets = sample_sets(params.n, params.d, c, field)?;
    let base = sets[0].len() as u64;
    let total = (0..c)
        .try_fold(1u64, |acc, _| acc.checked_mul(base))
        .filter(|&t| t <= usize::MAX as u64)
        .ok_or_else(|| ConstructionError::InvalidParams("family too large to enumerate".into()))?;
    let members: Result<Vec<Member>, _> = (0..total)
        .into_par_iter()
        .map(|t| {
            let mut digits = vec![0u64; c];
            let mut rest = t;
            for slot in digits.iter_mut().rev() {
                *slot = rest % base;
                rest /= base;
            }
            let gammas: Vec<Scalar> = digits.iter().enumerate().map(|(i, &g)| sets[i][g as usize]).collect();
            let forms: Vec<LinearForm> = gammas.iter().map(|&g| vandermonde_form(g, params.n)).collect();
            member_from_forms(gammas.iter().map(|g| g.value()).collect(), &forms, params)
        })
        .collect();
    Ok(SubspaceFamily::new(*params, "basic", field.prime(), Branch::None, members?))
}

/// One candidate per hitting-set point `μ` for `m = n - k` variables and
/// individual degree `nd`, cut out by the forms `x0 + μ_i x1 + ... + μ_i^n xn`.
/// Candidates with a repeated coordinate are rank deficient and pruned.
pub fn chow_family(params: &FamilyParams, field: &FieldConfig) -> Result<SubspaceFamily, ConstructionError> {
    let eps = require_eps(params, "the Chow family")?;
    require_projective(params, "the Chow family")?;
    let hs = epsilon_hitting_set(params.codim(), params.n * params.d, eps, field)?;
    let members: Result<Vec<Option<Member>>, _> = hs
        .points
        .par_iter()
        .enumerate()
        .map(|(i, mu)| {
            let mut sorted = mu.clone();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Ok(None);
            }
            let forms: Vec<LinearForm> = mu.iter().map(|&x| vandermonde_form(x, params.n)).collect();
            member_from_forms(vec![i as u64 + 1], &forms, params).map(Some)
        })
        .collect();
    let members: Vec<Member> = members?.into_iter().flatten().collect();
    if members.is_empty() {
        return Err(ConstructionError::EmptyFamily);
    }
    Ok(SubspaceFamily::new(*params, "chow", field.prime(), Branch::Direct, members))
}

/// Rows of the osculating Vandermonde matrix `E[i][j] = C(j, i) α^(j-i)`,
/// `0 <= i <= m`, `0 <= j <= n`.
pub(crate) fn extractor_rows(alpha: Scalar, m: usize, n: usize) -> Vec<Vec<Scalar>> {
    let p = alpha.prime();
    let mut binom = vec![Scalar::one(p)]; // row j of Pascal's triangle
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j > 0 {
            let mut next = vec![Scalar::one(p); j + 1];
            for i in 1..j {
                next[i] = binom[i - 1] + binom[i];
            }
            binom = next;
        }
        cols.push(
            (0..=m).map(|i| if i > j { Scalar::zero(p) } else { binom[i] * alpha.pow((j - i) as u64) }).collect(),
        );
    }
    (0..=m).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Kernels `W_α` of the `(m+1) × (n+1)` osculating matrices `E_α`, for
/// `α = 1, 2, ...`. For a fixed `m`-dimensional `X` with cone basis `B`,
/// `W_α` meets `X` iff the Wronskian-type determinant `det(E_α B)`, a
/// nonzero polynomial in `α` of degree at most `(m+1)(n-m)`, vanishes.
///
/// The exact variant has `(m+1)(n-m) + 1` members, so some member always
/// misses `X`; the `eps` variant has `ceil((m+1)(n-m) / eps)`.
pub fn rank_extractor_family(
    n: usize,
    m: usize,
    eps: Option<Eps>,
    field: &FieldConfig,
) -> Result<SubspaceFamily, ConstructionError> {
    if m >= n {
        return Err(ConstructionError::InvalidParams(format!("need m < n, got m = {m}, n = {n}")));
    }
    let budget = ((m + 1) * (n - m)) as u128;
    let s = match eps {
        None => budget + 1,
        Some(e) => {
            super::check_eps(e)?;
            div_eps_ceil(budget, e).ok_or(ConstructionError::FieldTooSmall { required: u128::MAX })?
        }
    };
    if field.prime() as u128 <= s {
        return Err(ConstructionError::FieldTooSmall { required: s });
    }
    let params = FamilyParams { n, d: 1, k: n - m - 1, eps, kind: Kind::Projective };
    let members: Result<Vec<Option<Member>>, ConstructionError> = (1..=s as u64)
        .into_par_iter()
        .map(|a| {
            let rows = extractor_rows(field.elem(a), m, n);
            if MatrixFp::from_rows(&rows, n + 1, field.prime()).rank() < m + 1 {
                return Ok(None);
            }
            let forms: Vec<LinearForm> = rows.into_iter().map(LinearForm).collect();
            member_from_forms(vec![a], &forms, &params).map(Some)
        })
        .collect();
    let members: Vec<Member> = members?.into_iter().flatten().collect();
    if (members.len() as u128) < s {
        // only reachable if some E_α were rank deficient
        return Err(ConstructionError::FieldTooSmall { required: s + 1 });
    }
    Ok(SubspaceFamily::new(params, "rank-extractor", field.prime(), Branch::None, members))
}

/// The inner ambient dimension `(r+1)d - 1` with `r = n - k - 1`: a
/// variety of dimension `r` and degree `d` spans at most this much.
fn inner_ambient(n: usize, d: usize, k: usize) -> usize {
    (n - k) * d - 1
}

/// Spanning data for one extractor member: the completion vectors
/// `v_0..v_e` (unit vectors at the pivot columns of `E_α`) and the kernel
/// basis `v_(e+1)..v_n`.
fn extractor_frame(w: &Member, alpha: Scalar, e: usize, n: usize) -> (Vec<usize>, Vec<Vec<Scalar>>) {
    let rows = extractor_rows(alpha, e, n);
    let (_, pivots) = MatrixFp::from_rows(&rows, n + 1, alpha.prime()).rref();
    let kernel = w.subspace.as_projective().expect("extractor members are projective").basis().to_vec();
    (pivots, kernel)
}

/// Glues an inner family in `P^e`, `e = (n-k)d - 1`, with the rank
/// extractor `{W_i}` for `e`-dimensional spaces in `P^n`: members
/// `Z_(i,j) = span(W_i, φ_i(Y_j))`, where `φ_i` sends `e_l` to the unit
/// vector at the `l`-th pivot column of `E_α`. There are `s · T` members;
/// any of dimension below `k` is flagged.
pub fn ambient_reduction(
    inner: &SubspaceFamily,
    n: usize,
    d: usize,
    k: usize,
    eps: Option<Eps>,
    field: &FieldConfig,
) -> Result<SubspaceFamily, ConstructionError> {
    if k >= n || d == 0 {
        return Err(ConstructionError::ShapeMismatch(format!("need d >= 1 and k < n, got d = {d}, k = {k}, n = {n}")));
    }
    let r = n - k - 1;
    let e = inner_ambient(n, d, k);
    let ip = inner.params();
    if e <= r || n <= e {
        return Err(ConstructionError::ShapeMismatch(format!(
            "need r < e < n for r = {r}, e = (n-k)d - 1 = {e}, n = {n}"
        )));
    }
    if ip.kind != Kind::Projective || ip.n != e || ip.k != e - r - 1 {
        return Err(ConstructionError::ShapeMismatch(format!(
            "inner family must be projective in P^{e} with members of dimension {}, got P^{} and {}",
            e - r - 1,
            ip.n,
            ip.k
        )));
    }
    let half = eps.map(|x| x / 2);
    let extractor = rank_extractor_family(n, e, half, field)?;
    let params = FamilyParams { n, d, k, eps, kind: Kind::Projective };
    let frames: Vec<(Vec<usize>, Vec<Vec<Scalar>>)> =
        extractor.members().iter().map(|w| extractor_frame(w, field.elem(w.index[0]), e, n)).collect();
    let t = inner.len();
    let members: Result<Vec<Member>, ConstructionError> = (0..frames.len() * t)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / t, idx % t);
            let (pivots, kernel) = &frames[i];
            let y = &inner.members()[j];
            let ybasis = y.subspace.as_projective().expect("projective inner family").basis();
            let mut span = kernel.clone();
            for u in ybasis {
                let mut v = vec![field.zero(); n + 1];
                for (l, &c) in u.iter().enumerate() {
                    v[pivots[l]] = c;
                }
                span.push(v);
            }
            let z = ProjSubspace::from_basis(&span, n)?;
            let mut index = extractor.members()[i].index.clone();
            index.extend_from_slice(&y.index);
            Ok(Member { index, degenerate: y.degenerate || z.dim() != k, subspace: Subspace::Projective(z) })
        })
        .collect();
    Ok(SubspaceFamily::new(params, "ambient-reduction", field.prime(), Branch::Reduction, members?))
}

/// `(n, d, eps)`-evasive k-subspace family. When `n <= (n-k)d` this is the
/// Chow family; otherwise a Chow family in `P^e`, `e = (n-k)d - 1`, is
/// glued with a rank extractor, each at `eps/2`. For `d = 1` the inner
/// space is the span itself and the extractor kernels are the members.
pub fn main_family(params: &FamilyParams, field: &FieldConfig) -> Result<SubspaceFamily, ConstructionError> {
    let eps = require_eps(params, "the main family")?;
    require_projective(params, "the main family")?;
    let (n, d, k) = (params.n, params.d, params.k);
    let mut fam = if n <= (n - k) * d {
        chow_family(params, field)?
    } else {
        let r = n - k - 1;
        let e = inner_ambient(n, d, k);
        if e == r {
            let mut ex = rank_extractor_family(n, e, Some(eps / 2), field)?;
            ex.params = *params;
            ex.branch = Branch::Reduction;
            ex
        } else {
            let inner_params = FamilyParams::new(e, d, e - r - 1)?.with_eps(eps / 2)?;
            let inner = chow_family(&inner_params, field)?;
            ambient_reduction(&inner, n, d, k, Some(eps), field)?
        }
    };
    fam.construction = "main".into();
    Ok(fam)
}

/// Drops members inside the hyperplane at infinity `V(x0)` and restricts
/// the rest to the chart `x0 = 1`. A projective `eps'` family becomes a
/// strongly evasive affine family with `eps = 2 eps' / (1 - eps')`.
pub fn affine_restriction(h: &SubspaceFamily) -> Result<SubspaceFamily, ConstructionError> {
    let src = h.params();
    let e = require_eps(src, "the affine restriction")?;
    require_projective(src, "the affine restriction")?;
    let one = Eps::from_integer(1);
    let out = e * 2 / (one - e);
    if out >= one {
        return Err(ConstructionError::InvalidParams(format!("2eps/(1-eps) = {out} is not below 1 for eps = {e}")));
    }
    let members: Vec<Member> = h
        .members()
        .iter()
        .filter_map(|m| {
            let p = m.subspace.as_projective()?;
            AffineSubspace::from_projective(p).map(|a| Member {
                index: m.index.clone(),
                degenerate: m.degenerate || a.dim() != src.k,
                subspace: Subspace::Affine(a),
            })
        })
        .collect();
    if members.is_empty() {
        return Err(ConstructionError::EmptyFamily);
    }
    let params = FamilyParams { eps: Some(out), kind: Kind::Affine, ..*src };
    let mut fam =
        SubspaceFamily::new(params, format!("affine-restriction/{}", h.construction()), h.prime(), h.branch(), members);
    fam.sample_base = h.sample_base();
    Ok(fam)
}

/// Strongly `(n, d, eps)`-evasive affine family: the main family at
/// `eps / (2 + eps)`, restricted to the chart.
pub fn affine_main_family(params: &FamilyParams, field: &FieldConfig) -> Result<SubspaceFamily, ConstructionError> {
    let eps = require_eps(params, "the affine main family")?;
    let inner_eps = eps / (Eps::from_integer(2) + eps);
    let proj = FamilyParams { eps: Some(inner_eps), kind: Kind::Projective, ..*params };
    affine_restriction(&main_family(&proj, field)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::subspace_intersection_dim;

    fn f101() -> FieldConfig {
        FieldConfig::new(101).unwrap()
    }

    fn eps(a: u64, b: u64) -> Eps {
        Eps::new(a, b)
    }

    #[test]
    fn basic_family_sizes() {
        let f = f101();
        let fam = basic_family(&FamilyParams::new(3, 2, 1).unwrap(), &f).unwrap();
        assert_eq!(fam.len(), 49);
        assert!(fam.members().iter().all(|m| m.subspace.dim() == 1 && !m.degenerate));
        assert_eq!(fam.members()[0].index, [1, 8]);
        assert_eq!(fam.members()[1].index, [1, 9]);

        let aff = basic_family(&FamilyParams::new(2, 1, 0).unwrap().affine(), &f).unwrap();
        assert_eq!(aff.len(), 9);
        assert!(aff.members().iter().all(|m| m.subspace.as_affine().is_some() && m.subspace.dim() == 0));

        let tiny = FieldConfig::new(3).unwrap();
        assert!(matches!(
            basic_family(&FamilyParams::new(2, 1, 1).unwrap(), &tiny),
            Err(ConstructionError::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn basic_family_of_lines_meets_lines_in_points() {
        let f = f101();
        let fam = basic_family(&FamilyParams::new(2, 1, 1).unwrap(), &f).unwrap();
        assert_eq!(fam.len(), 3);
        let v = ProjSubspace::from_forms(&[LinearForm(f.elems(&[3, -7, 11]))], 2).unwrap();
        for m in fam.members() {
            let h = m.subspace.as_projective().unwrap();
            assert_eq!(subspace_intersection_dim(h, &v), 0);
        }
    }

    #[test]
    fn chow_family_examples() {
        let f = f101();
        let params = FamilyParams::new(2, 1, 0).unwrap().with_eps(eps(1, 2)).unwrap();
        let fam = chow_family(&params, &f).unwrap();
        // hitting set for 2 variables, individual degree 2: ceil(9 / (1/2)) = 18 points
        assert!(fam.len() <= 18);
        assert!(fam.members().iter().all(|m| m.subspace.dim() == 0 && !m.degenerate));
        // γ = 1 gives μ = (1, 1), which is pruned
        assert_eq!(fam.members()[0].index, [2]);

        let forms = [vandermonde_form(f.elem(0), 2), vandermonde_form(f.elem(1), 2)];
        let p = ProjSubspace::from_forms(&forms, 2).unwrap();
        let vals: Vec<u64> = p.basis()[0].iter().map(|x| x.value()).collect();
        assert_eq!(vals, [0, 100, 1]); // [0 : 1 : -1]
    }

    #[test]
    fn extractor_rows_are_osculating() {
        let f = f101();
        let rows = extractor_rows(f.elem(2), 1, 2);
        let v = |r: &Vec<Scalar>| r.iter().map(|x| x.value()).collect::<Vec<_>>();
        assert_eq!(v(&rows[0]), [1, 2, 4]);
        assert_eq!(v(&rows[1]), [0, 1, 4]);
    }

    #[test]
    fn rank_extractor_examples() {
        let f = f101();
        let fam = rank_extractor_family(2, 1, None, &f).unwrap();
        assert_eq!(fam.len(), 3);
        let w = fam.members()[1].subspace.as_projective().unwrap();
        let vals: Vec<u64> = w.basis()[0].iter().map(|x| x.value()).collect();
        assert_eq!(vals, [4, 97, 1]);
        assert!(fam.members().iter().all(|m| m.subspace.dim() == 0));

        let fam = rank_extractor_family(6, 2, Some(eps(1, 8)), &f).unwrap();
        assert_eq!(fam.len(), 96);
        assert!(fam.members().iter().all(|m| m.subspace.dim() == 3));
    }

    #[test]
    fn main_family_branches() {
        let f = FieldConfig::default();
        let direct = main_family(&FamilyParams::new(3, 2, 1).unwrap().with_eps(eps(1, 2)).unwrap(), &f).unwrap();
        assert_eq!(direct.branch(), Branch::Direct);
        assert!(direct.len() <= 98);

        let red = main_family(&FamilyParams::new(10, 1, 8).unwrap().with_eps(eps(1, 2)).unwrap(), &f).unwrap();
        assert_eq!(red.branch(), Branch::Reduction);
        assert!(red.members().iter().all(|m| m.subspace.dim() == 8 && !m.degenerate));

        // d = 2, n = 5, k = 3: r = 1, e = 3, inner family of lines in P^3
        let glued = main_family(&FamilyParams::new(5, 2, 3).unwrap().with_eps(eps(1, 2)).unwrap(), &f).unwrap();
        assert_eq!(glued.branch(), Branch::Reduction);
        assert!(glued.members().iter().all(|m| m.subspace.dim() == 3));
        assert_eq!(glued.degenerate_count(), 0);
    }

    #[test]
    fn ambient_reduction_shapes() {
        let f = FieldConfig::default();
        let points = chow_family(&FamilyParams::new(3, 2, 0).unwrap().with_eps(eps(1, 4)).unwrap(), &f).unwrap();
        // (n, d, k) = (5, 2, 3) needs lines in P^3, not points
        assert!(matches!(
            ambient_reduction(&points, 5, 2, 3, Some(eps(1, 2)), &f),
            Err(ConstructionError::ShapeMismatch(_))
        ));
        let inner = chow_family(&FamilyParams::new(3, 2, 1).unwrap().with_eps(eps(1, 4)).unwrap(), &f).unwrap();
        // d = 1 leaves no room for an inner family
        assert!(matches!(
            ambient_reduction(&inner, 4, 1, 2, Some(eps(1, 2)), &f),
            Err(ConstructionError::ShapeMismatch(_))
        ));
        let glued = ambient_reduction(&inner, 5, 2, 3, Some(eps(1, 2)), &f).unwrap();
        let s = rank_extractor_family(5, 3, Some(eps(1, 4)), &f).unwrap().len();
        assert_eq!(glued.len(), s * inner.len());
        assert!(glued.members().iter().all(|m| m.subspace.dim() == 3));
    }

    #[test]
    fn affine_restriction_examples() {
        let f = f101();
        let params = FamilyParams::new(2, 1, 1).unwrap().with_eps(eps(1, 5)).unwrap();
        let mk = |c: &[i64], idx| Member {
            index: vec![idx],
            subspace: Subspace::Projective(ProjSubspace::from_forms(&[LinearForm(f.elems(c))], 2).unwrap()),
            degenerate: false,
        };
        let h = SubspaceFamily::new(params, "test", 101, Branch::None, vec![mk(&[0, 1, 0], 1), mk(&[1, 0, 0], 2)]);
        let a = affine_restriction(&h).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.eps(), Some(eps(1, 2)));
        let line = a.members()[0].subspace.as_affine().unwrap();
        assert_eq!(line.dim(), 1);
        assert!(line.contains_point(&f.elems(&[0, 5])));

        let wide = FamilyParams::new(2, 1, 1).unwrap().with_eps(eps(1, 3)).unwrap();
        let h = SubspaceFamily::new(wide, "test", 101, Branch::None, vec![mk(&[0, 1, 0], 1)]);
        assert!(matches!(affine_restriction(&h), Err(ConstructionError::InvalidParams(_))));
    }

    #[test]
    fn affine_main_family_hits_requested_eps() {
        let f = FieldConfig::default();
        let params = FamilyParams::new(3, 2, 1).unwrap().with_eps(eps(1, 2)).unwrap().affine();
        let fam = affine_main_family(&params, &f).unwrap();
        assert_eq!(fam.eps(), Some(eps(1, 2)));
        assert!(fam.members().iter().all(|m| m.subspace.dim() == 1));
    }
}
