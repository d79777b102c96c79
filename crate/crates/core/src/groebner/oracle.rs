use super::{
    buchberger_with_budget, ideal_dimension, Ambient, Component, GroebnerError, MonomialOrder, VarietySpec,
    DEFAULT_PAIR_BUDGET,
};
use crate::field::Scalar;
use crate::linalg::{AffineSubspace, LinearForm, MatrixFp, ProjSubspace};
use crate::poly::MultiPoly;

fn linear_poly(coeffs: &[Scalar], constant: Scalar, num_vars: usize) -> MultiPoly {
    let mut p = MultiPoly::constant(constant, num_vars);
    for (i, &c) in coeffs.iter().enumerate() {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        p.add_term(e, c);
    }
    p
}

/// Dimension of `V(gens)` restricted to the parametrized linear space
/// `x = base + sum_l t_l dirs[l]`, as the Krull dimension in the `t`
/// variables; -1 when empty.
fn restricted_dim(
    gens: &[MultiPoly],
    base: Option<&[Scalar]>,
    dirs: &[Vec<Scalar>],
    prime: u64,
    budget: usize,
) -> Result<i64, GroebnerError> {
    let nv = gens.first().map_or(0, MultiPoly::num_vars);
    let k = dirs.len();
    let zero = Scalar::zero(prime);
    let images: Vec<MultiPoly> = (0..nv)
        .map(|i| {
            let coeffs: Vec<Scalar> = dirs.iter().map(|d| d[i]).collect();
            linear_poly(&coeffs, base.map_or(zero, |b| b[i]), k)
        })
        .collect();
    let restricted: Vec<MultiPoly> = gens.iter().map(|g| g.compose(&images)).collect();
    let g = buchberger_with_budget(k, prime, &restricted, MonomialOrder::GrevLex, budget)?;
    Ok(ideal_dimension(&g))
}

/// Projective dimension of `C ∩ W` for a component of a projective variety.
pub fn intersection_dim(c: &Component, w: &ProjSubspace, budget: usize) -> Result<i64, GroebnerError> {
    let cone = restricted_dim(&c.generators, None, w.basis(), w.prime(), budget)?;
    Ok(if cone <= 0 { -1 } else { cone - 1 })
}

fn affine_intersection_dim(c: &Component, w: &AffineSubspace, prime: u64, budget: usize) -> Result<i64, GroebnerError> {
    restricted_dim(&c.generators, Some(w.base_point()), w.directions(), prime, budget)
}

fn check_ambient(v: &VarietySpec, projective: bool, n: usize) -> Result<(), GroebnerError> {
    let ok = match v.ambient() {
        Ambient::Projective(m) => projective && m == n,
        Ambient::Affine(m) => !projective && m == n,
    };
    if ok {
        Ok(())
    } else {
        Err(GroebnerError::InvalidVariety(format!(
            "ambient {:?} does not match a {} subspace of dimension n = {n}",
            v.ambient(),
            if projective { "projective" } else { "affine" }
        )))
    }
}

/// Whether `W` evades every component of the projective variety `V`:
/// `dim(V_i ∩ W) <= dim V_i + dim W - n`, the empty set having dimension
/// -1 (so an empty intersection always evades).
pub fn evades(v: &VarietySpec, w: &ProjSubspace) -> Result<bool, GroebnerError> {
    evades_with_budget(v, w, DEFAULT_PAIR_BUDGET)
}

pub fn evades_with_budget(v: &VarietySpec, w: &ProjSubspace, budget: usize) -> Result<bool, GroebnerError> {
    check_ambient(v, true, w.ambient_n())?;
    let n = w.ambient_n() as i64;
    let k = w.dim() as i64;
    for c in v.components() {
        let bound = (c.claimed_dim + k - n).max(-1);
        if intersection_dim(c, w, budget)? > bound {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strong evasion of an affine variety: each component meets `W` in
/// exactly the expected dimension `dim V_i + k - n`, or not at all when
/// that is negative.
pub fn strongly_evades(v: &VarietySpec, w: &AffineSubspace) -> Result<bool, GroebnerError> {
    strongly_evades_with_budget(v, w, DEFAULT_PAIR_BUDGET)
}

pub fn strongly_evades_with_budget(v: &VarietySpec, w: &AffineSubspace, budget: usize) -> Result<bool, GroebnerError> {
    check_ambient(v, false, w.ambient_n())?;
    let n = w.ambient_n() as i64;
    let k = w.dim() as i64;
    for c in v.components() {
        let expected = (c.claimed_dim + k - n).max(-1);
        if affine_intersection_dim(c, w, v.prime(), budget)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closure in `P^n` of an affine variety, homogenizing a graded reverse
/// lexicographic Gröbner basis of each component.
pub fn projective_closure(v: &VarietySpec) -> Result<VarietySpec, GroebnerError> {
    let n = match v.ambient() {
        Ambient::Affine(n) => n,
        Ambient::Projective(_) => return Err(GroebnerError::InvalidVariety("closure of a projective variety".into())),
    };
    let mut comps = Vec::with_capacity(v.components().len());
    for c in v.components() {
        let gens = if c.generators.is_empty() {
            Vec::new()
        } else {
            let g = buchberger_with_budget(n, v.prime(), &c.generators, MonomialOrder::GrevLex, DEFAULT_PAIR_BUDGET)?;
            g.polys().iter().map(MultiPoly::homogenize).collect()
        };
        let points = c
            .points
            .iter()
            .map(|p| {
                let mut q = vec![Scalar::one(v.prime())];
                q.extend_from_slice(p);
                q
            })
            .collect();
        comps.push(Component::new(gens, c.claimed_dim, c.claimed_degree).with_points(points));
    }
    VarietySpec::new(Ambient::Projective(n), v.prime(), comps)?.with_name(v.name()).with_total_degree(v.total_degree())
}

/// Whether the projection `x -> (rows · x)` from `P^n` is a finite morphism
/// on the projective variety `V`. It is defined on all of `V` exactly when
/// `V` misses the center `V(rows)`, and a projection defined on `V` is
/// finite.
pub fn projection_is_finite(v: &VarietySpec, rows: &[Vec<Scalar>], budget: usize) -> Result<bool, GroebnerError> {
    let n = match v.ambient() {
        Ambient::Projective(n) => n,
        Ambient::Affine(_) => {
            return Err(GroebnerError::InvalidVariety("projections need a projective variety".into()))
        }
    };
    if rows.is_empty() || rows.iter().any(|row| row.len() != n + 1) {
        return Err(GroebnerError::InvalidMap(format!("need one or more rows of {} entries", n + 1)));
    }
    let forms: Vec<LinearForm> = rows.iter().cloned().map(LinearForm).collect();
    let center = ProjSubspace::from_forms(&forms, n)
        .map_err(|_| GroebnerError::InvalidMap(format!("the {}x{} matrix is not of full rank", rows.len(), n + 1)))?;
    for c in v.components() {
        if intersection_dim(c, &center, budget)? >= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the linear map `x -> (rows · x)` is finite on the affine variety
/// `V`: with `x` eliminated before `y`, every `x_j` must have a pure power
/// as a leading monomial in the basis of `I(V_i) + (y - rows · x)`.
pub fn finiteness_check(v: &VarietySpec, rows: &[Vec<Scalar>]) -> Result<bool, GroebnerError> {
    finiteness_check_with_budget(v, rows, DEFAULT_PAIR_BUDGET)
}

pub fn finiteness_check_with_budget(
    v: &VarietySpec,
    rows: &[Vec<Scalar>],
    budget: usize,
) -> Result<bool, GroebnerError> {
    let n = match v.ambient() {
        Ambient::Affine(n) => n,
        Ambient::Projective(_) => {
            return Err(GroebnerError::InvalidVariety("finiteness needs an affine variety".into()))
        }
    };
    let r = rows.len();
    if rows.iter().any(|row| row.len() != n) {
        return Err(GroebnerError::InvalidMap(format!("every row must have {n} entries")));
    }
    let prime = v.prime();
    if r > 0 && MatrixFp::from_rows(rows, n, prime).rank() != r {
        return Err(GroebnerError::InvalidMap(format!("the {r}x{n} matrix is not of full rank")));
    }
    let nv = n + r;
    let embed: Vec<usize> = (0..n).collect();
    let graph: Vec<MultiPoly> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut padded = row.clone();
            padded.resize(nv, Scalar::zero(prime));
            MultiPoly::var(n + i, nv, prime).sub(&linear_poly(&padded, Scalar::zero(prime), nv))
        })
        .collect();
    for c in v.components() {
        let mut gens: Vec<MultiPoly> = c.generators.iter().map(|g| g.remap_vars(&embed, nv)).collect();
        gens.extend(graph.iter().cloned());
        let g = buchberger_with_budget(nv, prime, &gens, MonomialOrder::BlockElimination { split: n }, budget)?;
        if g.is_unit() {
            continue;
        }
        let lms = g.leading_monomials();
        let integral = |j: usize| lms.iter().any(|m| m[j] > 0 && m.iter().enumerate().all(|(i, &e)| i == j || e == 0));
        if !(0..n).all(integral) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;
    use crate::groebner::parse_variety;
    use crate::linalg::LinearForm;

    fn f() -> FieldConfig {
        FieldConfig::new(101).unwrap()
    }

    fn variety(text: &str) -> VarietySpec {
        parse_variety(&format!("format=1\n{text}"), 101).unwrap()
    }

    fn proj(forms: &[&[i64]], n: usize) -> ProjSubspace {
        let forms: Vec<LinearForm> = forms.iter().map(|c| LinearForm(f().elems(c))).collect();
        ProjSubspace::from_forms(&forms, n).unwrap()
    }

    fn aff(forms: &[&[i64]], n: usize) -> AffineSubspace {
        let forms: Vec<Vec<Scalar>> = forms.iter().map(|c| f().elems(c)).collect();
        AffineSubspace::from_affine_forms(&forms, n).unwrap()
    }

    fn hyperbola() -> VarietySpec {
        variety("ambient affine 2\ncomponent dim=1 deg=2\nx1*x2 - 1\n")
    }

    #[test]
    fn evades_examples() {
        let cubic = VarietySpec::rational_normal_curve(3, 101);
        assert!(evades(&cubic, &proj(&[&[1, 0, 0, 0], &[0, 0, 0, 1]], 3)).unwrap());

        let plane = variety("ambient projective 4\ncomponent dim=2 deg=1\nx3\nx4\n");
        assert!(!evades(&plane, &proj(&[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]], 4)).unwrap());

        let line = variety("ambient projective 2\ncomponent dim=1 deg=1\nx2\n");
        for g in [1i64, 2, 5, 50] {
            let w = proj(&[&[1, g, g * g]], 2);
            assert!(evades(&line, &w).unwrap());
        }
        // a line evades nothing when it is the variety itself
        assert!(!evades(&line, &proj(&[&[0, 0, 1]], 2)).unwrap());
    }

    #[test]
    fn strongly_evades_examples() {
        assert!(strongly_evades(&hyperbola(), &aff(&[&[-3, 1, 0]], 2)).unwrap());
        let line = variety("ambient affine 2\ncomponent dim=1 deg=1\nx2\n");
        assert!(!strongly_evades(&line, &aff(&[&[-1, 0, 1]], 2)).unwrap());
        let point = variety("ambient affine 2\ncomponent dim=0 deg=1\nx1\nx2\n");
        // k = 0: expected dimension -2, so the point (5, 5) must miss it
        assert!(strongly_evades(&point, &aff(&[&[-5, 1, 0], &[-5, 0, 1]], 2)).unwrap());
        assert!(!strongly_evades(&point, &aff(&[&[0, 1, 0], &[0, 0, 1]], 2)).unwrap());
        // the asymptote x1 = 0 misses the hyperbola entirely
        assert!(!strongly_evades(&hyperbola(), &aff(&[&[0, 1, 0]], 2)).unwrap());
    }

    #[test]
    fn closure_examples() {
        let c = projective_closure(&hyperbola()).unwrap();
        assert_eq!(c.components()[0].generators[0].to_text(0), "-x0^2 + x1*x2");

        let l = projective_closure(&variety("ambient affine 2\ncomponent dim=1 deg=1\nx1\n")).unwrap();
        assert_eq!(l.components()[0].generators, vec![MultiPoly::var(1, 3, 101)]);

        let cubic = variety("ambient affine 3\ncomponent dim=1 deg=3\nx2 - x1^2\nx3 - x1^3\n");
        let c = projective_closure(&cubic).unwrap();
        let gens = &c.components()[0].generators;
        assert!(gens.iter().any(|g| g.to_text(0) == "x2^2 - x1*x3"));
        let at_infinity = f().elems(&[0, 0, 0, 1]);
        assert!(gens.iter().all(|g| g.eval(&at_infinity).is_zero()));
    }

    #[test]
    fn closure_meets_infinity_in_one_dimension_less() {
        let cubic = variety("ambient affine 3\ncomponent dim=1 deg=3\nx2 - x1^2\nx3 - x1^3\n");
        for (v, n) in [(hyperbola(), 2), (cubic, 3)] {
            let c = projective_closure(&v).unwrap();
            let mut e0 = vec![0i64; n + 1];
            e0[0] = 1;
            let infinity = proj(&[&e0], n);
            let d = intersection_dim(&c.components()[0], &infinity, DEFAULT_PAIR_BUDGET).unwrap();
            assert_eq!(d, 0);
        }
    }

    #[test]
    fn finiteness_examples() {
        let h = hyperbola();
        assert!(finiteness_check(&h, &[f().elems(&[1, 1])]).unwrap());
        assert!(!finiteness_check(&h, &[f().elems(&[1, 0])]).unwrap());
        let axis = variety("ambient affine 2\ncomponent dim=1 deg=1\nx2\n");
        assert!(finiteness_check(&axis, &[f().elems(&[1, 0])]).unwrap());
        assert!(finiteness_check(&h, &[f().elems(&[0, 0])]).is_err());
    }
}
