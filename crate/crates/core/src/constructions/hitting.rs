use std::fmt::Write as _;

use rayon::prelude::*;

use super::{check_eps, ConstructionError, Eps};
use crate::field::{vandermonde_row, FieldConfig, Scalar};
use crate::linalg::LinearForm;
use crate::poly::MultiPoly;

/// Pairwise disjoint blocks `B_i = {(i-1)(nd+1)+1, ..., i(nd+1)}`, each of
/// size `nd + 1` and avoiding 0.
pub fn sample_sets(
    n: usize,
    d: usize,
    count: usize,
    field: &FieldConfig,
) -> Result<Vec<Vec<Scalar>>, ConstructionError> {
    let size = (n as u128) * (d as u128) + 1;
    let required = count as u128 * size;
    if field.prime() as u128 <= required {
        return Err(ConstructionError::FieldTooSmall { required });
    }
    Ok((0..count as u64)
        .map(|i| {
            let start = i * size as u64 + 1;
            (start..start + size as u64).map(|v| field.elem(v)).collect()
        })
        .collect())
}

/// The form `x0 + γ x1 + ... + γ^n xn`.
pub fn vandermonde_form(gamma: Scalar, n: usize) -> LinearForm {
    LinearForm(vandermonde_row(gamma, n + 1))
}

/// Smallest `γ ∈ B` (by canonical value) whose Vandermonde form vanishes at
/// none of the given projective points.
pub fn slicer_witness(points: &[Vec<Scalar>], b: &[Scalar]) -> Result<Scalar, ConstructionError> {
    let mut candidates = b.to_vec();
    candidates.sort();
    let n = points.first().map_or(0, |p| p.len().saturating_sub(1));
    candidates
        .into_iter()
        .find(|&g| {
            let l = vandermonde_form(g, n);
            points.iter().all(|p| !l.eval(p).is_zero())
        })
        .ok_or(ConstructionError::NoWitness)
}

/// Points in `F^m` on which every nonzero polynomial of individual degree
/// at most `ideg` vanishes on at most an `eps` fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub m: usize,
    pub ideg: usize,
    pub eps: Eps,
    pub prime: u64,
    pub points: Vec<Vec<Scalar>>,
}

impl HittingSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of points where `f` vanishes.
    pub fn zero_count(&self, f: &MultiPoly) -> usize {
        self.points.par_iter().filter(|p| f.eval(p).is_zero()).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("format=1\nconstruction epsilon-hitting-set\n");
        let _ = writeln!(s, "field_prime {}", self.prime);
        let _ = writeln!(s, "m {}", self.m);
        let _ = writeln!(s, "ideg {}", self.ideg);
        let _ = writeln!(s, "eps {}", self.eps);
        let _ = writeln!(s, "points {}", self.points.len());
        for p in &self.points {
            let coords: Vec<String> = p.iter().map(|x| x.value().to_string()).collect();
            let _ = writeln!(s, "point {}", coords.join(" "));
        }
        s
    }
}

/// `ceil(x / eps)` for `eps = a/b`.
pub(crate) fn div_eps_ceil(x: u128, eps: Eps) -> Option<u128> {
    let (a, b) = (*eps.numer() as u128, *eps.denom() as u128);
    x.checked_mul(b).map(|xb| xb.div_ceil(a))
}

/// Kronecker-substitution hitting set: with `D = ideg + 1` and
/// `s = ceil(D^m / eps)`, the points `(γ, γ^D, ..., γ^(D^(m-1)))` for
/// `γ = 1..s`.
///
/// A nonzero polynomial of individual degree `< D` becomes, under
/// `x_j -> t^(D^j)`, a nonzero univariate polynomial of degree `< D^m`, so
/// it has fewer than `D^m <= eps * s` roots among the `γ`.
pub fn epsilon_hitting_set(
    m: usize,
    ideg: usize,
    eps: Eps,
    field: &FieldConfig,
) -> Result<HittingSet, ConstructionError> {
    check_eps(eps)?;
    let dd = ideg as u128 + 1;
    let too_big = ConstructionError::FieldTooSmall { required: u128::MAX };
    let dm = (0..m).try_fold(1u128, |acc, _| acc.checked_mul(dd)).ok_or(too_big.clone())?;
    let s = div_eps_ceil(dm, eps).ok_or(too_big)?;
    if field.prime() as u128 <= s {
        return Err(ConstructionError::FieldTooSmall { required: s });
    }
    let points = (1..=s as u64)
        .into_par_iter()
        .map(|g| {
            let mut x = field.elem(g);
            let mut p = Vec::with_capacity(m);
            for _ in 0..m {
                p.push(x);
                x = x.pow(dd as u64);
            }
            p
        })
        .collect();
    Ok(HittingSet { m, ideg, eps, prime: field.prime(), points })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> FieldConfig {
        FieldConfig::new(101).unwrap()
    }

    fn vals(v: &[Scalar]) -> Vec<u64> {
        v.iter().map(|x| x.value()).collect()
    }

    #[test]
    fn sample_set_examples() {
        let f = f101();
        let b = sample_sets(2, 1, 1, &f).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(vals(&b[0]), [1, 2, 3]);
        let b = sample_sets(3, 2, 2, &f).unwrap();
        assert_eq!(vals(&b[0]), (1..=7).collect::<Vec<_>>());
        assert_eq!(vals(&b[1]), (8..=14).collect::<Vec<_>>());
        let small = FieldConfig::new(3).unwrap();
        assert_eq!(sample_sets(2, 1, 1, &small), Err(ConstructionError::FieldTooSmall { required: 3 }));
    }

    #[test]
    fn vandermonde_form_examples() {
        let f = f101();
        assert_eq!(vals(vandermonde_form(f.elem(0), 2).coeffs()), [1, 0, 0]);
        assert_eq!(vals(vandermonde_form(f.elem(1), 2).coeffs()), [1, 1, 1]);
        assert_eq!(vals(vandermonde_form(f.elem(2), 3).coeffs()), [1, 2, 4, 8]);
    }

    #[test]
    fn slicer_witness_examples() {
        let f = f101();
        let b = f.elems(&[3, 1, 2]);
        assert_eq!(slicer_witness(&[f.elems(&[1, 0, 0])], &b).unwrap(), f.elem(1));
        assert_eq!(slicer_witness(&[f.elems(&[0, 1, 0])], &b).unwrap(), f.elem(1));
        let pts = [f.elems(&[0, 0, 1]), f.elems(&[1, -1, 0])];
        assert_eq!(slicer_witness(&pts, &b).unwrap(), f.elem(2));
        // [1:-1:0] kills γ = 1 only; with B = {1} no witness exists
        assert_eq!(slicer_witness(&pts, &f.elems(&[1])), Err(ConstructionError::NoWitness));
    }

    #[test]
    fn hitting_set_examples() {
        let f = f101();
        let h = epsilon_hitting_set(1, 2, Eps::new(1, 2), &f).unwrap();
        assert_eq!(h.len(), 6);
        let t2 = crate::poly::parse_poly("x0^2", 1, 0, 101).unwrap();
        assert_eq!(h.zero_count(&t2), 0);

        let h = epsilon_hitting_set(2, 1, Eps::new(1, 2), &f).unwrap();
        assert_eq!(h.len(), 8);
        assert_eq!(vals(&h.points[2]), [3, 9]);
        let xy = crate::poly::parse_poly("x0*x1", 2, 0, 101).unwrap();
        assert_eq!(h.zero_count(&xy), 0);
        let one = MultiPoly::constant(f.one(), 2);
        assert_eq!(h.zero_count(&one), 0);

        assert_eq!(epsilon_hitting_set(2, 6, Eps::new(1, 2), &f).unwrap().len(), 98);
        let err = epsilon_hitting_set(2, 9, Eps::new(1, 2), &f).unwrap_err();
        assert_eq!(err, ConstructionError::FieldTooSmall { required: 200 });
    }
}
