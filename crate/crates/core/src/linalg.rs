//! Exact linear algebra over F_p and linear subspaces of P^n / A^n.
//!
//! Subspaces keep both a dual description (defining linear forms) and a
//! primal one (a basis of the affine cone). Pivoting is deterministic
//! (leftmost column, topmost row) so every derived basis is reproducible.

use std::fmt;

use thiserror::Error;

use crate::field::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("linear forms cut out the empty projective set")]
    DegenerateSubspace,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
    #[error("forms and basis do not describe the same subspace")]
    Inconsistent,
}

/// Coefficient vector `(a_0, ..., a_n)` of the form `a_0 x_0 + ... + a_n x_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(pub Vec<Scalar>);

impl LinearForm {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        dot(&self.0, point)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    let mut it = a.iter().zip(b);
    let (x, y) = it.next().expect("dot product of empty vectors");
    let mut acc = *x * *y;
    for (x, y) in it {
        acc += *x * *y;
    }
    acc
}

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFp {
    rows: usize,
    cols: usize,
    prime: u64,
    data: Vec<Scalar>,
}

impl fmt::Debug for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFp {}x{} over F_{}", self.rows, self.cols, self.prime)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl MatrixFp {
    pub fn zeros(rows: usize, cols: usize, prime: u64) -> Self {
        MatrixFp { rows, cols, prime, data: vec![Scalar::zero(prime); rows * cols] }
    }

    pub fn identity(n: usize, prime: u64) -> Self {
        let mut m = Self::zeros(n, n, prime);
        for i in 0..n {
            m.set(i, i, Scalar::one(prime));
        }
        m
    }

    /// Builds a matrix from rows, all of length `cols`.
    pub fn from_rows<R: AsRef<[Scalar]>>(rows: &[R], cols: usize, prime: u64) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        MatrixFp { rows: rows.len(), cols, prime, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols, self.prime);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Reduces in place to RREF; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j) * inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j) - f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> (MatrixFp, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// RREF together with the rank.
pub fn rref_rank(m: &MatrixFp) -> (MatrixFp, usize) {
    let (r, pivots) = m.rref();
    (r, pivots.len())
}

/// Deterministic kernel basis: one vector per free column (ascending), with
/// a 1 in that column and pivots solved from the RREF.
pub fn nullspace(m: &MatrixFp) -> Vec<Vec<Scalar>> {
    let (r, pivots) = m.rref();
    let p = m.prime();
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::with_capacity(m.cols() - pivots.len());
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(p); m.cols()];
        v[free] = Scalar::one(p);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free);
        }
        out.push(v);
    }
    out
}

/// Keeps, in order, each vector that is independent of those kept before it.
fn independent_subset(vectors: &[Vec<Scalar>], len: usize) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    // running echelon basis: (pivot column, normalized row)
    let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (pc, row) in &echelon {
            let f = w[*pc];
            if !f.is_zero() {
                for j in 0..len {
                    w[j] -= f * row[j];
                }
            }
        }
        if let Some(pc) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[pc].inv().expect("nonzero");
            for x in w.iter_mut() {
                *x *= inv;
            }
            // keep earlier rows reduced in the new pivot column
            for (_, row) in echelon.iter_mut() {
                let f = row[pc];
                if !f.is_zero() {
                    for j in 0..len {
                        row[j] -= f * w[j];
                    }
                }
            }
            echelon.push((pc, w));
            kept.push(idx);
        }
    }
    kept
}

/// A linear subspace of P^n with both descriptions.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjSubspace {
    ambient_n: usize,
    forms: Vec<LinearForm>,
    basis: Vec<Vec<Scalar>>,
}

impl fmt::Debug for ProjSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProjSubspace")
            .field("ambient_n", &self.ambient_n)
            .field("dim", &self.dim())
            .field("forms", &self.forms)
            .field("basis", &self.basis)
            .finish()
    }
}

impl ProjSubspace {
    /// Subspace cut out by `forms`. Dependent forms are dropped (first
    /// occurrence wins); the primal basis is the deterministic nullspace.
    pub fn from_forms(forms: &[LinearForm], ambient_n: usize) -> Result<Self, LinalgError> {
        let len = ambient_n + 1;
        for f in forms {
            if f.len() != len {
                return Err(LinalgError::DimensionMismatch { expected: len, found: f.len() });
            }
        }
        let Some(first) = forms.first() else {
            return Err(LinalgError::Empty);
        };
        let prime = first.0[0].prime();
        let raw: Vec<Vec<Scalar>> = forms.iter().map(|f| f.0.clone()).collect();
        let keep = independent_subset(&raw, len);
        if keep.len() == len {
            return Err(LinalgError::DegenerateSubspace);
        }
        let forms: Vec<LinearForm> = keep.iter().map(|&i| forms[i].clone()).collect();
        let m = MatrixFp::from_rows(&raw, len, prime);
        let basis = nullspace(&m);
        Ok(ProjSubspace { ambient_n, forms, basis })
    }

    /// Subspace spanned by the given cone vectors. Dependent vectors are
    /// dropped; the defining forms are the deterministic nullspace of the
    /// basis matrix.
    pub fn from_basis(vectors: &[Vec<Scalar>], ambient_n: usize) -> Result<Self, LinalgError> {
        let len = ambient_n + 1;
        let Some(first) = vectors.first() else {
            return Err(LinalgError::DegenerateSubspace);
        };
        for v in vectors {
            if v.len() != len {
                return Err(LinalgError::DimensionMismatch { expected: len, found: v.len() });
            }
        }
        let prime = first[0].prime();
        let keep = independent_subset(vectors, len);
        if keep.is_empty() {
            return Err(LinalgError::DegenerateSubspace);
        }
        let basis: Vec<Vec<Scalar>> = keep.iter().map(|&i| vectors[i].clone()).collect();
        let m = MatrixFp::from_rows(&basis, len, prime);
        let forms = nullspace(&m).into_iter().map(LinearForm).collect();
        Ok(ProjSubspace { ambient_n, forms, basis })
    }

    /// Reassembles a subspace from both descriptions, checking that the
    /// forms are independent, the basis is independent, the ranks are
    /// complementary and every form kills every basis vector.
    pub fn from_parts(forms: Vec<LinearForm>, basis: Vec<Vec<Scalar>>, ambient_n: usize) -> Result<Self, LinalgError> {
        let len = ambient_n + 1;
        let Some(first) = basis.first() else {
            return Err(LinalgError::DegenerateSubspace);
        };
        if let Some(bad) = forms.iter().map(|f| f.len()).chain(basis.iter().map(|b| b.len())).find(|&l| l != len) {
            return Err(LinalgError::DimensionMismatch { expected: len, found: bad });
        }
        let prime = first[0].prime();
        let fr = if forms.is_empty() { 0 } else { MatrixFp::from_rows(&forms, len, prime).rank() };
        let br = MatrixFp::from_rows(&basis, len, prime).rank();
        if fr != forms.len() || br != basis.len() || fr + br != len {
            return Err(LinalgError::Inconsistent);
        }
        if forms.iter().any(|f| basis.iter().any(|b| !f.eval(b).is_zero())) {
            return Err(LinalgError::Inconsistent);
        }
        Ok(ProjSubspace { ambient_n, forms, basis })
    }

    /// All of P^n over the field with the given prime.
    pub fn ambient(ambient_n: usize, prime: u64) -> Self {
        let basis = MatrixFp::identity(ambient_n + 1, prime).to_rows();
        ProjSubspace { ambient_n, forms: Vec::new(), basis }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn prime(&self) -> u64 {
        self.basis[0][0].prime()
    }

    pub fn form_matrix(&self) -> MatrixFp {
        MatrixFp::from_rows(&self.forms, self.ambient_n + 1, self.prime())
    }

    pub fn basis_matrix(&self) -> MatrixFp {
        MatrixFp::from_rows(&self.basis, self.ambient_n + 1, self.prime())
    }

    pub fn contains_point(&self, p: &[Scalar]) -> bool {
        self.forms.iter().all(|f| f.eval(p).is_zero())
    }

    /// Whether the whole subspace lies in the hyperplane `V(form)`.
    pub fn lies_in(&self, form: &LinearForm) -> bool {
        self.basis.iter().all(|b| form.eval(b).is_zero())
    }

    pub fn contains_subspace(&self, other: &ProjSubspace) -> bool {
        other.basis.iter().all(|b| self.contains_point(b))
    }
}

impl AsRef<[Scalar]> for LinearForm {
    fn as_ref(&self) -> &[Scalar] {
        &self.0
    }
}

/// Subspace of P^n cut out by `forms`.
pub fn forms_to_basis(forms: &[LinearForm], ambient_n: usize) -> Result<ProjSubspace, LinalgError> {
    ProjSubspace::from_forms(forms, ambient_n)
}

/// Projective dimension of `A ∩ B`; `-1` when the cones meet only in 0.
///
/// Computed as `(dim A + 1) - rank(F_B · basis(A)) - 1`, which equals
/// `(n + 1) - rank([F_A; F_B]) - 1`.
pub fn subspace_intersection_dim(a: &ProjSubspace, b: &ProjSubspace) -> i64 {
    assert_eq!(a.ambient_n, b.ambient_n, "subspaces in different ambient spaces");
    let cone = a.basis.len() as i64;
    if b.forms.is_empty() {
        return cone - 1;
    }
    let prime = a.prime();
    let rows: Vec<Vec<Scalar>> = b.forms.iter().map(|f| a.basis.iter().map(|v| f.eval(v)).collect()).collect();
    let m = MatrixFp::from_rows(&rows, a.basis.len(), prime);
    cone - m.rank() as i64 - 1
}

pub fn point_on_subspace(p: &[Scalar], s: &ProjSubspace) -> bool {
    s.contains_point(p)
}

/// A linear subspace of A^n: `{ base + span(directions) }`, cut out by
/// affine forms `c + a_1 x_1 + ... + a_n x_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineSubspace {
    ambient_n: usize,
    affine_forms: Vec<Vec<Scalar>>,
    base_point: Vec<Scalar>,
    directions: Vec<Vec<Scalar>>,
}

impl fmt::Debug for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineSubspace")
            .field("ambient_n", &self.ambient_n)
            .field("dim", &self.dim())
            .field("affine_forms", &self.affine_forms)
            .field("base_point", &self.base_point)
            .field("directions", &self.directions)
            .finish()
    }
}

impl AffineSubspace {
    /// Restriction of `h` to the chart `x0 = 1`; `None` when `h` lies in
    /// the hyperplane at infinity.
    pub fn from_projective(h: &ProjSubspace) -> Option<Self> {
        let n = h.ambient_n;
        let (r, pivots) = h.basis_matrix().rref();
        if pivots.first() != Some(&0) {
            return None;
        }
        let base_point = r.row(0)[1..].to_vec();
        let directions = (1..pivots.len()).map(|i| r.row(i)[1..].to_vec()).collect();
        Some(AffineSubspace {
            ambient_n: n,
            affine_forms: h.forms.iter().map(|f| f.0.clone()).collect(),
            base_point,
            directions,
        })
    }

    /// Affine subspace cut out by `c + a·x = 0` for each `(c, a_1..a_n)`.
    pub fn from_affine_forms(forms: &[Vec<Scalar>], ambient_n: usize) -> Result<Self, LinalgError> {
        let lf: Vec<LinearForm> = forms.iter().map(|f| LinearForm(f.clone())).collect();
        let h = ProjSubspace::from_forms(&lf, ambient_n)?;
        Self::from_projective(&h).ok_or(LinalgError::DegenerateSubspace)
    }

    /// Reassembles an affine subspace from its forms and parametrization,
    /// checking that they agree.
    pub fn from_parts(
        affine_forms: Vec<Vec<Scalar>>,
        base_point: Vec<Scalar>,
        directions: Vec<Vec<Scalar>>,
        ambient_n: usize,
    ) -> Result<Self, LinalgError> {
        let a = AffineSubspace { ambient_n, affine_forms, base_point, directions };
        if a.base_point.len() != ambient_n {
            return Err(LinalgError::DimensionMismatch { expected: ambient_n, found: a.base_point.len() });
        }
        let lf: Vec<LinearForm> = a.affine_forms.iter().map(|f| LinearForm(f.clone())).collect();
        let closure: Vec<Vec<Scalar>> = ProjSubspace::from_basis(&a.closure_vectors(), ambient_n)?.basis;
        if closure.len() != a.directions.len() + 1 {
            return Err(LinalgError::Inconsistent);
        }
        ProjSubspace::from_parts(lf, closure, ambient_n)?;
        Ok(a)
    }

    fn closure_vectors(&self) -> Vec<Vec<Scalar>> {
        let p = self.base_point[0].prime();
        let mut vecs = Vec::with_capacity(self.directions.len() + 1);
        let mut b = vec![Scalar::one(p)];
        b.extend_from_slice(&self.base_point);
        vecs.push(b);
        for d in &self.directions {
            let mut v = vec![Scalar::zero(p)];
            v.extend_from_slice(d);
            vecs.push(v);
        }
        vecs
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn affine_forms(&self) -> &[Vec<Scalar>] {
        &self.affine_forms
    }

    pub fn base_point(&self) -> &[Scalar] {
        &self.base_point
    }

    pub fn directions(&self) -> &[Vec<Scalar>] {
        &self.directions
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        self.affine_forms.iter().all(|f| {
            let mut acc = f[0];
            for (a, xi) in f[1..].iter().zip(x) {
                acc += *a * *xi;
            }
            acc.is_zero()
        })
    }

    /// Projective closure in P^n.
    pub fn closure(&self) -> ProjSubspace {
        ProjSubspace::from_basis(&self.closure_vectors(), self.ambient_n).expect("independent by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;

    fn f101() -> FieldConfig {
        FieldConfig::new(101).unwrap()
    }

    fn form(f: &FieldConfig, c: &[i64]) -> LinearForm {
        LinearForm(f.elems(c))
    }

    #[test]
    fn rref_examples() {
        let f = f101();
        let id = MatrixFp::identity(3, 101);
        assert_eq!(rref_rank(&id), (id.clone(), 3));

        let ones = MatrixFp::from_rows(&[f.elems(&[1, 1, 1]), f.elems(&[1, 1, 1])], 3, 101);
        let (r, rank) = rref_rank(&ones);
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), f.elems(&[1, 1, 1]).as_slice());
        assert_eq!(r.row(1), f.elems(&[0, 0, 0]).as_slice());

        let m = MatrixFp::from_rows(&[f.elems(&[1, 2, 4]), f.elems(&[1, 3, 9])], 3, 101);
        assert_eq!(rref_rank(&m).1, 2);
    }

    #[test]
    fn nullspace_examples() {
        let f = f101();
        assert!(nullspace(&MatrixFp::identity(2, 101)).is_empty());

        let row = MatrixFp::from_rows(&[f.elems(&[1, 1, 1])], 3, 101);
        assert_eq!(nullspace(&row).len(), 2);

        let m = MatrixFp::from_rows(&[f.elems(&[1, 2, 4]), f.elems(&[1, 3, 9])], 3, 101);
        let ns = nullspace(&m);
        assert_eq!(ns, vec![f.elems(&[6, 96, 1])]);
        assert!(m.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn forms_to_basis_examples() {
        let f = f101();
        let s = forms_to_basis(&[form(&f, &[1, 0, 0])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[f.elems(&[0, 1, 0]), f.elems(&[0, 0, 1])]);

        let s = forms_to_basis(&[form(&f, &[1, 1, 1]), form(&f, &[1, 2, 4])], 2).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s.basis(), &[f.elems(&[2, 98, 1])]);

        let err = forms_to_basis(&[form(&f, &[1, 0]), form(&f, &[0, 1])], 1).unwrap_err();
        assert_eq!(err, LinalgError::DegenerateSubspace);
    }

    #[test]
    fn dependent_forms_are_dropped() {
        let f = f101();
        let s =
            ProjSubspace::from_forms(&[form(&f, &[1, 1, 0]), form(&f, &[2, 2, 0]), form(&f, &[0, 0, 1])], 2).unwrap();
        assert_eq!(s.forms().len(), 2);
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn intersection_examples() {
        let f = f101();
        let l1 = forms_to_basis(&[form(&f, &[1, 0, 0])], 2).unwrap();
        let l2 = forms_to_basis(&[form(&f, &[0, 1, 0])], 2).unwrap();
        assert_eq!(subspace_intersection_dim(&l1, &l2), 0);
        assert_eq!(subspace_intersection_dim(&l1, &l1), 1);

        // V(x0, x3) is a plane in P^4; meeting the hyperplane V(x1) leaves
        // V(x0, x1, x3), a line.
        let a = forms_to_basis(&[form(&f, &[1, 0, 0, 0, 0]), form(&f, &[0, 0, 0, 1, 0])], 4).unwrap();
        let b = forms_to_basis(&[form(&f, &[0, 1, 0, 0, 0])], 4).unwrap();
        let stacked = MatrixFp::from_rows(&[a.forms(), b.forms()].concat(), 5, 101);
        assert_eq!(stacked.rank(), 3);
        assert_eq!(subspace_intersection_dim(&a, &b), 1);
        assert_eq!(subspace_intersection_dim(&b, &a), 1);

        // two points
        let p = forms_to_basis(&[form(&f, &[1, 0, 0]), form(&f, &[0, 1, 0])], 2).unwrap();
        let q = forms_to_basis(&[form(&f, &[0, 1, 0]), form(&f, &[0, 0, 1])], 2).unwrap();
        assert_eq!(subspace_intersection_dim(&p, &q), -1);
    }

    #[test]
    fn point_membership() {
        let f = f101();
        let s = forms_to_basis(&[form(&f, &[1, 0, 0])], 2).unwrap();
        assert!(point_on_subspace(&f.elems(&[0, 1, 0]), &s));
        assert!(!point_on_subspace(&f.elems(&[1, 0, 0]), &s));
        let h = forms_to_basis(&[form(&f, &[1, 1, 1])], 2).unwrap();
        assert!(point_on_subspace(&f.elems(&[2, 98, 1]), &h));
    }

    #[test]
    fn affine_restriction_of_subspaces() {
        let f = f101();
        let h = forms_to_basis(&[form(&f, &[0, 1, 0])], 2).unwrap();
        let a = AffineSubspace::from_projective(&h).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.contains_point(&f.elems(&[0, 7])));
        assert!(!a.contains_point(&f.elems(&[1, 7])));
        assert_eq!(a.closure().dim(), 1);

        let inf = forms_to_basis(&[form(&f, &[1, 0, 0])], 2).unwrap();
        assert!(AffineSubspace::from_projective(&inf).is_none());
    }

    #[test]
    fn from_basis_round_trip() {
        let f = f101();
        let s = ProjSubspace::from_basis(&[f.elems(&[1, 2, 3, 4]), f.elems(&[0, 1, 1, 0])], 3).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.forms().len(), 2);
        for b in s.basis() {
            assert!(s.contains_point(b));
        }
    }
}
