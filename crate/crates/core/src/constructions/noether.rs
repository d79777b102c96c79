use super::{basic_family, main_family, ConstructionError, Eps, FamilyParams, SubspaceFamily};
use crate::field::{FieldConfig, Scalar};
use crate::linalg::MatrixFp;

/// A linear map `x -> rows · x` with the index of the family member it
/// came from: `A^n -> A^r` on `(x1..xn)` (rows of length `n`), or a
/// projection `P^n --> P^r` on `(x0..xn)` (rows of length `n + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapSpec {
    pub n: usize,
    pub rows: Vec<Vec<Scalar>>,
    pub source_index: Vec<u64>,
}

impl LinearMapSpec {
    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn identity(n: usize, field: &FieldConfig) -> Self {
        LinearMapSpec { n, rows: MatrixFp::identity(n, field.prime()).to_rows(), source_index: Vec::new() }
    }
}

/// Candidate Noether normalizations `A^n -> A^r` for affine varieties of
/// dimension `r` and degree at most `d`.
///
/// Builds an evasive `(n-r-1)`-subspace family inside the hyperplane at
/// infinity `P^(n-1)` (coordinates `x1..xn`) — the main family at `eps`, or
/// the basic family when `eps` is absent — and emits the `r` defining forms
/// of each member as a map. A member that misses the part of `V` at
/// infinity gives a finite map on `V`. Degenerate members are skipped.
pub fn noether_maps(
    n: usize,
    d: usize,
    r: usize,
    eps: Option<Eps>,
    field: &FieldConfig,
) -> Result<Vec<LinearMapSpec>, ConstructionError> {
    if n == 0 || r > n || d == 0 {
        return Err(ConstructionError::InvalidParams(format!(
            "need n >= 1, d >= 1 and r <= n, got n = {n}, d = {d}, r = {r}"
        )));
    }
    if let Some(e) = eps {
        super::check_eps(e)?;
    }
    if r == n {
        return Ok(vec![LinearMapSpec::identity(n, field)]);
    }
    if r == 0 {
        // the center is all of P^(n-1); only finite sets map finitely to a point
        return Ok(vec![LinearMapSpec { n, rows: Vec::new(), source_index: Vec::new() }]);
    }
    let fam = centers(n, d, r, eps, field)?;
    Ok(fam
        .members()
        .iter()
        .filter(|m| !m.degenerate)
        .map(|m| {
            let w = m.subspace.as_projective().expect("projective centers");
            LinearMapSpec {
                n,
                rows: w.forms().iter().map(|f| f.coeffs().to_vec()).collect(),
                source_index: m.index.clone(),
            }
        })
        .collect())
}

/// Candidate finite projections `P^n --> P^r` for projective varieties of
/// dimension `r` and degree at most `d`: the `r + 1` defining forms of each
/// member of an evasive `(n-r-1)`-subspace family of `P^n`. A member that
/// misses `V` is a center of projection, and the projection is finite and
/// surjective on `V`.
pub fn projective_noether_maps(
    n: usize,
    d: usize,
    r: usize,
    eps: Option<Eps>,
    field: &FieldConfig,
) -> Result<Vec<LinearMapSpec>, ConstructionError> {
    if n == 0 || r > n || d == 0 {
        return Err(ConstructionError::InvalidParams(format!(
            "need n >= 1, d >= 1 and r <= n, got n = {n}, d = {d}, r = {r}"
        )));
    }
    if let Some(e) = eps {
        super::check_eps(e)?;
    }
    if r == n {
        return Ok(vec![LinearMapSpec {
            n,
            rows: MatrixFp::identity(n + 1, field.prime()).to_rows(),
            source_index: Vec::new(),
        }]);
    }
    let params = FamilyParams::new(n, d, n - r - 1)?;
    let fam = match eps {
        Some(e) => main_family(&params.with_eps(e)?, field)?,
        None => basic_family(&params, field)?,
    };
    Ok(fam
        .members()
        .iter()
        .filter(|m| !m.degenerate)
        .map(|m| LinearMapSpec {
            n,
            rows: m
                .subspace
                .as_projective()
                .expect("projective centers")
                .forms()
                .iter()
                .map(|f| f.coeffs().to_vec())
                .collect(),
            source_index: m.index.clone(),
        })
        .collect())
}

fn centers(
    n: usize,
    d: usize,
    r: usize,
    eps: Option<Eps>,
    field: &FieldConfig,
) -> Result<SubspaceFamily, ConstructionError> {
    let params = FamilyParams::new(n - 1, d, n - r - 1)?;
    match eps {
        Some(e) => main_family(&params.with_eps(e)?, field),
        None => basic_family(&params, field),
    }
}
